"""
Geometric objects on the group manifold: vielbeins, vector fields and
antisymmetric multivectors.
"""

from itertools import combinations
from typing import Any, Dict, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy.combinatorics import Permutation

from jacobilie.symexpr import normalize, to_text
from jacobilie.symexpr.symbols import coordinates


class Vielbein(BaseModel):
    """
    Left-invariant frame of a group in coordinates x1..x_dim.

    inv_e[mu, a] is the mu-th coordinate component of the frame field e_a,
    i.e. the matrix as printed. e = inv_e^{-1} holds the dual coframe,
    e[a, mu] = e^a_mu.

    Attributes:
        group: Catalog name
        inv_e: Frame matrix
        e: Coframe matrix (computed when not supplied)
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    group: str
    inv_e: Any
    e: Any = None

    @field_validator("inv_e", mode="before")
    @classmethod
    def coerce_frame(cls, v: Any) -> sympy.ImmutableMatrix:
        m = sympy.ImmutableMatrix(v)
        if not m.is_square or m.rows not in (2, 3):
            raise ValueError("Vielbein must be a 2x2 or 3x3 matrix")
        if normalize(m.det()) == 0:
            raise ValueError("Vielbein is singular")
        return m

    @model_validator(mode="after")
    def compute_coframe(self) -> "Vielbein":
        if self.e is None:
            inverse = self.inv_e.inv().applyfunc(sympy.simplify)
            object.__setattr__(self, "e", sympy.ImmutableMatrix(inverse))
        else:
            object.__setattr__(self, "e", sympy.ImmutableMatrix(self.e))
        return self

    @property
    def dim(self) -> int:
        return self.inv_e.rows

    @property
    def coordinates(self) -> Tuple[sympy.Symbol, ...]:
        return coordinates(self.dim)

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "inv_e": _matrix_text(self.inv_e),
            "e": _matrix_text(self.e),
        }


class VectorField(BaseModel):
    """Vector field given by its components in coordinates x1..x_dim."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    components: Tuple[Any, ...]

    @field_validator("components", mode="before")
    @classmethod
    def coerce_components(cls, v: Any) -> Tuple[sympy.Expr, ...]:
        comps = tuple(normalize(c) for c in v)
        if len(comps) not in (2, 3):
            raise ValueError("Vector fields live in dimension 2 or 3")
        return comps

    @property
    def dim(self) -> int:
        return len(self.components)

    def __getitem__(self, index: int) -> sympy.Expr:
        return self.components[index]

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(components=[u - v for u, v in zip(self.components, other.components)])

    def minus_combination(self, coefficients, fields) -> "VectorField":
        """self minus sum of coefficient * field."""
        comps = list(self.components)
        for coefficient, field in zip(coefficients, fields):
            comps = [u - coefficient * v for u, v in zip(comps, field.components)]
        return VectorField(components=comps)

    def to_list(self) -> list:
        return [to_text(c) for c in self.components]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_list()) + ")"


class Multivector(BaseModel):
    """
    Totally antisymmetric contravariant tensor of a given degree.

    Only strictly increasing index tuples are stored; other orderings are
    recovered with the permutation sign. Degrees above the dimension are
    allowed only as the zero multivector.

    Attributes:
        degree: Number of indices
        dim: Manifold dimension
        components: Maps increasing 0-based index tuples to components
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: int = Field(..., ge=0, le=3)
    dim: int = Field(..., ge=2, le=3)
    components: Dict[Tuple[int, ...], Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_indices(self) -> "Multivector":
        if self.degree > self.dim and self.components:
            raise ValueError("A multivector of degree above the dimension must be zero")
        for key in self.components:
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise ValueError(f"Index {key} is not strictly increasing of length {self.degree}")
            if any(not 0 <= i < self.dim for i in key):
                raise ValueError(f"Index {key} out of range")
        return self

    @classmethod
    def from_function(cls, degree: int, dim: int, fn) -> "Multivector":
        """Build from fn(index_tuple) evaluated on increasing tuples."""
        comps = {}
        if degree <= dim:
            for key in combinations(range(dim), degree):
                comps[key] = normalize(fn(key))
        return cls(degree=degree, dim=dim, components=comps)

    @classmethod
    def from_vector(cls, components) -> "Multivector":
        return cls.from_function(1, len(components), lambda k: components[k[0]])

    @classmethod
    def from_bivector(cls, matrix) -> "Multivector":
        m = sympy.ImmutableMatrix(matrix)
        return cls.from_function(2, m.rows, lambda k: m[k[0], k[1]])

    def component(self, *index: int) -> sympy.Expr:
        """Component at any ordering of 0-based indices."""
        if len(index) != self.degree:
            raise ValueError(f"Expected {self.degree} indices")
        if len(set(index)) < len(index):
            return sympy.Integer(0)
        order = sorted(range(len(index)), key=lambda i: index[i])
        key = tuple(index[i] for i in order)
        value = self.components.get(key, sympy.Integer(0))
        sign = Permutation(order).signature() if len(index) > 1 else 1
        return value if sign > 0 else -value

    def values(self):
        return list(self.components.values())

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "components": {
                "".join(str(i + 1) for i in key): to_text(v)
                for key, v in self.components.items()
            },
        }


def _matrix_text(m: sympy.MatrixBase) -> list:
    return [[to_text(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
