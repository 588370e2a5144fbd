"""
Jacobi structure models.

A Jacobi pair is an antisymmetric bivector Λ together with a Reeb vector E.
At algebra level the components are constants in the parameters l_ij, e_i
(and a); on the group they are functions of x1..x3.
"""

from enum import Enum
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from jacobilie.symexpr import normalize, substitute, to_expr, to_text
from jacobilie.symexpr.symbols import sorted_symbols


class Relation(str, Enum):
    """How a side condition constrains its expression."""

    NONZERO = "nonzero"
    ZERO = "zero"


class SideCondition(BaseModel):
    """
    A constraint carried next to a table row or class.

    Attributes:
        expr: Constrained expression
        relation: Whether expr must vanish or must not vanish
        inferred: True when the constraint is implied (e.g. by a denominator)
            rather than printed
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    expr: Any
    relation: Relation = Relation.NONZERO
    inferred: bool = False

    @field_validator("expr", mode="before")
    @classmethod
    def coerce_expr(cls, v: Any) -> sympy.Expr:
        return normalize(v)

    def holds(self, bindings: Mapping[Any, Any]) -> Optional[bool]:
        """Evaluate at bindings; None when symbols remain."""
        value = substitute(self.expr, bindings)
        if value.free_symbols:
            return None
        return (value == 0) == (self.relation is Relation.ZERO)

    def text(self) -> str:
        op = "=" if self.relation is Relation.ZERO else "!="
        suffix = " (inferred)" if self.inferred else ""
        return f"{to_text(self.expr)} {op} 0{suffix}"


class JacobiPair(BaseModel):
    """
    Antisymmetric bivector plus Reeb vector.

    Attributes:
        lam: dim x dim antisymmetric matrix of components Λ^{ij}
        reeb: Components E^i
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lam: Any = Field(..., description="Bivector components")
    reeb: Tuple[Any, ...] = Field(..., description="Reeb vector components")

    @field_validator("lam", mode="before")
    @classmethod
    def coerce_lam(cls, v: Any) -> sympy.ImmutableMatrix:
        m = sympy.ImmutableMatrix(sympy.ImmutableMatrix(v).applyfunc(normalize))
        if not m.is_square or m.rows not in (2, 3):
            raise ValueError("Bivector must be a 2x2 or 3x3 matrix")
        return m

    @field_validator("reeb", mode="before")
    @classmethod
    def coerce_reeb(cls, v: Any) -> Tuple[sympy.Expr, ...]:
        return tuple(normalize(c) for c in v)

    @model_validator(mode="after")
    def check_antisymmetry(self) -> "JacobiPair":
        n = self.lam.rows
        if len(self.reeb) != n:
            raise ValueError(f"Reeb vector needs {n} components, got {len(self.reeb)}")
        for i in range(n):
            for j in range(i, n):
                if normalize(self.lam[i, j] + self.lam[j, i]) != 0:
                    raise ValueError(f"Bivector is not antisymmetric at ({i + 1},{j + 1})")
        return self

    @classmethod
    def from_components(
        cls,
        dim: int,
        lam: Mapping[Any, Any],
        reeb: Sequence[Any],
        **kwargs: Any,
    ):
        """
        Build from upper-triangle components.

        Args:
            dim: Dimension
            lam: Maps 1-based (i, j) or "ij" with i < j to Λ^{ij}; missing entries are 0
            reeb: E^1..E^dim
        """
        m = sympy.zeros(dim, dim)
        for key, value in lam.items():
            i, j = _pair_index(key)
            if not 1 <= i < j <= dim:
                raise ValueError(f"Bivector index {key} out of range for dimension {dim}")
            v = to_expr(value)
            m[i - 1, j - 1] = v
            m[j - 1, i - 1] = -v
        return cls(lam=m, reeb=tuple(reeb), **kwargs)

    @property
    def dim(self) -> int:
        return self.lam.rows

    @property
    def parameters(self) -> Tuple[sympy.Symbol, ...]:
        """Free symbols of all components, ordered by name."""
        symbols = set(self.lam.free_symbols)
        for component in self.reeb:
            symbols |= component.free_symbols
        return sorted_symbols(symbols)

    @property
    def is_concrete(self) -> bool:
        return not self.parameters

    def reeb_row(self) -> sympy.ImmutableMatrix:
        return sympy.ImmutableMatrix([list(self.reeb)])

    def reeb_column(self) -> sympy.ImmutableMatrix:
        return sympy.ImmutableMatrix(list(self.reeb))

    def upper(self) -> Dict[str, sympy.Expr]:
        """Upper-triangle components keyed "ij"."""
        return {
            f"{i + 1}{j + 1}": self.lam[i, j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        }

    def substitute(self, bindings: Mapping[Any, Any]):
        """Return a copy with symbols replaced."""
        updates: Dict[str, Any] = {
            "lam": self.lam.applyfunc(lambda v: substitute(v, bindings)),
            "reeb": tuple(substitute(v, bindings) for v in self.reeb),
        }
        return type(self)(**{**dict(self), **updates})

    def same_as(self, other: "JacobiPair") -> bool:
        """Structural equality of canonical components."""
        return (
            self.dim == other.dim
            and all(normalize(u - v) == 0 for u, v in zip(self.lam, other.lam))
            and all(normalize(u - v) == 0 for u, v in zip(self.reeb, other.reeb))
        )

    def to_dict(self) -> dict:
        return {
            "lambda": {k: to_text(v) for k, v in self.upper().items()},
            "reeb": [to_text(v) for v in self.reeb],
        }

    def __str__(self) -> str:
        terms = [f"{to_text(v)}*d{k}" for k, v in self.upper().items() if v != 0]
        lam = " + ".join(terms) if terms else "0"
        reeb = ", ".join(to_text(v) for v in self.reeb)
        return f"Λ = {lam}; E = ({reeb})"


class AlgJacobiStructure(JacobiPair):
    """
    Algebra-level Jacobi structure with its table side conditions.

    Attributes:
        conditions: Side conditions printed or inferred for this structure
    """

    conditions: Tuple[SideCondition, ...] = Field(default_factory=tuple)

    def substitute(self, bindings: Mapping[Any, Any]) -> "AlgJacobiStructure":
        result = super().substitute(bindings)
        conditions = tuple(
            c.model_copy(update={"expr": substitute(c.expr, bindings)}) for c in self.conditions
        )
        return result.model_copy(update={"conditions": conditions})

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["conditions"] = [c.text() for c in self.conditions]
        return data


class GroupJacobiStructure(JacobiPair):
    """
    Jacobi structure on a group manifold in coordinates x1..x_dim.

    Attributes:
        group: Catalog name of the group
    """

    group: str = ""

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["group"] = self.group
        return data


class EquivalenceClass(BaseModel):
    """
    Representative of an equivalence class printed for a table row.

    Attributes:
        id: Identifier such as "III.2.a"
        structure: Representative structure, conditions describe where it applies
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    structure: AlgJacobiStructure


class TableRow(BaseModel):
    """
    One row of the classification: a solution family and its classes.

    Attributes:
        id: Identifier such as "III.2"
        algebra: Catalog name of the algebra
        family: General solution family
        classes: Printed class representatives
        flags: Notes about print corrections or inferred data
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    algebra: str
    family: AlgJacobiStructure
    classes: Tuple[EquivalenceClass, ...] = Field(default_factory=tuple)
    flags: Tuple[str, ...] = Field(default_factory=tuple)

    def find_class(self, class_id: str) -> Optional[EquivalenceClass]:
        return next((c for c in self.classes if c.id == class_id), None)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "algebra": self.algebra,
            "family": self.family.to_dict(),
            "classes": [{"id": c.id, **c.structure.to_dict()} for c in self.classes],
            "flags": list(self.flags),
        }


def _pair_index(key: Any) -> Tuple[int, int]:
    if isinstance(key, str):
        digits = key.strip()
        if len(digits) != 2 or not digits.isdigit():
            raise ValueError(f"Bivector key must look like '12', got {key!r}")
        return int(digits[0]), int(digits[1])
    i, j = key
    return int(i), int(j)
