"""
Hamiltonian example and reduction models.

Examples carry the structure and functions as printed together with the
printed vector fields, commutators and bracket relations so that a
verification run can compare computed values against them.
"""

from enum import Enum
from typing import Any, Dict, Optional, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator

from jacobilie.models.jacobi import AlgJacobiStructure, GroupJacobiStructure
from jacobilie.symexpr import normalize, to_text


class LinearRelation(BaseModel):
    """
    A relation op(i, j) = sum_k coefficient_k * generator_k, 1-based.

    Used for both [X_i, X_j] and {f_i, f_j}.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    left: int = Field(..., ge=1)
    right: int = Field(..., ge=1)
    coefficients: Dict[int, Any] = Field(default_factory=dict)

    @field_validator("coefficients", mode="before")
    @classmethod
    def coerce_coefficients(cls, v: Any) -> Dict[int, sympy.Expr]:
        return {int(k): normalize(c) for k, c in dict(v).items()}

    def text(self, symbol: str, open_: str = "[", close: str = "]") -> str:
        terms = [
            f"{to_text(c)}*{symbol}{k}" if c != 1 else f"{symbol}{k}"
            for k, c in sorted(self.coefficients.items())
            if c != 0
        ]
        rhs = " + ".join(terms) if terms else "0"
        return f"{open_}{symbol}{self.left}, {symbol}{self.right}{close} = {rhs}"


class SecondaryExpectation(str, Enum):
    """What the printed discussion says about the second class of an example."""

    DEPENDENT = "dependent"
    NO_BASIS = "no-basis"


class SecondaryClass(BaseModel):
    """
    Another class of the same row, discussed alongside an example.

    Attributes:
        structure: Algebra-level representative
        lifted: Printed lift to the group
        candidates: Functions tried as Hamiltonians
        expectation: Why these functions do not give a Lie system
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    structure: AlgJacobiStructure
    lifted: GroupJacobiStructure
    candidates: Tuple[Any, ...]
    expectation: SecondaryExpectation = SecondaryExpectation.NO_BASIS

    @field_validator("candidates", mode="before")
    @classmethod
    def coerce_candidates(cls, v: Any) -> Tuple[sympy.Expr, ...]:
        return tuple(normalize(f) for f in v)


class HamiltonianExample(BaseModel):
    """
    A worked Jacobi-Lie Hamiltonian system.

    Attributes:
        number: Example number (1-6)
        algebra: Algebra the structure is taken from
        group: Group carrying the lifted structure
        structure: Algebra-level structure
        lifted: Printed group-level structure
        hamiltonians: Hamiltonian functions f_1..f_n
        fields: Printed Hamiltonian vector fields
        commutators: Printed non-zero commutators
        brackets: Printed non-zero Jacobi brackets
        substitutions: Variable renamings applied to printed functions
        domain: Domain restrictions in words
        notes: Further remarks carried into reports
        secondary: Second classes discussed with the example
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    number: int = Field(..., ge=1)
    algebra: str
    group: str
    structure: AlgJacobiStructure
    lifted: GroupJacobiStructure
    hamiltonians: Tuple[Any, ...]
    fields: Tuple[Tuple[Any, ...], ...] = Field(default_factory=tuple)
    commutators: Tuple[LinearRelation, ...] = Field(default_factory=tuple)
    brackets: Tuple[LinearRelation, ...] = Field(default_factory=tuple)
    substitutions: Dict[str, str] = Field(default_factory=dict)
    domain: Tuple[str, ...] = Field(default_factory=tuple)
    notes: Tuple[str, ...] = Field(default_factory=tuple)
    secondary: Tuple[SecondaryClass, ...] = Field(default_factory=tuple)

    @field_validator("hamiltonians", mode="before")
    @classmethod
    def coerce_hamiltonians(cls, v: Any) -> Tuple[sympy.Expr, ...]:
        return tuple(normalize(f) for f in v)

    @field_validator("fields", mode="before")
    @classmethod
    def coerce_fields(cls, v: Any) -> Tuple[Tuple[sympy.Expr, ...], ...]:
        return tuple(tuple(normalize(c) for c in field) for field in v)

    def printed_commutator(self, i: int, j: int) -> Optional[LinearRelation]:
        return next((r for r in self.commutators if (r.left, r.right) == (i, j)), None)

    def to_dict(self) -> dict:
        return {
            "number": self.number,
            "algebra": self.algebra,
            "group": self.group,
            "structure": self.structure.to_dict(),
            "lifted": self.lifted.to_dict(),
            "hamiltonians": [to_text(f) for f in self.hamiltonians],
        }


class ReductionBranch(BaseModel):
    """
    One case of a reduction of a solution family to a class representative.

    Attributes:
        label: Case description, e.g. "l12 = -l13"
        bindings: Substitutions defining the case
        matrix: Reducing automorphism, None for Poisson cases
        determinant: Printed determinant of the matrix
        target: Representative reached by transform(family, matrix)
        poisson: True when the case has vanishing Reeb vector
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    bindings: Dict[str, Any] = Field(default_factory=dict)
    matrix: Any = None
    determinant: Any = None
    target: Optional[AlgJacobiStructure] = None
    poisson: bool = False

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, v: Any) -> Optional[sympy.ImmutableMatrix]:
        return None if v is None else sympy.ImmutableMatrix(v)

    @field_validator("determinant", mode="before")
    @classmethod
    def coerce_determinant(cls, v: Any) -> Optional[sympy.Expr]:
        return None if v is None else normalize(v)


class Reduction(BaseModel):
    """
    Explicit reduction of a row's family by automorphisms.

    Attributes:
        name: Identifier used by the CLI
        algebra: Catalog name
        row: Row whose family is reduced
        branches: Cases
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    algebra: str
    row: str
    branches: Tuple[ReductionBranch, ...]
