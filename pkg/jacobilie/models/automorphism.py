"""Automorphism family models."""

from enum import Enum
from typing import Any, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator

from jacobilie.errors import UnsupportedAlgebra
from jacobilie.symexpr import normalize, to_text
from jacobilie.symexpr.symbols import sorted_symbols


class FamilyKind(str, Enum):
    """Parametric families can be instantiated, constraint families only described."""

    PARAMETRIC = "parametric"
    CONSTRAINT = "constraint"


class AutomorphismBranch(BaseModel):
    """
    One parametric branch of an automorphism family.

    Attributes:
        label: Branch label ("+", "-", or "" for single-branch families)
        matrix: Entries A[a, k] = A_a^k in the free parameters
        nonzero: Expressions that must not vanish
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str = ""
    matrix: Any
    nonzero: Tuple[Any, ...] = Field(default_factory=tuple)

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, v: Any) -> sympy.ImmutableMatrix:
        m = sympy.ImmutableMatrix(v)
        if not m.is_square:
            raise ValueError("Automorphism matrix must be square")
        return m

    @field_validator("nonzero", mode="before")
    @classmethod
    def coerce_nonzero(cls, v: Any) -> Tuple[sympy.Expr, ...]:
        return tuple(normalize(e) for e in v)

    @property
    def parameters(self) -> Tuple[sympy.Symbol, ...]:
        return sorted_symbols(self.matrix.free_symbols)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "matrix": [[to_text(self.matrix[i, j]) for j in range(self.matrix.cols)]
                       for i in range(self.matrix.rows)],
            "nonzero": [to_text(e) for e in self.nonzero],
        }


class AutomorphismFamily(BaseModel):
    """
    The automorphism group of a catalog algebra.

    Attributes:
        algebra: Catalog name
        kind: Parametric or constraint-only
        description: Name of the group (e.g. "SL(2,R)") or a short summary
        branches: Parametric branches; empty for constraint-only families
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    algebra: str
    kind: FamilyKind = FamilyKind.PARAMETRIC
    description: str = ""
    branches: Tuple[AutomorphismBranch, ...] = Field(default_factory=tuple)

    @property
    def is_parametric(self) -> bool:
        return self.kind is FamilyKind.PARAMETRIC

    def require_parametric(self) -> "AutomorphismFamily":
        """
        Raises:
            UnsupportedAlgebra: For constraint-only families
        """
        if not self.is_parametric:
            raise UnsupportedAlgebra(
                f"Automorphisms of {self.algebra} ({self.description}) are only "
                "available as a constraint"
            )
        return self

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "kind": self.kind.value,
            "description": self.description,
            "branches": [b.to_dict() for b in self.branches],
        }
