"""
Lie algebra model.

Structure constants are stored as a nested tuple f[a][b][c] (0-based) with
[X_a, X_b] = sum_c f[a][b][c] X_c, exactly as the catalog prints them.
"""

from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from jacobilie.symexpr import normalize, substitute, to_expr, to_text

Constants = Tuple[Tuple[Tuple[Any, ...], ...], ...]


class LieAlgebra(BaseModel):
    """
    A real Lie algebra given by structure constants in a fixed basis.

    Attributes:
        name: Catalog name (A1, A2, I, II, ..., IX)
        dim: Dimension, 2 or 3
        constants: f[a][b][c] with [X_a, X_b] = f[a][b][c] X_c
        parameter: Name of the free parameter for parametric families (a)
        parameter_condition: Human readable admissible range of the parameter
        description: Free text shown by the catalog view
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(..., min_length=1, description="Catalog name")
    dim: int = Field(..., ge=2, le=3, description="Dimension of the algebra")
    constants: Constants = Field(..., description="Structure constants f[a][b][c]")
    parameter: Optional[str] = Field(default=None, description="Free parameter name")
    parameter_condition: str = Field(default="", description="Admissible parameter range")
    description: str = Field(default="", description="Catalog description")

    @model_validator(mode="after")
    def check_shape(self) -> "LieAlgebra":
        n = self.dim
        if len(self.constants) != n or any(
            len(row) != n or any(len(col) != n for col in row) for row in self.constants
        ):
            raise ValueError(f"Structure constants of {self.name} must be {n}x{n}x{n}")
        return self

    @classmethod
    def from_brackets(
        cls,
        name: str,
        dim: int,
        brackets: Mapping[Tuple[int, int], Sequence[Any]],
        **kwargs: Any,
    ) -> "LieAlgebra":
        """
        Build an algebra from its non-zero brackets.

        Args:
            name: Catalog name
            dim: Dimension
            brackets: Maps 1-based (i, j) with i < j to the coefficient list of [X_i, X_j]
        """
        f = [[[sympy.Integer(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coefficients in brackets.items():
            if len(coefficients) != dim:
                raise ValueError(f"Bracket [X{i},X{j}] needs {dim} coefficients")
            for k, coefficient in enumerate(coefficients):
                value = normalize(coefficient)
                f[i - 1][j - 1][k] = value
                f[j - 1][i - 1][k] = normalize(-value)
        constants = tuple(tuple(tuple(col) for col in row) for row in f)
        return cls(name=name, dim=dim, constants=constants, **kwargs)

    def f(self, a: int, b: int, c: int) -> sympy.Expr:
        """Structure constant f_ab^c, 0-based."""
        return to_expr(self.constants[a][b][c])

    @property
    def is_parametric(self) -> bool:
        return self.parameter is not None and any(
            to_expr(v).free_symbols for row in self.constants for col in row for v in col
        )

    @property
    def is_abelian(self) -> bool:
        return all(to_expr(v) == 0 for row in self.constants for col in row for v in col)

    def instantiate(self, value: Any) -> "LieAlgebra":
        """Fix the free parameter to a value, keeping the catalog name."""
        if self.parameter is None:
            return self
        constants = tuple(
            tuple(tuple(substitute(v, {self.parameter: value}) for v in col) for col in row)
            for row in self.constants
        )
        return self.model_copy(update={"constants": constants, "parameter": None})

    def brackets(self) -> Dict[Tuple[int, int], Tuple[sympy.Expr, ...]]:
        """Non-zero brackets [X_i, X_j], 1-based, i < j."""
        result = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                row = tuple(self.f(i, j, k) for k in range(self.dim))
                if any(v != 0 for v in row):
                    result[(i + 1, j + 1)] = row
        return result

    def bracket_lines(self) -> List[str]:
        """Printable brackets such as "[X1, X2] = -X2 - X3"."""
        basis = sympy.symbols(f"X1:{self.dim + 1}")
        lines = []
        for (i, j), row in self.brackets().items():
            combination = sum(coefficient * basis[k] for k, coefficient in enumerate(row))
            lines.append(f"[X{i}, X{j}] = {to_text(combination)}")
        return lines

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "parameter": self.parameter,
            "parameter_condition": self.parameter_condition,
            "brackets": self.bracket_lines(),
        }

    def __str__(self) -> str:
        return f"LieAlgebra(name='{self.name}', dim={self.dim})"
