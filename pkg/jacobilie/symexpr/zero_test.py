"""
Two-tier zero test.

The exact tier compares canonical forms. When the canonical form is not a
number but may still vanish through a transcendental identity, the numeric
tier evaluates it at seeded random rational points with mpmath at high
precision. Points outside the domain (poles, ln of non-positive values) are
resampled.
"""

import logging
import random
from enum import Enum
from typing import Any, Callable, Optional, Sequence

import mpmath
import sympy
from pydantic import BaseModel, ConfigDict

from jacobilie.config import Settings, settings as default_settings
from jacobilie.errors import DomainError
from jacobilie.symexpr.kernel import is_transcendental_free, normalize
from jacobilie.symexpr.symbols import sorted_symbols

logger = logging.getLogger(__name__)


class ZeroTier(str, Enum):
    """Which tier decided a zero test."""

    EXACT = "exact"
    NUMERIC = "numeric"
    NONZERO = "nonzero"


class ZeroTest(BaseModel):
    """Outcome of a zero test: the verdict and the tier that produced it."""

    model_config = ConfigDict(frozen=True)

    is_zero: bool
    tier: ZeroTier

    def __bool__(self) -> bool:
        return self.is_zero


EXACT_ZERO = ZeroTest(is_zero=True, tier=ZeroTier.EXACT)
NONZERO = ZeroTest(is_zero=False, tier=ZeroTier.NONZERO)


class ZeroTester:
    """
    Stateful zero tester owning the random source for the numeric tier.

    Two testers built with the same seed and fed the same expressions in the
    same order draw the same sample points.

    Attributes:
        rng: Random source for sample points
        config: Settings supplying precision, bounds and thresholds
    """

    def __init__(
        self,
        rng: Optional[random.Random] = None,
        config: Optional[Settings] = None,
    ):
        self.config = config or default_settings
        self.rng = rng if rng is not None else random.Random(self.config.seed)

    @classmethod
    def seeded(cls, seed: Optional[int] = None, config: Optional[Settings] = None) -> "ZeroTester":
        """Build a tester from a seed (uses the configured seed if None)."""
        cfg = config or default_settings
        return cls(random.Random(cfg.seed if seed is None else seed), cfg)

    def test(self, expr: Any) -> ZeroTest:
        """
        Decide whether an expression is identically zero.

        Args:
            expr: Expression to test

        Returns:
            ZeroTest with the tier that decided

        Raises:
            DomainError: If no valid sample point can be found
        """
        canonical = normalize(expr)
        if canonical == 0:
            return EXACT_ZERO
        if canonical.is_Number or _is_exact_rational(canonical):
            return NONZERO
        return self._numeric(canonical)

    def is_zero(self, expr: Any) -> bool:
        return self.test(expr).is_zero

    def sample_point(self, count: int) -> list:
        """Draw `count` rational coordinates as mpmath numbers."""
        n_bound = self.config.sample_numerator_bound
        d_bound = self.config.sample_denominator_bound
        return [
            mpmath.mpf(self.rng.randint(-n_bound, n_bound)) / self.rng.randint(1, d_bound)
            for _ in range(count)
        ]

    def _numeric(self, canonical: sympy.Expr) -> ZeroTest:
        symbols = sorted_symbols(canonical.free_symbols)
        fn = sympy.lambdify(symbols, canonical, modules="mpmath")
        threshold = mpmath.mpf(self.config.zero_threshold)

        with mpmath.workdps(self.config.precision_dps):
            accepted = 0
            rejected = 0
            while accepted < self.config.zero_test_points:
                value = evaluate_at(fn, self.sample_point(len(symbols)))
                if value is None:
                    rejected += 1
                    if rejected > self.config.max_resample_attempts:
                        raise DomainError(
                            f"No sample point in the domain of {canonical} "
                            f"after {rejected} attempts"
                        )
                    continue
                accepted += 1
                if abs(value) >= threshold:
                    return NONZERO

        logger.debug("Numeric tier accepted %s (%d rejected points)", canonical, rejected)
        return ZeroTest(is_zero=True, tier=ZeroTier.NUMERIC)


def _is_exact_rational(canonical: sympy.Expr) -> bool:
    """Rational functions with rational coefficients; their canonical form is zero iff they are."""
    if not is_transcendental_free(canonical):
        return False
    return all(p.exp.is_Integer for p in canonical.atoms(sympy.Pow))


def evaluate_at(fn: Callable[..., Any], point: Sequence[Any]) -> Optional[mpmath.mpf]:
    """
    Evaluate a lambdified function, returning None outside its real domain.

    Complex results only arise from ln of a negative argument, which counts
    as outside the domain.
    """
    try:
        value = fn(*point)
    except (ZeroDivisionError, ValueError, OverflowError):
        return None
    if isinstance(value, mpmath.mpc):
        return None
    value = mpmath.mpf(value)
    if mpmath.isnan(value) or mpmath.isinf(value):
        return None
    return value


def is_zero(expr: Any, tester: Optional[ZeroTester] = None) -> bool:
    """Module-level convenience using a freshly seeded tester."""
    return (tester or ZeroTester.seeded()).is_zero(expr)


def zero_test(expr: Any, tester: Optional[ZeroTester] = None) -> ZeroTest:
    """Like is_zero but reports the deciding tier."""
    return (tester or ZeroTester.seeded()).test(expr)
