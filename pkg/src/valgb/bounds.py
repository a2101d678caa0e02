"""Closed-form degree and coefficient-valuation bounds for reduced bases.

The degree bound is Dube's 2(d^2/2 + d)^(2^(n-2)); coefficient valuations
over the p-adics are bounded by (A/2) * log_p(C^2 A) with A the ideal's
dimension in the bound degree and C the largest integer coefficient.  Both
are evaluated in exact arithmetic; the log is taken as an integer ceiling,
which only makes the bound more conservative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lifting import clear_denominators, hilbert_dim
from .weights import WeightedOrder


def dube_degree_bound(n: int, d: int) -> int:
    """2(d^2/2 + d)^(2^(n-2)), ceiled to an integer degree."""
    if n < 2:
        raise ValueError("degree bound requires at least two variables")
    if d < 1:
        raise ValueError("generator degree must be positive")
    value = 2 * (Fraction(d * d, 2) + d) ** (2 ** (n - 2))
    return math.ceil(value)


def ceil_log(base: int, x) -> int:
    """Smallest k >= 0 with base^k >= x."""
    if x <= 1:
        return 0
    k = 0
    power = 1
    while power < x:
        power *= base
        k += 1
    return k


def valuation_bound(C: int, A: int, p: int) -> Fraction:
    """(A/2) * ceil(log_p(C^2 A)) as an exact rational."""
    if C < 1 or A < 1:
        raise ValueError("coefficient and dimension bounds must be positive")
    return Fraction(A, 2) * ceil_log(p, C * C * A)


@dataclass
class BoundReport:
    nvars: int
    max_degree: int
    coeff_bound: int
    degree_bound: int
    evaluated_degree: int
    ideal_dim: int
    valuation_bound: Fraction
    truncated: bool


def effective_valuation_bound(
    F: list, p: int, order: WeightedOrder, degree_cap: int = 64
) -> BoundReport:
    """Evaluate the valuation bound for concrete generators.

    The bound degree is double exponential in the variable count, so it is
    capped at ``degree_cap``; a capped evaluation is flagged as truncated and
    is a valid bound only when the basis degrees stay at or below the cap.
    """
    F = [clear_denominators(f) for f in F if not f.is_zero()]
    if not F:
        return BoundReport(0, 0, 0, 0, 0, 0, Fraction(0), False)
    nvars = F[0].nvars
    delta = max(f.homogeneous_degree() for f in F)
    C = max(abs(int(c)) for f in F for c in f.terms.values())
    D = dube_degree_bound(nvars, delta)
    evaluated = max(delta, min(D, degree_cap))
    truncated = evaluated < D
    A = hilbert_dim(F, evaluated)
    if A == 0:
        return BoundReport(nvars, delta, C, D, evaluated, 0, Fraction(0), truncated)
    return BoundReport(
        nvars, delta, C, D, evaluated, A, valuation_bound(C, A, p), truncated
    )
