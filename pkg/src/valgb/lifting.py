"""Hilbert dimensions, basis reconstruction from an initial ideal, and the
mod-p^m acceleration with verified lifting.

Working over Z/p^m tames the coefficient blow-up of exact rational runs:
substitute x_i -> p^(w_i) x_i, clear denominators and p-content, complete a
basis mod p^m with weight zero, read off the initial monomial ideal, and
reconstruct the reduced rational basis degree by degree with exact linear
algebra.  The reconstruction fails loudly when m was too small, so the whole
pipeline verifies over Q and retries with doubled m.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .division import CoefficientBlowup, StepBudgetExceeded
from .fields import INF, ModPmRing, QpField, padic_valuation
from .groebner import (
    GroebnerBasis,
    buchberger,
    is_basis_of,
    minimal_generators,
    monic,
    reduce_basis,
    sort_basis,
)
from .linalg import bareiss_rank, rref
from .polynomials import (
    Monomial,
    Polynomial,
    mono_degree,
    mono_divides,
    monomials_of_degree,
)
from .weights import WeightedOrder, weight_dot


class LiftInconsistent(ValueError):
    """The claimed initial-ideal generators cannot index an identity block;
    for a mod-p^m run this signals that the modulus exponent was too small."""


def clear_denominators(f: Polynomial) -> Polynomial:
    """Integer-primitive rescaling: coefficients become coprime integers."""
    if f.is_zero():
        return f
    if not isinstance(next(iter(f.terms.values())), Fraction):
        raise ValueError("integer clearing needs rational coefficients")
    scale = 1
    for c in f.terms.values():
        scale = lcm(scale, c.denominator)
    g = 0
    for c in f.terms.values():
        g = gcd(g, int(c * scale))
    return f.scale(Fraction(scale, g))


def _degree_rows(F: list, d: int, columns: list[Monomial]) -> list[list]:
    """Coefficient rows of all monomial multiples of F landing in degree d."""
    field = F[0].field
    nvars = F[0].nvars
    zero = field.zero()
    index = {m: i for i, m in enumerate(columns)}
    rows = []
    for f in F:
        k = d - f.homogeneous_degree()
        if k < 0:
            continue
        for v in monomials_of_degree(nvars, k):
            row = [zero] * len(columns)
            for m, c in f.terms.items():
                row[index[tuple(a + b for a, b in zip(m, v))]] = c
            rows.append(row)
    return rows


def hilbert_dim(F: list, d: int) -> int:
    """Exact dimension over K of the degree-d slice of the ideal <F>."""
    F = [f for f in F if not f.is_zero()]
    if not F:
        return 0
    for f in F:
        if not f.is_homogeneous():
            raise ValueError("generators must be homogeneous")
    field = F[0].field
    columns = monomials_of_degree(F[0].nvars, d)
    rows = _degree_rows(F, d, columns)
    if not rows:
        return 0
    if isinstance(next(iter(F[0].terms.values())), Fraction):
        int_rows = []
        for row in rows:
            den = 1
            for c in row:
                den = lcm(den, c.denominator)
            int_rows.append([int(c * den) for c in row])
        return bareiss_rank(int_rows)
    return len(rref(rows, field)[0])


def lift_groebner(
    F: list, order: WeightedOrder, monomials: list
) -> GroebnerBasis:
    """Reconstruct the reduced basis of <F> from its initial monomial ideal.

    For each degree d occurring among the claimed minimal generators, the
    coefficient matrix of all degree-d multiples of F is row reduced with the
    claimed initial monomials ordered first.  When the claim is consistent
    the pivots land exactly on that block and each target monomial's row is a
    reduced basis element.
    """
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("need at least one nonzero generator")
    field = F[0].field
    nvars = F[0].nvars
    targets = minimal_generators([tuple(m) for m in monomials])
    if not targets:
        raise ValueError("no initial-ideal generators supplied")
    if isinstance(next(iter(F[0].terms.values())), Fraction):
        F = [clear_denominators(f) for f in F]
    out = []
    for d in sorted({mono_degree(m) for m in targets}):
        all_d = monomials_of_degree(nvars, d, order.tiebreak)
        block = [m for m in all_d if any(mono_divides(t, m) for t in targets)]
        rest = [m for m in all_d if not any(mono_divides(t, m) for t in targets)]
        columns = block + rest
        rows = _degree_rows(F, d, columns)
        reduced, pivots = rref(rows, field)
        if pivots != list(range(len(block))):
            raise LiftInconsistent(
                f"initial-ideal claim inconsistent in degree {d}: expected the "
                f"first {len(block)} columns to be pivots, got {pivots}"
            )
        col_of = {m: i for i, m in enumerate(columns)}
        for t in targets:
            if mono_degree(t) != d:
                continue
            row = reduced[col_of[t]]
            terms = {m: c for m, c in zip(columns, row) if not field.is_zero(c)}
            out.append(Polynomial(field, nvars, terms, _clean=True))
    return GroebnerBasis(
        sort_basis(out, order), order, minimal=True, reduced=True, monic=True
    )


def _substitute_weights(f: Polynomial, weights, p: int) -> Polynomial:
    """x_i -> p^(w_i) x_i: each coefficient picks up p^(w . u)."""
    field = f.field
    out = {}
    for m, c in f.terms.items():
        out[m] = field.mul(c, Fraction(p) ** weight_dot(weights, m))
    return Polynomial(field, f.nvars, out, _clean=True)


def _strip_p_content(ring: ModPmRing, f: Polynomial) -> Polynomial:
    """Divide by the largest power of p dividing every coefficient."""
    if f.is_zero():
        return f
    s = min(ring.val(c) for c in f.terms.values())
    if s == 0 or s is INF:
        return f
    q = ring.p**s
    return Polynomial(
        ring, f.nvars, {m: c // q for m, c in f.terms.items()}, _clean=True
    )


def _modpm_normalize(f: Polynomial, order: WeightedOrder) -> Polynomial:
    """Strip p-content; declare noise-level elements zero.

    A reduction that vanishes over Q shows up mod p^m as a polynomial whose
    every coefficient carries at least m minus a bounded number of p-powers,
    so stripping would promote pure truncation noise to a fake basis element.
    Anything with content at m/2 or above is treated as a reduction to zero;
    false zeros are caught by the rational verification and a larger m.
    """
    ring = f.field
    s = min(ring.val(c) for c in f.terms.values())
    if s is INF or s >= max(1, ring.m // 2):
        return Polynomial.zero(ring, f.nvars)
    f = _strip_p_content(ring, f)
    return monic(f, order)


def gb_mod_pm(
    F: list,
    order: WeightedOrder,
    *,
    m: int | None = None,
    retry_budget: int = 5,
    use_criteria: bool = True,
    max_steps: int = 1_000_000,
    max_coeff_bits: int | None = 1_000_000,
    stats: dict | None = None,
    warn=None,
) -> GroebnerBasis:
    """Reduced basis of a p-adic ideal computed through Z/p^m with lifting.

    On any inconsistency (singular reconstruction block or failed verification
    over Q) the modulus exponent is doubled, up to ``retry_budget`` times;
    after that the computation falls back to the direct rational run with a
    warning.
    """
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("need at least one nonzero generator")
    field = F[0].field
    if not isinstance(field, QpField):
        raise ValueError("mod-p^m acceleration requires a p-adic coefficient field")
    for idx, f in enumerate(F):
        if not f.is_homogeneous():
            raise ValueError(f"generator {idx} is not homogeneous")
    p = field.p
    nvars = F[0].nvars
    prec = order.tiebreak
    zero_w = WeightedOrder((0,) * nvars, prec)

    substituted = [clear_denominators(_substitute_weights(f, order.weights, p)) for f in F]
    max_val = 0
    for f in substituted:
        for c in f.terms.values():
            if c != 0:
                max_val = max(max_val, padic_valuation(c.numerator, p))
    if m is None:
        m = max(16, 2 * (1 + max_val))

    attempts = 0
    info = {"p": p, "m_values": [], "retries": 0, "fallback": False}
    while attempts <= retry_budget:
        info["m_values"].append(m)
        ring = ModPmRing(p, m)
        mapped = []
        for f in substituted:
            g = f.map_coefficients(lambda c: ring.coerce(c), ring)
            g = _strip_p_content(ring, g)
            if not g.is_zero():
                mapped.append(g)
        if mapped:
            try:
                modular = buchberger(
                    mapped,
                    zero_w,
                    use_criteria=use_criteria,
                    max_steps=max_steps,
                    normalize=_modpm_normalize,
                )
                claimed = minimal_generators(modular.leading_monomials())
                lifted = lift_groebner(F, order, claimed)
                if is_basis_of(
                    lifted, F, max_steps=max_steps, max_coeff_bits=max_coeff_bits
                ):
                    info["final_m"] = m
                    if stats is not None:
                        stats.update(info)
                    return lifted
            except (ValueError, AssertionError, ZeroDivisionError,
                    StepBudgetExceeded, CoefficientBlowup):
                # singular lift block, inexact division, violated progress
                # invariant, or runaway verification: all symptoms of a
                # too-small modulus exponent
                pass
        attempts += 1
        info["retries"] = attempts
        m *= 2

    info["fallback"] = True
    if stats is not None:
        stats.update(info)
    message = (
        f"mod-{p}^m pipeline failed verification after {retry_budget} retries; "
        "falling back to the direct rational computation"
    )
    if warn is not None:
        warn(message)
    return reduce_basis(
        buchberger(
            F,
            order,
            use_criteria=use_criteria,
            max_steps=max_steps,
            max_coeff_bits=max_coeff_bits,
        ),
        max_steps=max_steps,
    )
