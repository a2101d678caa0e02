"""Valuation-aware Mora division with full quotient certificates.

Naive reduction that always cancels the lowest-valuation term need not
terminate over a nontrivially valued field (reducing x by {x-2y, y-2z, z-2x}
2-adically cycles forever).  The fix is the tangent-cone trick: previous
partial results are allowed as divisors, and a nonnegative ecart is kept
minimal when choosing among divisors.  With the support-count ecart the set
of possible supports is finite, so the support of the running polynomial
eventually shrinks and the division terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import INF
from .polynomials import Monomial, Polynomial, mono_div, mono_divides, poly_to_str
from .weights import WeightedOrder, leading_term


class StepBudgetExceeded(RuntimeError):
    """Division exceeded its step budget (only possible with a custom ecart)."""


class CoefficientBlowup(RuntimeError):
    """A running coefficient outgrew the configured bit budget."""


def support_count_ecart(f: Polynomial, g: Polynomial) -> int:
    """Number of monomials of g absent from f; zero iff supp(g) is inside supp(f)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("ecart of a zero polynomial is undefined")
    return len(g.terms.keys() - f.terms.keys())


@dataclass
class TraceStep:
    """State at the start of one loop iteration plus the action taken."""

    index: int
    q: Polynomial
    r: Polynomial
    action: str
    divisor: str
    lm: Monomial
    t_size: int

    def line(self, names=None) -> str:
        lm_poly = Polynomial.term(self.q.field, self.q.nvars, self.lm, self.q.field.one())
        return (
            f"j={self.index} action={self.action} divisor={self.divisor} "
            f"lm={poly_to_str(lm_poly, names)} |T|={self.t_size}"
        )


@dataclass
class DivisionResult:
    """Certificate f = sum(quotients[i] * divisors[i]) + remainder."""

    quotients: list
    remainder: Polynomial
    step_count: int
    trace: list | None = None


@dataclass
class _Divisor:
    poly: Polynomial
    lm: Monomial
    lc: object
    supp: frozenset
    orig_index: int | None = None
    snap_h: list | None = None
    snap_r: Polynomial | None = None


def _coeff_bits(c) -> int:
    if isinstance(c, int):
        return c.bit_length()
    if hasattr(c, "numerator"):
        return c.numerator.bit_length() + c.denominator.bit_length()
    if hasattr(c, "num"):  # rational function
        bits = 0
        for part in (c.num, c.den):
            for fr in part:
                bits = max(bits, fr.numerator.bit_length() + fr.denominator.bit_length())
        return bits
    return 0


def normal_form(
    f: Polynomial,
    divisors: list,
    order: WeightedOrder,
    ecart=support_count_ecart,
    *,
    max_steps: int = 1_000_000,
    max_coeff_bits: int | None = None,
    trace: bool = False,
) -> DivisionResult:
    """Divide f by a list of homogeneous polynomials under a weighted order.

    Returns quotients h_i and a strong normal form r with
    f = sum h_i g_i + r and no term of r divisible by any leading monomial
    of the divisors.  Each h_i g_i and r rank no lower than f itself.
    """
    fld = f.field
    n = f.nvars
    if not f.is_homogeneous():
        raise ValueError("dividend must be homogeneous")
    T: list[_Divisor] = []
    for i, g in enumerate(divisors):
        if g.field != fld or g.nvars != n:
            raise ValueError("divisor field/variable mismatch")
        if g.is_zero():
            raise ValueError(f"divisor {i} is zero")
        if not g.is_homogeneous():
            raise ValueError(f"divisor {i} is not homogeneous")
        _, lm, lc = leading_term(g, order)
        T.append(_Divisor(g, lm, lc, frozenset(g.terms), i))

    s = len(divisors)
    h = [Polynomial.zero(fld, n) for _ in range(s)]
    r = Polynomial.zero(fld, n)
    q = f
    steps = 0
    trace_log: list[TraceStep] | None = [] if trace else None
    default_ecart = ecart is support_count_ecart

    one = fld.one()

    while not q.is_zero():
        if steps >= max_steps:
            raise StepBudgetExceeded(
                f"division did not finish within {max_steps} steps; "
                "the supplied ecart function may not guarantee termination"
            )
        q_start, r_start = q, r
        _, lmq, lcq = leading_term(q, order)
        if max_coeff_bits is not None and _coeff_bits(lcq) > max_coeff_bits:
            raise CoefficientBlowup(
                f"leading coefficient exceeded {max_coeff_bits} bits after {steps} steps"
            )

        # choose the dividing entry of T with minimal ecart; original divisors
        # win ties, then earliest insertion
        best = None
        best_key = None
        q_supp = q.terms.keys()
        for idx, entry in enumerate(T):
            if not mono_divides(entry.lm, lmq):
                continue
            if default_ecart:
                e_val = len(entry.supp - q_supp)
            else:
                e_val = ecart(q, entry.poly)
            key = (e_val, 0 if entry.orig_index is not None else 1, idx)
            if best_key is None or key < best_key:
                best, best_key = entry, key

        if best is None:
            # move the leading term to the remainder; the current state joins T
            T.append(_Divisor(q, lmq, lcq, frozenset(q.terms), None, list(h), r))
            lead = Polynomial.term(fld, n, lmq, lcq)
            r = r + lead
            q = q - lead
            action, dlabel = "remainder", "-"
        else:
            if best_key[0] > 0:
                T.append(_Divisor(q, lmq, lcq, frozenset(q.terms), None, list(h), r))
            xv = mono_div(lmq, best.lm)
            cv = fld.div(lcq, best.lc)
            if best.orig_index is not None:
                i = best.orig_index
                q = q - best.poly.mono_mul(xv, cv)
                h[i] = h[i] + Polynomial.term(fld, n, xv, cv)
                action, dlabel = "divide", f"g{i + 1}"
            else:
                # dividing by a recorded partial state: same degree forces xv = 1
                if any(xv):
                    raise AssertionError("recorded-state divisor with nontrivial cofactor")
                v = fld.val(cv)
                if not (v is not INF and v > 0):
                    raise AssertionError(
                        "quotient coefficient against a recorded state must have positive valuation"
                    )
                inv = fld.inv(fld.sub(one, cv))
                q = (q - best.poly.scale(cv)).scale(inv)
                h = [(h[i] - best.snap_h[i].scale(cv)).scale(inv) for i in range(s)]
                r = (r - best.snap_r.scale(cv)).scale(inv)
                action, dlabel = "divide-recorded", "q"
        if trace_log is not None:
            trace_log.append(
                TraceStep(steps, q_start, r_start, action, dlabel, lmq, len(T))
            )
        steps += 1

    return DivisionResult(h, r, steps, trace_log)
