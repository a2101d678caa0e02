"""Weighted valuation orders: tropical weights, initial forms, leading data.

The weight of a term c*x^u is val(c) + w.u; the polynomial weight W is the
minimum over terms.  Initial forms collect the weight-minimal terms with
coefficients pushed into the residue field, and the leading monomial is the
tiebreak-largest monomial of the initial form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import ExtInt
from .polynomials import GREVLEX, Monomial, Polynomial, TermOrder

LESS = -1
EQUAL_RANK = 0
GREATER = 1


@dataclass(frozen=True)
class WeightedOrder:
    """A weight vector plus a classical term order for breaking ties."""

    weights: tuple
    tiebreak: TermOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def wdot(self, mono: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))


def weight_dot(weights, mono: Monomial) -> int:
    return sum(w * e for w, e in zip(weights, mono))


def trop_weight(f: Polynomial, weights) -> ExtInt:
    """min over terms of val(coefficient) + w.exponent."""
    if f.is_zero():
        raise ValueError("tropical weight of the zero polynomial is undefined")
    val = f.field.val
    return min(val(c) + weight_dot(weights, m) for m, c in f.terms.items())


def leading_term(f: Polynomial, order: WeightedOrder):
    """(W, lm, lc): weight, leading monomial, leading coefficient (in K).

    The result is memoized per order on the (immutable) polynomial.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    cached = f._cache.get(order)
    if cached is not None:
        return cached
    val = f.field.val
    weights = order.weights
    sort_key = order.tiebreak.sort_key
    best_w = None
    best_m = None
    best_key = None
    for m, c in f.terms.items():
        k = val(c) + weight_dot(weights, m)
        if best_w is None or k < best_w:
            best_w, best_m, best_key = k, m, sort_key(m)
        elif k == best_w:
            sk = sort_key(m)
            if sk > best_key:
                best_m, best_key = m, sk
    result = (best_w, best_m, f.terms[best_m])
    f._cache[order] = result
    return result


def leading_monomial(f: Polynomial, order: WeightedOrder) -> Monomial:
    return leading_term(f, order)[1]


def leading_coefficient(f: Polynomial, order: WeightedOrder):
    return leading_term(f, order)[2]


def initial_form(f: Polynomial, weights) -> Polynomial:
    """Weight-minimal part of f over the residue field, units rescaled away."""
    if f.is_zero():
        raise ValueError("initial form of the zero polynomial is undefined")
    field = f.field
    val = field.val
    keys = {m: val(c) + weight_dot(weights, m) for m, c in f.terms.items()}
    w_min = min(keys.values())
    res_field = field.residue_field()
    terms = {
        m: field.initial_residue(c) for m, c in f.terms.items() if keys[m] == w_min
    }
    return Polynomial(res_field, f.nvars, terms, _clean=True)


@dataclass
class LeadingData:
    """Weight, initial form, leading monomial, leading coefficient of f."""

    weight: ExtInt
    initial: Polynomial
    lm: Monomial
    lc: object


def leading_data(f: Polynomial, order: WeightedOrder) -> LeadingData:
    w, lm, lc = leading_term(f, order)
    return LeadingData(w, initial_form(f, order.weights), lm, lc)


def compare(f: Polynomial, g: Polynomial, order: WeightedOrder) -> int:
    """-1 if f < g, +1 if f > g, 0 for equal rank.

    Smaller means smaller key val(lc) + w.lm, with the tiebreak reversed:
    on equal keys the polynomial with the larger leading monomial is smaller.
    Every nonzero polynomial is smaller than zero.
    """
    zf, zg = f.is_zero(), g.is_zero()
    if zf and zg:
        return EQUAL_RANK
    if zg:
        return LESS
    if zf:
        return GREATER
    wf, lmf, _ = leading_term(f, order)
    wg, lmg, _ = leading_term(g, order)
    if wf != wg:
        return LESS if wf < wg else GREATER
    c = order.tiebreak.compare(lmf, lmg)
    if c == 0:
        return EQUAL_RANK
    return LESS if c > 0 else GREATER
