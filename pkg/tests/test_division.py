"""Division algorithm: golden walkthrough, termination, certificates."""

import random

import pytest

from valgb import (
    GREVLEX,
    ModPmRing,
    Polynomial,
    Qp,
    QQ,
    Qt,
    TermOrder,
    WeightedOrder,
    compare,
    leading_term,
    normal_form,
    support_count_ecart,
)
from valgb.division import CoefficientBlowup, StepBudgetExceeded
from valgb.weights import GREATER, LESS
from valgb.polynomials import mono_divides

from conftest import P, polys, random_homogeneous, random_ideal, random_weights, zero_order

XYZ = "x,y,z"
WORKED_ORDER = WeightedOrder((3, 2, 1), TermOrder("lex", (2, 1, 0)))  # x < y < z


def test_ecart_examples():
    f = P(QQ, "x,y", "x^2+y^2")
    g = P(QQ, "x,y", "x^2+x*y")
    assert support_count_ecart(f, g) == 1
    assert support_count_ecart(f, f) == 0
    h = P(QQ, "x,y", "x^2")
    k = P(QQ, "x,y", "x^2+x*y+y^2")
    assert support_count_ecart(h, k) == 2
    with pytest.raises(ValueError):
        support_count_ecart(h, Polynomial.zero(QQ, 2))


def test_ecart_zero_iff_support_contained():
    rng = random.Random("ecart")
    for _ in range(100):
        f = random_homogeneous(rng, QQ, 3, 2, max_terms=4)
        g = random_homogeneous(rng, QQ, 3, 2, max_terms=4)
        contained = set(g.terms) <= set(f.terms)
        assert (support_count_ecart(f, g) == 0) == contained


def test_worked_division_golden():
    f2 = Qp(2)
    f = P(f2, XYZ, "x^2+y^2+z^2")
    g = P(f2, XYZ, "y+16z")
    res = normal_form(f, [g], WORKED_ORDER, trace=True)
    assert res.quotients[0] == P(f2, XYZ, "y-16z")
    assert res.remainder == P(f2, XYZ, "x^2+257z^2")
    assert res.step_count == 6
    # intermediate state after four steps
    st4 = next(s for s in res.trace if s.index == 4)
    assert st4.q == P(f2, XYZ, "256z^2")
    assert st4.r == P(f2, XYZ, "x^2+z^2")
    # the identity holds exactly
    assert res.quotients[0] * g + res.remainder == f


def test_division_termination_where_naive_loops():
    f2 = Qp(2)
    G = polys(f2, XYZ, "x-2y", "y-2z", "z-2x")
    x = P(f2, XYZ, "x")
    res = normal_form(x, G, zero_order(3, TermOrder("lex")))
    assert res.remainder.is_zero()
    assert res.step_count < 100
    # membership witness: x = -1/7 ((x-2y) + 2(y-2z) + 4(z-2x))
    assert res.quotients[0] == P(f2, XYZ, "-1/7")
    assert res.quotients[1] == P(f2, XYZ, "-2/7")
    assert res.quotients[2] == P(f2, XYZ, "-4/7")
    acc = Polynomial.zero(f2, 3)
    for h, g in zip(res.quotients, G):
        acc = acc + h * g
    assert acc == x


def test_empty_divisor_list_returns_input_as_remainder():
    f2 = Qp(2)
    f = P(f2, XYZ, "x^2+3y*z")
    res = normal_form(f, [], zero_order(3))
    assert res.remainder == f
    assert res.quotients == []


def test_zero_dividend_short_circuits():
    f2 = Qp(2)
    G = polys(f2, XYZ, "x-2y", "y-2z")
    res = normal_form(Polynomial.zero(f2, 3), G, zero_order(3))
    assert res.remainder.is_zero()
    assert all(h.is_zero() for h in res.quotients)
    assert res.step_count == 0


def test_rejects_bad_inputs():
    f2 = Qp(2)
    order = zero_order(2)
    inh = P(f2, "x,y", "x+x^2")
    ok = P(f2, "x,y", "x")
    with pytest.raises(ValueError):
        normal_form(inh, [ok], order)
    with pytest.raises(ValueError):
        normal_form(ok, [inh], order)
    with pytest.raises(ValueError):
        normal_form(ok, [Polynomial.zero(f2, 2)], order)


@pytest.mark.parametrize("field", [Qp(2), Qp(3), QQ, Qt()])
def test_division_certificate_properties(field):
    rng = random.Random(f"divcert-{field.label}")
    for trial in range(40):
        G = random_ideal(rng, field, 3, max_degree=3, max_gens=3)
        f = random_homogeneous(rng, field, 3, rng.randint(1, 3))
        order = WeightedOrder(random_weights(rng, field, 3), GREVLEX)
        res = normal_form(f, G, order)
        # exact identity
        acc = res.remainder
        for h, g in zip(res.quotients, G):
            acc = acc + h * g
        assert acc == f
        # strong normal form: no remainder term divisible by any divisor lead
        lms = [leading_term(g, order)[1] for g in G]
        for m in res.remainder.terms:
            assert not any(mono_divides(lm, m) for lm in lms)
        # every summand ranks at least as high as f
        if not f.is_zero():
            if not res.remainder.is_zero():
                assert compare(res.remainder, f, order) != LESS
            for h, g in zip(res.quotients, G):
                hg = h * g
                if not hg.is_zero():
                    assert compare(hg, f, order) != LESS


def test_progress_is_strictly_monotone():
    f2 = Qp(2)
    f = P(f2, XYZ, "x^2+y^2+z^2")
    g = P(f2, XYZ, "y+16z")
    res = normal_form(f, [g], WORKED_ORDER, trace=True)
    qs = [st.q for st in res.trace]
    for a, b in zip(qs, qs[1:]):
        assert compare(b, a, WORKED_ORDER) == GREATER


def test_per_step_state_invariants():
    # at every traced step the running state ranks no lower than the input
    rng = random.Random("stepwise")
    f3 = Qp(3)
    for _ in range(20):
        G = random_ideal(rng, f3, 3, max_degree=2, max_gens=2)
        f = random_homogeneous(rng, f3, 3, rng.randint(1, 2))
        order = WeightedOrder(random_weights(rng, f3, 3), GREVLEX)
        res = normal_form(f, G, order, trace=True)
        for step in res.trace:
            assert compare(step.q, f, order) != LESS
            if not step.r.is_zero():
                assert compare(step.r, f, order) != LESS


def test_modpm_division_matches_worked_example():
    # the same run over Z/2^m reproduces the rational certificate mod 2^m
    m = 12
    ring = ModPmRing(2, m)
    f = Polynomial(ring, 3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    g = Polynomial(ring, 3, {(0, 1, 0): 1, (0, 0, 1): 16})
    res = normal_form(f, [g], WORKED_ORDER)
    assert res.quotients[0] * g + res.remainder == f
    # 257 and the coefficients of y - 16z appear mod 2^12
    assert res.remainder == Polynomial(ring, 3, {(2, 0, 0): 1, (0, 0, 2): 257})
    assert res.quotients[0] == Polynomial(ring, 3, {(0, 1, 0): 1, (0, 0, 1): 2**m - 16})


def test_modpm_certificates_random():
    ring = ModPmRing(3, 7)
    order = zero_order(3)
    rng = random.Random("modpm-div")
    for _ in range(60):
        gens = []
        for _ in range(rng.randint(1, 3)):
            f = random_homogeneous(rng, QQ, 3, rng.randint(1, 2), height=9)
            g = f.map_coefficients(lambda c: ring.coerce(c), ring)
            if not g.is_zero() and min(ring.val(c) for c in g.terms.values()) == 0:
                gens.append(g)
        if not gens:
            continue
        f = random_homogeneous(rng, QQ, 3, rng.randint(1, 2), height=9)
        fm = f.map_coefficients(lambda c: ring.coerce(c), ring)
        if fm.is_zero():
            continue
        res = normal_form(fm, gens, order)
        acc = res.remainder
        for h, g in zip(res.quotients, gens):
            acc = acc + h * g
        assert acc == fm
        lms = [leading_term(g, order)[1] for g in gens]
        for mno in res.remainder.terms:
            assert not any(mono_divides(lm, mno) for lm in lms)


def test_step_budget_breaker():
    f2 = Qp(2)
    G = polys(f2, XYZ, "x-2y", "y-2z", "z-2x")
    x = P(f2, XYZ, "x")
    with pytest.raises(StepBudgetExceeded):
        normal_form(x, G, zero_order(3), max_steps=2)


def test_coefficient_blowup_breaker():
    f2 = Qp(2)
    f = P(f2, XYZ, "x^2+y^2+z^2")
    g = P(f2, XYZ, "y+65536z")
    with pytest.raises(CoefficientBlowup):
        normal_form(f, [g], WORKED_ORDER, max_coeff_bits=8)


def test_custom_ecart_still_divides():
    # an always-positive ecart mimics the unspecified-function presentation;
    # termination is not guaranteed in general, so a budget guards the run
    f2 = Qp(2)
    f = P(f2, XYZ, "x^2+y^2+z^2")
    g = P(f2, XYZ, "y+16z")
    res = normal_form(f, [g], WORKED_ORDER, ecart=lambda a, b: 1, max_steps=500)
    assert res.quotients[0] * g + res.remainder == f
    assert res.remainder == P(f2, XYZ, "x^2+257z^2")
