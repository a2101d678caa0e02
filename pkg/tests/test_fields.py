"""Scalar arithmetic, valuations, sections, and residues for every field."""

import random
from fractions import Fraction

import pytest

from valgb import GF, INF, ModPmRing, QQ, Qp, Qt, RatFunc
from valgb.fields import padic_valuation

from conftest import random_scalar
from oracles import series_valuation

ALL_FIELDS = [Qp(2), Qp(3), Qp(5), QQ, Qt(), GF(2), GF(7)]


def test_infinity_absorbs():
    assert INF + 5 is INF
    assert 5 + INF is INF
    assert INF + INF is INF
    assert min(INF, 3) == 3
    assert min(3, INF) == 3
    assert INF == INF
    assert not INF == 7
    assert 7 < INF
    assert INF > 7
    assert not INF < INF


def test_padic_valuation_examples():
    assert Qp(3).val(Fraction(18)) == 2
    assert Qp(3).val(Fraction(0)) is INF
    assert QQ.val(Fraction(0)) is INF
    assert Qt().val(Qt().zero()) is INF
    assert Qp(2).val(Fraction(3, 4)) == -2
    assert Qp(5).val(Fraction(50, 3)) == 2


def test_qt_valuation_series_oracle():
    # t^5 / (1 + t): hand Taylor expansion starts at t^5
    a = RatFunc((0, 0, 0, 0, 0, 1), (1, 1))
    assert Qt().val(a) == 5
    assert series_valuation((0, 0, 0, 0, 0, 1), (1, 1)) == 5
    # richer case: (t^2 + t^3) / (2 + t) has valuation 2
    b = RatFunc((0, 0, 1, 1), (2, 1))
    assert Qt().val(b) == series_valuation((0, 0, 1, 1), (2, 1)) == 2
    # negative valuation
    c = RatFunc((1,), (0, 0, 1))
    assert Qt().val(c) == series_valuation((1,), (0, 0, 1)) == -2


def test_phi_examples():
    assert Qp(2).phi(3) == Fraction(8)
    assert Qt().phi(2) == RatFunc((0, 0, 1))
    assert QQ.phi(0) == Fraction(1)
    with pytest.raises(ValueError):
        QQ.phi(1)
    assert Qp(2).phi(-2) == Fraction(1, 4)


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_phi_section_property(field):
    values = [0] if field in (QQ, GF(2), GF(7)) else range(-3, 4)
    for w in values:
        assert field.val(field.phi(w)) == w


def test_residue_examples():
    assert Qp(3).residue(Fraction(18, 9)) == 2
    assert Qp(2).residue(Fraction(1)) == 1
    three_plus_t = RatFunc((3, 1))
    assert Qt().residue(three_plus_t) == Fraction(3)
    with pytest.raises(ValueError):
        Qp(2).residue(Fraction(1, 2))
    with pytest.raises(ValueError):
        Qt().residue(RatFunc((1,), (0, 1)))


def test_residue_of_phi_positive_weight_vanishes():
    for field in (Qp(2), Qp(5), Qt()):
        for w in (1, 2, 3):
            assert field.residue_field().is_zero(field.residue(field.phi(w)))


def test_modpm_val_examples():
    r = ModPmRing(2, 4)
    assert r.val(12) == 2
    assert r.val(0) is INF
    assert ModPmRing(3, 3).val(18) == 2
    assert r.val(16) is INF  # 16 = 0 mod 2^4


def test_modpm_val_range():
    r = ModPmRing(3, 3)
    for a in range(1, 27):
        assert 0 <= r.val(a) <= 2


def test_modpm_invertible_iff_val_zero():
    r = ModPmRing(2, 5)
    for a in range(1, 32):
        if r.val(a) == 0:
            inv = r.inv(a)
            assert r.mul(a, inv) == 1
        else:
            with pytest.raises(ValueError):
                pow(a, -1, 32)


def test_modpm_division_semantics():
    r = ModPmRing(2, 6)
    # exact division through a shared power of two
    assert r.mul(r.div(12, 4), 4) == 12
    with pytest.raises(ValueError):
        r.div(2, 4)  # val 1 < val 2
    with pytest.raises(ZeroDivisionError):
        r.div(3, 0)


def test_modpm_phi_bounds():
    r = ModPmRing(2, 4)
    assert r.phi(3) == 8
    with pytest.raises(ValueError):
        r.phi(4)
    with pytest.raises(ValueError):
        r.phi(-1)


@pytest.mark.parametrize("field", ALL_FIELDS)
def test_field_axioms_random(field):
    rng = random.Random(f"axioms-{field.label}")
    one = field.one()
    zero = field.zero()
    for _ in range(200):
        a = random_scalar(rng, field, allow_zero=True)
        b = random_scalar(rng, field, allow_zero=True)
        c = random_scalar(rng, field, allow_zero=True)
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(
            field.mul(a, b), field.mul(a, c)
        )
        assert field.add(a, zero) == a
        assert field.mul(a, one) == a
        assert field.is_zero(field.sub(a, a))
        if not field.is_zero(a):
            assert field.mul(a, field.inv(a)) == one


@pytest.mark.parametrize("field", [Qp(2), Qp(3), Qp(5), QQ, Qt()])
def test_valuation_laws_random(field):
    rng = random.Random(f"laws-{field.label}")
    for _ in range(1000):
        a = random_scalar(rng, field)
        b = random_scalar(rng, field)
        assert field.val(field.mul(a, b)) == field.val(a) + field.val(b)
        s = field.add(a, b)
        va, vb = field.val(a), field.val(b)
        if not field.is_zero(s):
            assert field.val(s) >= min(va, vb)
        if va != vb:
            assert field.val(s) == min(va, vb)


def test_modpm_valuation_laws_random():
    r = ModPmRing(2, 8)
    rng = random.Random("modpm-laws")
    for _ in range(1000):
        a = rng.randrange(1, 256)
        b = rng.randrange(1, 256)
        ab = r.mul(a, b)
        if ab != 0:
            assert r.val(ab) == r.val(a) + r.val(b)
        s = r.add(a, b)
        if s != 0:
            assert r.val(s) >= min(r.val(a), r.val(b))


def test_unit_times_inverse_residue():
    for field in (Qp(2), Qp(7), Qt(), QQ):
        rng = random.Random(f"unit-{field.label}")
        res = field.residue_field()
        for _ in range(50):
            a = random_scalar(rng, field)
            v = field.val(a)
            unit = field.mul(field.phi(-v), a)
            r1 = field.residue(unit)
            r2 = field.residue(field.inv(unit))
            assert res.mul(r1, r2) == res.one()


def test_initial_residue_is_nonzero():
    for field in (Qp(2), Qp(3), Qt()):
        rng = random.Random(f"init-{field.label}")
        res = field.residue_field()
        for _ in range(100):
            a = random_scalar(rng, field)
            assert not res.is_zero(field.initial_residue(a))


def test_ratfunc_canonical_forms():
    # gcd removed and denominator monic
    a = RatFunc((0, 2), (2, 2))  # 2t / (2 + 2t) -> t/(1+t)
    assert a == RatFunc((0, 1), (1, 1))
    # zero is unique
    z = RatFunc((0,), (5, 3))
    assert z == RatFunc(0)
    assert z.is_zero()
    # division produces canonical results
    b = RatFunc((0, 0, 1)) / RatFunc((0, 1))
    assert b == RatFunc((0, 1))


def test_ratfunc_arithmetic_against_fractions():
    # constants embed Q into Q(t) compatibly
    rng = random.Random("embed")
    qt = Qt()
    for _ in range(100):
        x = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        y = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        rx, ry = qt.coerce(x), qt.coerce(y)
        assert qt.add(rx, ry) == qt.coerce(x + y)
        assert qt.mul(rx, ry) == qt.coerce(x * y)
        if y != 0:
            assert qt.div(rx, ry) == qt.coerce(x / y)


def test_padic_valuation_function():
    assert padic_valuation(18, 3) == 2
    assert padic_valuation(-8, 2) == 3
    with pytest.raises(ValueError):
        padic_valuation(0, 2)


def test_prime_validation():
    with pytest.raises(ValueError):
        Qp(4)
    with pytest.raises(ValueError):
        GF(1)
    with pytest.raises(ValueError):
        ModPmRing(6, 2)
