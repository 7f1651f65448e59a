"""Field-axiom and embedding tests for the cyclotomic arithmetic kernel."""

from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from osczeta.cyclo import (
    CycloNumber,
    cos_pi_frac,
    exp_i_pi_frac,
    golden_ratio,
    imaginary_unit,
    rational,
    sqrt2,
    sqrt5,
    two_i_sin_pi_frac,
)

CONDUCTORS = (6, 8, 10, 16)


def elements(m):
    coeff = st.integers(min_value=-5, max_value=5)
    return st.lists(coeff, min_size=1, max_size=4).map(
        lambda cs: CycloNumber(m, [Fraction(c) for c in cs]))


@st.composite
def triples(draw):
    m = draw(st.sampled_from(CONDUCTORS))
    strat = elements(m)
    return draw(strat), draw(strat), draw(strat)


@given(triples())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + rational(0) == a
    assert a * rational(1) == a
    assert (a - a).is_zero()


@given(triples())
@settings(max_examples=40, deadline=None)
def test_multiplicative_inverse(abc):
    a, _, _ = abc
    if a.is_zero():
        return
    assert a * a.inverse() == rational(1)
    assert (rational(1) / a) * a == rational(1)


@given(triples())
@settings(max_examples=30, deadline=None)
def test_embedding_is_a_homomorphism(abc):
    a, b, _ = abc
    with mp.workdps(40):
        lhs = (a * b).embed(30)
        rhs = a.embed(30) * b.embed(30)
        assert abs(lhs - rhs) < mp.mpf("1e-25")
        assert abs((a + b).embed(30) - (a.embed(30) + b.embed(30))) \
            < mp.mpf("1e-25")


def test_root_of_unity_order():
    z = CycloNumber.zeta(12)
    assert z ** 12 == rational(1)
    assert z ** 6 == rational(-1)
    assert not (z ** 4 == rational(1))


def test_conductor_lifting():
    # zeta_3 viewed in Q(zeta_12) is still the same number
    z3 = CycloNumber.zeta(3)
    assert z3.lift(12) == z3
    assert z3 + CycloNumber.zeta(4) == CycloNumber.zeta(4) + z3


def test_conjugation():
    z = CycloNumber.zeta(16, 3)
    assert z * z.conjugate() == rational(1)
    with mp.workdps(30):
        assert abs(z.conjugate().embed(25) - mp.conj(z.embed(25))) \
            < mp.mpf("1e-20")


def test_named_surds():
    assert sqrt2() * sqrt2() == rational(2)
    assert sqrt5() * sqrt5() == rational(5)
    phi = golden_ratio()
    assert phi * phi == phi + 1
    assert imaginary_unit() ** 2 == rational(-1)


def test_trigonometric_constructors():
    # cos(pi/5) = phi/2, and 2i sin / exp identities
    assert cos_pi_frac(1, 5) * 2 == golden_ratio()
    z = exp_i_pi_frac(3, 8)
    assert z ** 16 == rational(1)
    assert two_i_sin_pi_frac(1, 4) == z ** 0 * (exp_i_pi_frac(1, 4)
                                                - exp_i_pi_frac(-1, 4))
    with mp.workdps(30):
        assert abs(cos_pi_frac(2, 7).embed_real(25)
                   - mp.cos(2 * mp.pi / 7)) < mp.mpf("1e-20")


def test_embed_real_rejects_complex():
    with pytest.raises(ValueError):
        imaginary_unit().embed_real(25)


def test_rational_value():
    assert (sqrt2() ** 2).rational_value() == Fraction(2)
    with pytest.raises(ValueError):
        sqrt2().rational_value()


def test_text_canonical_and_stable():
    a = sqrt2() + rational(Fraction(1, 3))
    assert a.text() == (sqrt2() + rational(Fraction(1, 3))).text()
    assert rational(0).text() == "0"
