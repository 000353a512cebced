from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from downup.errors import DivisionByZero, ModeMismatch, ZeroInput
from downup.parsing import parse_scalar
from downup.scalars import (Cyclotomic, Rational, RationalFunction, cyclotomic_poly, euler_phi,
                            root_of_unity_order, unify)

q = RationalFunction.q()
fracs = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


def rf_st():
    poly = st.lists(fracs, min_size=1, max_size=3)
    den = st.tuples(st.lists(fracs, max_size=2), st.integers(1, 4))
    return st.builds(lambda n, d: RationalFunction(n, list(d[0]) + [d[1]]), poly, den)


def cyc_st(n):
    return st.builds(lambda cs: Cyclotomic(n, cs), st.lists(fracs, min_size=0, max_size=euler_phi(n)))


MODES = {
    "Q": st.builds(Rational, fracs),
    "Q(q)": rf_st(),
    "Q(zeta_5)": cyc_st(5),
    "Q(zeta_12)": cyc_st(12),
}


@pytest.mark.parametrize("mode", sorted(MODES))
@given(data=st.data())
def test_field_axioms(mode, data):
    s = MODES[mode]
    x, y, z = data.draw(s), data.draw(s), data.draw(s)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0
    if not x.is_zero():
        assert x * x.inv() == 1
        assert x / x == 1


@given(fracs, fracs)
def test_rational_matches_fraction(a, b):
    assert Rational(a) + Rational(b) == a + b
    assert Rational(a) * Rational(b) == a * b
    if b:
        assert (Rational(a) / Rational(b)).value == a / b


def test_rational_function_canonical_form():
    assert 1 / (q - 1) + 1 / (1 - q) == 0
    assert (q * q - 1) / (q - 1) == q + 1
    x = (2 * q + 2) / (4 * q - 4)
    assert x.den[-1] == 1
    assert str(x) == "(1/2*q + 1/2)/(q - 1)"
    assert str(q ** -2) == "1/q^2"


def test_rational_function_evaluate():
    x = (q * q + 1) / (q - 3)
    assert x.evaluate(Fraction(1, 2)) == Fraction(5, 4) / Fraction(-5, 2)


def test_cyclotomic_arithmetic():
    z4 = Cyclotomic.zeta(4)
    assert z4 * z4 == -1
    z6 = Cyclotomic.zeta(6)
    assert root_of_unity_order(z6 * z6) == 3
    assert root_of_unity_order(z6) == 6
    assert root_of_unity_order(-z6) == 3
    # 1/(zeta_6 + 2) computed by hand: (zeta + 2)(-zeta + 3)/7 = 1 using zeta^2 = zeta - 1
    assert (z6 + 2).inv() == (-z6 + 3) / 7
    assert str((z6 + 2).inv()) == "-1/7*zeta:6 + 3/7"


@pytest.mark.parametrize("n, coeffs", [
    (1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
    (12, (1, 0, -1, 0, 1)), (9, (1, 0, 0, 1, 0, 0, 1)),
])
def test_cyclotomic_polynomials(n, coeffs):
    assert cyclotomic_poly(n) == coeffs
    assert len(coeffs) - 1 == euler_phi(n)


def test_root_of_unity_orders():
    assert root_of_unity_order(1) == 1
    assert root_of_unity_order(-1) == 2
    assert root_of_unity_order(2) is None
    assert root_of_unity_order(q) is None
    assert root_of_unity_order(Cyclotomic.zeta(5)) == 5
    assert root_of_unity_order(-Cyclotomic.zeta(5)) == 10
    assert root_of_unity_order(Cyclotomic.zeta(7) + 1) is None
    assert root_of_unity_order(Cyclotomic.zeta(12), bound=5) is None
    with pytest.raises(ZeroInput):
        root_of_unity_order(0)


def test_mode_mismatch():
    with pytest.raises(ModeMismatch):
        q + Cyclotomic.zeta(3)
    with pytest.raises(ModeMismatch):
        Cyclotomic.zeta(3) * Cyclotomic.zeta(4)
    with pytest.raises(ModeMismatch):
        unify(q, Cyclotomic.zeta(4))
    a, b, c = unify(2, Fraction(1, 3), Cyclotomic.zeta(4))
    assert a.mode == b.mode == c.mode


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Rational(1) / 0
    with pytest.raises(DivisionByZero):
        q / (q - q)


def test_negative_powers():
    assert Rational(2) ** -3 == Fraction(1, 8)
    assert Cyclotomic.zeta(5) ** -1 == Cyclotomic.zeta(5) ** 4


@pytest.mark.parametrize("text", ["3/7", "-2", "q + 1", "(q^2 - 1)/(q + 3)", "zeta:6 - 2", "1/q^3"])
def test_render_reparses(text):
    x = parse_scalar(text)
    assert parse_scalar(str(x)) == x


def test_hash_matches_fraction_for_constants():
    assert hash(Rational(Fraction(3, 4))) == hash(Fraction(3, 4))
    assert len({Rational(1), Rational(1), Rational(2)}) == 2
