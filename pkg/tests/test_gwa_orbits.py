import random
from fractions import Fraction

import pytest

from downup import gwa_orbits as G
from downup import poly as P
from downup.errors import DegenerateBeta, InvalidParameter, RIsOne, TorsionRequired, ZeroLambda
from downup.scalars import Cyclotomic, Rational

z = {n: Cyclotomic.zeta(n) for n in (3, 4, 6)}


def test_lambda_recursion_frozen():
    seq = G.LambdaSequence.make(3, -2, 1, 0, 1)
    # 0, 1, 3*1 - 0 + 1 = 4, 3*4 - 2 + 1 = 11, 3*11 - 8 + 1 = 26
    assert [str(v) for v in seq.terms(0, 4).values()] == ["0", "1", "4", "11", "26"]
    # backward: lambda_{-1} = (lambda_1 - 3 lambda_0 - 1)/(-2) = 0
    assert seq.terms(-1, 0)[-1] == 0
    with pytest.raises(DegenerateBeta):
        G.LambdaSequence.make(1, 0, 0, 0, 1).terms(-1, 1)


def test_closed_form_frozen():
    p = G.DoubleRootParams.make(2, 1)
    cf = G.lambda_closed_form(G.LambdaSequence.double_root(p, 0, 1))
    # lambda* = 1/(2-1)^2 = 1, c1 = -1, c2 = (1 - 1)/2 + 1 = 1
    assert (cf.lam_star, cf.c1, cf.c2) == (1, -1, 1)


def test_closed_form_random():
    rng = random.Random(1)
    for _ in range(20):
        r = Fraction(rng.randint(-9, 9) or 3, rng.randint(1, 4))
        if r == 1:
            continue
        seq = G.LambdaSequence.double_root(G.DoubleRootParams.make(r, rng.randint(-3, 3)),
                                           rng.randint(-3, 3), rng.randint(-3, 3))
        cf = G.lambda_closed_form(seq)
        assert all(cf.value(n) == v for n, v in seq.terms(-3, 20).items())


def test_closed_form_preconditions():
    with pytest.raises(InvalidParameter):
        G.lambda_closed_form(G.LambdaSequence.make(3, -2, 0, 0, 1))
    with pytest.raises(RIsOne):
        G.lambda_closed_form(G.LambdaSequence.make(2, -1, 0, 0, 1))


@pytest.mark.parametrize("n", [3, 4, 6])
def test_periodicity(n):
    r = z[n]
    p = G.DoubleRootParams.make(r, 0)
    # lambda_1 = 0 forces the zero sequence (periodic); lambda_1 = 1 gives c2 != 0
    per = G.periodicity_check(G.LambdaSequence.double_root(p, 0, 0), n)
    assert per["c2_zero"] and per["periodic"]
    per = G.periodicity_check(G.LambdaSequence.double_root(p, 0, 1), n)
    assert not per["c2_zero"] and not per["periodic"]
    with pytest.raises(TorsionRequired):
        G.periodicity_check(G.LambdaSequence.double_root(p, 0, 1), n + 1)


def test_periodic_with_gamma():
    # gamma != 0, lambda_1 picked so that c2 = 0
    r = z[4]
    p = G.DoubleRootParams.make(r, 1)
    lam_star = 1 / ((r - 1) * (r - 1))
    lam1 = (0 - lam_star) * r + lam_star  # c1 = -lam*, c2 = 0
    per = G.periodicity_check(G.LambdaSequence.double_root(p, 0, lam1), 4)
    assert per["c2_zero"] and per["periodic"]
    assert per["zero_set"][:3] == [0, 4, 8]


def test_w_and_sigma():
    for r in (z[3], z[4], Rational(5)):
        for gamma in (0, 1):
            p = G.DoubleRootParams.make(r, gamma)
            w1, w2, w = G.w_elements(p)
            assert all(G.sigma_identities(p).values())
            assert G.abar_relation_check(p)["ok"]


def test_sigma_points():
    p = G.DoubleRootParams.make(z[4], 0)
    pt = G.IdealPoint(Cyclotomic(4, (1,)), Cyclotomic(4, (2, 1)))
    assert G.sigma_point(p, pt) == G.IdealPoint(z[4], z[4] * (2 + z[4]) + 1)
    assert G.fixed_ideal_criterion(p, G.IdealPoint(0, 3), 4)["fixed"]
    res = G.fixed_ideal_criterion(p, pt, 4)
    assert not res["fixed"] and res["consistent"]


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_wn_centrality(n):
    r = Rational(-1) if n == 2 else z[n]
    res = G.wn_centrality(G.DoubleRootParams.make(r, 1), n)
    assert res["ok"]
    with pytest.raises(TorsionRequired):
        G.wn_centrality(G.DoubleRootParams.make(r, 1), n + 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_bezout(n):
    f, g = G.bezout_w(n, Fraction(3, 2))
    assert G.bezout_check(n, Fraction(3, 2))
    # f is a constant multiple of t^(n-1): f = t^(n-1)/lam, g = -1/lam
    one = Rational(1)
    assert f == P.monomial(n - 1, one / Fraction(3, 2))
    assert g == (-one / Fraction(3, 2),)


def test_bezout_zero_lambda():
    with pytest.raises(ZeroLambda):
        G.bezout_w(3, 0)


def test_kdim_conditions():
    p = G.DoubleRootParams.make(z[4], 0)
    rep = G.kdim_conditions(G.LambdaSequence.double_root(p, 0, 0), 12)
    assert rep["condition_a_period"] == 1 and rep["bounded_evidence"]
    rep = G.kdim_conditions(G.LambdaSequence.double_root(p, 0, 1), 12)
    assert rep["condition_a_period"] is None and rep["condition_b_zeros"] == [0]
    rep = G.kdim_conditions(G.LambdaSequence.make(-1, -1, 0, 0, 1), 12)  # roots zeta_3, zeta_3^2
    assert rep["condition_a_period"] == 3 and rep["condition_b_zeros"] == [0, 3, 6, 9, 12]
    assert "closed_form" not in rep
