"""Orbit computations for down-up algebras A(2r, -r^2, gamma) with a double root r.

Covers the lambda-recursion lambda_n = alpha lambda_{n-1} + beta lambda_{n-2} + gamma
and its closed form, the induced automorphism on maximal ideals
(w1 - a1, w2 - a2), the normal element w = du - r ud + gamma/(r-1) and its
powers, and bounded evidence for the two orbit conditions of the Krull
dimension criterion for generalized Weyl algebras.

Krull dimensions themselves are never computed; reports cite them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import poly as P
from .errors import DegenerateBeta, InvalidParameter, RIsOne, TorsionRequired, ZeroLambda
from .morphisms import apply_hom, check_hom, make_map, verify
from .ncalg import AlgebraElement, downup, is_central, normality_scalars, qplane, qweyl
from .scalars import Scalar, root_of_unity_order, unify


@dataclass(frozen=True)
class DoubleRootParams:
    r: Scalar
    gamma: Scalar

    @classmethod
    def make(cls, r, gamma) -> "DoubleRootParams":
        r, gamma = unify(r, gamma)
        return cls(r, gamma)

    @property
    def alpha(self) -> Scalar:
        return 2 * self.r

    @property
    def beta(self) -> Scalar:
        return -(self.r * self.r)

    @property
    def epsilon(self) -> Scalar:
        if self.r == 1:
            raise RIsOne("epsilon = gamma/(r-1) needs r != 1")
        return self.gamma / (self.r - 1)

    def presentation(self):
        return downup(self.alpha, self.beta, self.gamma)

    def order(self, bound: int = 360) -> Optional[int]:
        return root_of_unity_order(self.r, bound)


@dataclass(frozen=True)
class LambdaSequence:
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    lam0: Scalar
    lam1: Scalar

    @classmethod
    def make(cls, alpha, beta, gamma, lam0, lam1) -> "LambdaSequence":
        return cls(*unify(alpha, beta, gamma, lam0, lam1))

    @classmethod
    def double_root(cls, p: DoubleRootParams, lam0, lam1) -> "LambdaSequence":
        return cls.make(p.alpha, p.beta, p.gamma, *unify(p.r, lam0, lam1)[1:])

    def terms(self, lo: int, hi: int) -> dict:
        """{n: lambda_n} for lo <= n <= hi."""
        out = {0: self.lam0, 1: self.lam1}
        a, b, g = self.alpha, self.beta, self.gamma
        for n in range(2, hi + 1):
            out[n] = a * out[n - 1] + b * out[n - 2] + g
        if lo < 0:
            if b.is_zero():
                raise DegenerateBeta("backward terms need beta != 0")
            for n in range(-1, lo - 1, -1):
                # lambda_{n+2} = a lambda_{n+1} + b lambda_n + g
                out[n] = (out[n + 2] - a * out[n + 1] - g) / b
        return {n: out[n] for n in range(lo, hi + 1)}


@dataclass(frozen=True)
class IdealPoint:
    a1: Scalar
    a2: Scalar


def lambda_at(seq: LambdaSequence, n: int) -> Scalar:
    return seq.terms(min(n, 0), max(n, 1))[n]


@dataclass(frozen=True)
class ClosedForm:
    """lambda_n = (c1 + c2 n) r^n + lam_star; for lambda_0 = 0 this is c1 (r^n - 1) + c2 n r^n."""

    r: Scalar
    c1: Scalar
    c2: Scalar
    lam_star: Scalar

    def value(self, n: int) -> Scalar:
        return (self.c1 + self.c2 * n) * self.r ** n + self.lam_star


def _double_root(seq: LambdaSequence) -> Scalar:
    r = seq.alpha / 2
    if seq.beta != -(r * r):
        raise InvalidParameter("recursion does not have a double characteristic root")
    if r == 1:
        raise RIsOne("closed form needs r != 1")
    return r


def lambda_closed_form(seq: LambdaSequence) -> ClosedForm:
    r = _double_root(seq)
    lam_star = seq.gamma / ((r - 1) * (r - 1))
    c1 = seq.lam0 - lam_star
    c2 = (seq.lam1 - lam_star) / r - c1
    return ClosedForm(r, c1, c2, lam_star)


def periodicity_check(seq: LambdaSequence, n: int, bound: int = 0) -> dict:
    """Periodic with period dividing n iff the c2 coefficient vanishes (r^n = 1)."""
    cf = lambda_closed_form(seq)
    if cf.r ** n != 1:
        raise TorsionRequired(f"r = {cf.r} is not an n-th root of unity for n = {n}")
    bound = bound or 12 * n
    vals = seq.terms(0, max(bound, 4 * n))
    report = {"c1": str(cf.c1), "c2": str(cf.c2), "lambda_star": str(cf.lam_star),
              "c2_zero": cf.c2.is_zero(), "n": n}
    if cf.c2.is_zero():
        report["periodic"] = all(vals[k + n] == vals[k] for k in range(0, 3 * n + 1))
        report["counterexample"] = None
    else:
        k = next(k for k in range(0, 3 * n + 1) if vals[k + n] != vals[k])
        report["periodic"] = False
        report["counterexample"] = k
    report["zero_set"] = [k for k in range(0, bound + 1) if vals[k].is_zero()]
    return report


def w_elements(p: DoubleRootParams):
    """(w1, w2, w) in A(2r, -r^2, gamma); checks 2(r-1) w = w1."""
    A = p.presentation()
    du, ud = AlgebraElement.word(A, "du"), AlgebraElement.word(A, "ud")
    alpha, beta, gamma = p.alpha, p.beta, p.gamma
    w1 = ud * (2 * beta + alpha) + du * (alpha - 2) + 2 * gamma
    w2 = du * 2 - ud * 2
    w = du - ud * p.r + p.epsilon
    assert (w * (2 * (p.r - 1)) - w1).is_zero()
    return w1, w2, w


def sigma_identities(p: DoubleRootParams) -> dict:
    """Check d.x = sigma(x).d for sigma(w1) = r w1 and sigma(w2) = r w2 + w1."""
    w1, w2, _ = w_elements(p)
    d = AlgebraElement.gen(w1.pres, "d")
    first = d * w1 - (w1 * p.r) * d
    second = d * w2 - (w2 * p.r + w1) * d
    return {"sigma_w1": first.is_zero(), "sigma_w2": second.is_zero()}


def sigma_point(p: DoubleRootParams, pt: IdealPoint) -> IdealPoint:
    """Image of the ideal (w1 - a1, w2 - a2) under sigma: (r a1, r a2 + a1)."""
    return IdealPoint(p.r * pt.a1, p.r * pt.a2 + pt.a1)


def sigma_iterate(p: DoubleRootParams, pt: IdealPoint, k: int) -> IdealPoint:
    for _ in range(k):
        pt = sigma_point(p, pt)
    return pt


def fixed_ideal_criterion(p: DoubleRootParams, pt: IdealPoint, n: int) -> dict:
    """sigma^n fixes (w1 - a1, w2 - a2) iff a1 = 0, for r^n = 1 in characteristic 0."""
    if p.r ** n != 1:
        raise TorsionRequired(f"r = {p.r} is not an n-th root of unity for n = {n}")
    a1, a2 = unify(p.r, pt.a1, pt.a2)[1:]
    pt = IdealPoint(a1, a2)
    image = sigma_iterate(p, pt, n)
    fixed = image == pt
    return {"fixed": fixed, "a1_zero": a1.is_zero(), "consistent": fixed == a1.is_zero(),
            "image": [str(image.a1), str(image.a2)]}


def abar_relation_check(p: DoubleRootParams) -> dict:
    """The quotient A/Aw satisfies d u - r u d = -epsilon.

    Realized by a map A -> B(r) (gamma = 0) or A -> C(r), d -> -epsilon a (gamma != 0);
    both the defining relations and w itself must go to zero.
    """
    A = p.presentation()
    eps = p.epsilon
    if p.gamma.is_zero():
        tgt = qplane(p.r)
        d_img = AlgebraElement.gen(tgt, "a")
        kind = "quantum plane"
    else:
        tgt = qweyl(p.r)
        d_img = AlgebraElement.gen(tgt, "a") * (-eps)
        kind = "quantized Weyl algebra"
    m = make_map(A, tgt, f"A -> A/Aw ({kind})", d=d_img, u=AlgebraElement.gen(tgt, "b"))
    hom = check_hom(m)
    w_vanishes = False
    if hom.ok:
        _, _, w = w_elements(p)
        w_vanishes = apply_hom(verify(m), w).is_zero()
    return {
        "quotient": kind,
        "relation": f"d*u - ({p.r})*u*d = {-eps}",
        "relations_vanish": hom.ok,
        "w_vanishes": w_vanishes,
        "ok": hom.ok and w_vanishes,
    }


def wn_centrality(p: DoubleRootParams, n: int, bound: int = 360) -> dict:
    order = root_of_unity_order(p.r, bound)
    if order != n:
        raise TorsionRequired(f"r = {p.r} is not a root of unity of order exactly {n}")
    _, _, w = w_elements(p)
    scalars = normality_scalars(w)
    powers = {}
    acc = AlgebraElement.scalar(w.pres, 1)
    for k in range(1, n + 1):
        acc = acc * w
        powers[k] = is_central(acc)
    return {
        "n": n,
        "normality_scalars": None if scalars is None else [str(c) for c in scalars],
        "central_power": powers[n],
        "lower_powers_noncentral": not any(powers[k] for k in range(1, n)),
        "ok": powers[n] and not any(powers[k] for k in range(1, n)),
    }


def bezout_w(n: int, lam) -> tuple:
    """Polynomials (f, g) in one variable t with 1 = f(t) t + g(t) (t^n - lam)."""
    if n < 1:
        raise ValueError("n must be positive")
    if lam == 0:
        raise ZeroLambda("lambda must be nonzero")
    (lam,) = unify(lam)
    one = lam.one()
    t = (lam.zero(), one)
    tn = P.add(P.monomial(n, one), (-lam,))
    g, f, h = P.xgcd(t, tn)
    assert g == (one,)
    return f, h


def bezout_check(n: int, lam) -> bool:
    f, g = bezout_w(n, lam)
    (lam,) = unify(lam)
    one = lam.one()
    t = (lam.zero(), one)
    tn = P.add(P.monomial(n, one), (-lam,))
    return P.add(P.mul(f, t), P.mul(g, tn)) == (one,)


def kdim_conditions(seq: LambdaSequence, bound: int) -> dict:
    """Bounded evidence for the two orbit conditions.

    (a) sigma^n fixes (x - lambda_0, y - lambda_1): least n <= bound with
        (lambda_n, lambda_{n+1}) = (lambda_0, lambda_1);
    (b) x lies in the n-th orbit ideal, i.e. lambda_n = 0, for n <= bound.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    vals = seq.terms(0, bound + 1)
    cond_a = next((n for n in range(1, bound + 1)
                   if vals[n] == seq.lam0 and vals[n + 1] == seq.lam1), None)
    cond_b = [n for n in range(0, bound + 1) if vals[n].is_zero()]
    report = {
        "bounded_evidence": True,
        "bound": bound,
        "condition_a_period": cond_a,
        "condition_b_zeros": cond_b,
        "note": "bounded enumeration only; the unbounded conditions are not decided here",
    }
    try:
        cf = lambda_closed_form(seq)
    except (InvalidParameter, RIsOne):
        cf = None
    if cf is not None:
        report["closed_form"] = {"r": str(cf.r), "c1": str(cf.c1), "c2": str(cf.c2),
                                 "lambda_star": str(cf.lam_star), "c2_zero": cf.c2.is_zero()}
    return report
