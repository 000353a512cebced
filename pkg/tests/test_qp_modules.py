import random
from fractions import Fraction

import pytest

from downup import qp_modules as QP
from downup.errors import InvalidParameter, ParseError, ParameterMismatch, TorsionParameter, ZeroVector
from downup.ncalg import AlgebraElement, normal_form, qplane
from downup.scalars import Cyclotomic, Rational, RationalFunction

Q = Rational(Fraction(2, 3))
q = RationalFunction.q()


def el(module, text, qq=Q):
    return QP.parse_element(module, qq, text)


@pytest.mark.parametrize("qq", [Q, q], ids=["2/3", "q"])
def test_relation_on_basis(qq):
    for n in range(-15, 16):
        assert QP.relation_residue(QP.QPModuleElement.basis("V", qq, "v", n)).is_zero()
        assert QP.relation_residue(QP.QPModuleElement.basis("M", qq, "v", n)).is_zero()
    for n in range(16):
        assert QP.relation_residue(QP.QPModuleElement.basis("W", qq, "w", n)).is_zero()
        assert QP.relation_residue(QP.QPModuleElement.basis("M", qq, "m", n)).is_zero()


def test_frozen_actions():
    # a v(n) = q^(n-1) v(n-1) for n >= 1, a v(n) = v(n-1) otherwise
    assert el("V", "v(3)").act("a") == el("V", "4/9*v(2)")
    assert el("V", "v(0)").act("a") == el("V", "v(-1)")
    assert el("V", "v(-2)").act("b") == el("V", "9/4*v(-1)")
    assert el("M", "m(2)").act("a") == el("M", "4/9*m(2) + 4/9*v(2)")


def test_module_action_respects_normal_forms():
    # raw words and their normal forms must act identically
    B = qplane(Q)
    rng = random.Random(2)
    x = el("M", "m(0) - 3*m(2) + v(-3) + 2*v(4)")
    for _ in range(40):
        raw = [("".join(rng.choice("ab") for _ in range(rng.randint(0, 5))), rng.randint(-4, 4))
               for _ in range(3)]
        direct = x.zero()
        for w, c in raw:
            direct = direct + x.act_word(w) * c
        assert x.act_algebra(normal_form(B, raw)) == direct


def test_essentiality_frozen():
    w = QP.essentiality_witness_M(el("M", "m(1) + v(0)"))
    assert str(w.result) == "v(-1) - 2/3*v(0) + 2/3*v(1)"
    assert QP.essentiality_witness_M(el("M", "m(0)")).result == el("M", "v(0)")
    assert w.recheck()


def test_simplicity_frozen():
    w = QP.simplicity_witness_V(el("V", "v(2)"))
    assert w.operator == AlgebraElement.gen(qplane(Q), "a") ** 2 * Fraction(3, 2)
    w = QP.simplicity_witness_V(el("V", "v(2) - v(-1)"))
    assert w.result == el("V", "v(0)") and w.recheck()


def test_simplicity_random():
    rng = random.Random(8)
    for _ in range(60):
        v = QP.random_element("V", Q, rng)
        assert QP.simplicity_witness_V(v).result == el("V", "v(0)")


def test_length_growth():
    v = el("V", "v(-2) + v(3)")
    assert QP.length_V(v) == 5
    assert QP.length_V(v.act_algebra(AlgebraElement.gen(qplane(Q), "a") - Q ** 7)) == 6


def test_W_structure():
    w = el("W", "w(3) + 2*w(5)")
    assert QP.submodule_index_W(w) == 3
    assert QP.quotient_character_W(Q, 3) == Fraction(8, 27)
    assert QP.project_to_W(el("M", "m(3) + 2*m(5) + v(1)")) == w


def test_errors():
    with pytest.raises(TorsionParameter):
        QP.essentiality_witness_M(el("M", "m(1)", Rational(-1)))
    with pytest.raises(TorsionParameter):
        QP.simplicity_witness_V(QP.parse_element("V", Cyclotomic.zeta(5), "v(1)"))
    with pytest.raises(ZeroVector):
        QP.essentiality_witness_M(QP.element("M", Q))
    with pytest.raises(InvalidParameter):
        el("W", "w(-1)")
    with pytest.raises(InvalidParameter):
        QP.element("V", Q, {("m", 1): 1})
    with pytest.raises(ParseError):
        el("V", "m(1)")
    with pytest.raises(ParameterMismatch):
        el("V", "v(1)").act_algebra(AlgebraElement.gen(qplane(3), "a"))
