"""Modules over the quantized Weyl algebra C(q) = K<a, b | ab - q ba = 1>.

``M`` has basis v(n), w(n) (n >= 0) with

    a v(0) = 0,   a v(n) = [n]_q v(n-1),   b v(n) = v(n+1),
    a w(n) = q^n (w(n) + w(n+1)),
    b w(n) = q^-n/(1-q) w(n) + (-1)^n v(0),

where [n]_q = (q^n - 1)/(q - 1). ``V`` = span of the v(n) is a simple
submodule and ``W`` = M/V (the v(0) term of b w(n) is dropped) is uniserial.
"""

from __future__ import annotations

from .errors import InvalidParameter, ZeroVector
from .modbase import ModuleElement, Witness, guard_torsion, random_module_element, TORSION_BOUND
from .ncalg import AlgebraElement, qweyl
from .parsing import evaluate, parse
from .scalars import Scalar


def q_integer(q: Scalar, n: int) -> Scalar:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    acc = q.zero()
    for k in range(n):
        acc = acc + q ** k
    return acc


class QWAModuleElement(ModuleElement):
    __slots__ = ()
    family = "qwa"
    algebra = "qweyl"
    symbols = {"V": "v", "W": "w", "M": "vw"}

    @classmethod
    def check_q(cls, q):
        if q.is_zero() or q == 1:
            raise InvalidParameter("q must differ from 0 and 1")

    @classmethod
    def check_index(cls, kind, idx):
        if idx < 0:
            raise InvalidParameter(f"{kind}({idx}) needs a nonnegative index")

    def act(self, g: str) -> "QWAModuleElement":
        q = self.q
        out = []
        for (kind, n), c in self.terms.items():
            if g == "a":
                if kind == "v":
                    if n > 0:
                        out.append((("v", n - 1), c * q_integer(q, n)))
                else:
                    f = c * q ** n
                    out.append((("w", n), f))
                    out.append((("w", n + 1), f))
            elif g == "b":
                if kind == "v":
                    out.append((("v", n + 1), c))
                else:
                    out.append((("w", n), c * b_eigenvalue(q, n)))
                    if self.module == "M":
                        out.append((("v", 0), c if n % 2 == 0 else -c))
            else:
                raise InvalidParameter(f"unknown generator {g!r}")
        return self._new(out)


def b_eigenvalue(q: Scalar, n: int) -> Scalar:
    """q^-n / (1 - q): the scalar by which b acts on w(n) modulo lower terms."""
    return q ** (-n) / (1 - q)


quotient_character_W = b_eigenvalue


def relation_residue(x: QWAModuleElement) -> QWAModuleElement:
    """(ab - q ba - 1).x computed letter by letter; zero iff the relation holds on x."""
    return x.act_word("ab") - x.act_word("ba") * x.q - x


def element(module: str, q: Scalar, terms=()) -> QWAModuleElement:
    return QWAModuleElement(module, q, terms)


def random_element(module: str, q: Scalar, rng, max_support: int = 8, max_index: int = 12) -> QWAModuleElement:
    return random_module_element(QWAModuleElement, module, q, rng, max_support, max_index)


def parse_element(module: str, q: Scalar, text: str) -> QWAModuleElement:
    node = parse(text, syms=QWAModuleElement.symbols[module])
    value = evaluate(node, lambda n: QWAModuleElement.basis(module, q, n[1], n[2]))
    if not isinstance(value, QWAModuleElement):
        if value == 0:
            return QWAModuleElement(module, q)
        raise InvalidParameter("a module element needs basis symbols")
    return value


def submodule_index_W(w: QWAModuleElement) -> int:
    idx = list(w.part("w"))
    if not idx:
        raise ZeroVector("zero vector generates the zero submodule")
    return min(idx)


def simplicity_witness_V(v: QWAModuleElement, bound: int = TORSION_BOUND) -> Witness:
    """Normalized a^top with a^top . v = v(0); top is the largest v-index."""
    if v.module != "V":
        raise InvalidParameter("simplicity witness needs an element of V")
    if v.is_zero():
        raise ZeroVector("zero vector generates the zero submodule")
    q = v.q
    guard_torsion(q, bound)
    pres = qweyl(q)
    part = v.part("v")
    top = max(part)
    lam = part[top]
    for k in range(1, top + 1):
        lam = lam * q_integer(q, k)
    op = AlgebraElement.gen(pres, "a") ** top * (1 / lam)
    result = v.act_algebra(op)
    assert result == QWAModuleElement.basis("V", q, "v", 0), "simplicity witness failed"
    return Witness(op, v, result, [f"a^{top}"] if top else [])


def essentiality_witness_M(m: QWAModuleElement, bound: int = TORSION_BOUND) -> Witness:
    """Operator c with c.m a nonzero element of V.

    While w-terms remain, apply b - q^-n/(1-q) with n the largest w-index.
    That factor annihilates the w(n) part up to (-1)^n v(0) and only rescales
    lower w(j) by a nonzero amount, so at most top+1 factors are needed. The
    v-part never cancels: b raises the highest v-index.
    """
    if m.module != "M":
        raise InvalidParameter("essentiality witness needs an element of M")
    if m.is_zero():
        raise ZeroVector("zero vector generates the zero submodule")
    q = m.q
    guard_torsion(q, bound)
    pres = qweyl(q)
    b = AlgebraElement.gen(pres, "b")
    op = AlgebraElement.scalar(pres, 1)
    cur = m
    steps = []
    while cur.part("w"):
        n = max(cur.part("w"))
        lam = b_eigenvalue(q, n)
        factor = b - lam
        cur = cur.act_algebra(factor)
        op = factor * op
        steps.append(f"b - ({lam})")
    assert not cur.is_zero(), "essentiality witness failed"
    return Witness(op, m, cur, steps)


def project_to_W(x: QWAModuleElement) -> QWAModuleElement:
    """M -> W = M/V."""
    return QWAModuleElement("W", x.q, [(("w", n), c) for n, c in x.part("w").items()])
