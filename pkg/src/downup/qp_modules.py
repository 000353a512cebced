"""Modules over the quantum plane B(q) = K<a, b | ab = q ba>.

With I = B(ab - 1)(a - 1) inside J = B(a - 1):

* ``V`` = J/I, basis v(n) for all integers n, simple;
* ``W`` = B/J, basis w(n) for n >= 0, uniserial;
* ``M`` = B/I, basis v(n) together with m(p) for p >= 0, an essential,
  non-Artinian extension of V.

The modules are realized by their bases and the explicit action of a and b,
never through ideal arithmetic.
"""

from __future__ import annotations

from .errors import InvalidParameter, ZeroVector
from .modbase import ModuleElement, Witness, guard_torsion, random_module_element, TORSION_BOUND
from .ncalg import AlgebraElement, qplane
from .parsing import evaluate, parse
from .scalars import Scalar


class QPModuleElement(ModuleElement):
    __slots__ = ()
    family = "qp"
    algebra = "qplane"
    symbols = {"V": "v", "W": "w", "M": "vm"}

    @classmethod
    def check_index(cls, kind, idx):
        if kind in "mw" and idx < 0:
            raise InvalidParameter(f"{kind}({idx}) needs a nonnegative index")

    def act(self, g: str) -> "QPModuleElement":
        q = self.q
        out = []
        for (kind, n), c in self.terms.items():
            if g == "a":
                if kind == "v":
                    # a v(n+1) = q^n v(n) for n >= 0;  a v(-n) = v(-n-1) for n >= 0
                    out.append((("v", n - 1), c * q ** (n - 1) if n >= 1 else c))
                elif kind == "w":
                    out.append((("w", n), c * q ** n))
                else:
                    f = c * q ** n
                    out.append((("m", n), f))
                    out.append((("v", n), f))
            elif g == "b":
                if kind == "v":
                    # b v(n) = v(n+1) for n >= 0;  b v(m) = q^m v(m+1) for m <= -1
                    out.append((("v", n + 1), c if n >= 0 else c * q ** n))
                else:
                    out.append(((kind, n + 1), c))
            else:
                raise InvalidParameter(f"unknown generator {g!r}")
        return self._new(out)


def relation_residue(x: QPModuleElement) -> QPModuleElement:
    """(ab - q ba).x computed letter by letter; zero iff the relation holds on x."""
    return x.act_word("ab") - x.act_word("ba") * x.q


def element(module: str, q: Scalar, terms=()) -> QPModuleElement:
    return QPModuleElement(module, q, terms)


def random_element(module: str, q: Scalar, rng, max_support: int = 8, max_index: int = 12) -> QPModuleElement:
    return random_module_element(QPModuleElement, module, q, rng, max_support, max_index)


def parse_element(module: str, q: Scalar, text: str) -> QPModuleElement:
    allowed = QPModuleElement.symbols[module]
    node = parse(text, syms=allowed)

    def resolve(n):
        return QPModuleElement.basis(module, q, n[1], n[2])

    value = evaluate(node, resolve)
    if not isinstance(value, QPModuleElement):
        if value == 0:
            return QPModuleElement(module, q)
        raise InvalidParameter("a module element needs basis symbols")
    return value


def _gens(q):
    pres = qplane(q)
    return pres, AlgebraElement.gen(pres, "a"), AlgebraElement.gen(pres, "b")


def length_V(v: QPModuleElement) -> int:
    """Spread of the v-support: largest index minus smallest."""
    idx = list(v.part("v"))
    if not idx:
        raise ZeroVector("length of the zero vector")
    return max(idx) - min(idx)


def submodule_index_W(w: QPModuleElement) -> int:
    """n such that B.w = W_n = span{w(m) : m >= n}."""
    idx = list(w.part("w"))
    if not idx:
        raise ZeroVector("zero vector generates the zero submodule")
    return min(idx)


def quotient_character_W(q: Scalar, n: int) -> Scalar:
    """Eigenvalue of a on the simple top W_n / W_{n+1}."""
    if n < 0:
        raise InvalidParameter("n must be nonnegative")
    return q ** n


def simplicity_witness_V(v: QPModuleElement, bound: int = TORSION_BOUND) -> Witness:
    """Operator c with c.v = v(0).

    The ab-eigenvalues q^k on v(k) are distinct, so a product of
    (ab - q^k)/(q^n0 - q^k) isolates one component v(n0); powers of a (n0 > 0)
    or b (n0 < 0) then carry it to v(0).
    """
    if v.module != "V":
        raise InvalidParameter("simplicity witness needs an element of V")
    if v.is_zero():
        raise ZeroVector("zero vector generates the zero submodule")
    q = v.q
    guard_torsion(q, bound)
    pres, a, b = _gens(q)
    support = sorted(v.part("v"))
    n0 = min(support, key=lambda k: (abs(k), k < 0))
    op = AlgebraElement.scalar(pres, 1)
    steps = []
    for k in support:
        if k == n0:
            continue
        op = (a * b - q ** k) * (1 / (q ** n0 - q ** k)) * op
        steps.append(f"(a*b - {q ** k})/({q ** n0 - q ** k})")
    lam = v.part("v")[n0]
    if n0 > 0:
        shift = a ** n0 * (1 / q ** (n0 * (n0 - 1) // 2))
        steps.append(f"a^{n0}")
    elif n0 < 0:
        m = -n0
        shift = b ** m * q ** (m * (m + 1) // 2)
        steps.append(f"b^{m}")
    else:
        shift = AlgebraElement.scalar(pres, 1)
    op = shift * op * (1 / lam)
    result = v.act_algebra(op)
    assert result == QPModuleElement.basis("V", q, "v", 0), "simplicity witness failed"
    return Witness(op, v, result, steps)


def essentiality_witness_M(m: QPModuleElement, bound: int = TORSION_BOUND) -> Witness:
    """Operator c with c.m a nonzero element of V.

    For each m(n) in the support, taken with n descending, apply (a - q^n):
    it kills m(n), rescales the other m(j) by q^j - q^n != 0 and adds q^j v(j).
    After the last factor only v-terms remain, and they cannot cancel because
    (a - q^n) raises the v-length by one.
    """
    if m.module != "M":
        raise InvalidParameter("essentiality witness needs an element of M")
    if m.is_zero():
        raise ZeroVector("zero vector generates the zero submodule")
    q = m.q
    guard_torsion(q, bound)
    pres, a, _ = _gens(q)
    op = AlgebraElement.scalar(pres, 1)
    cur = m
    steps = []
    for n in sorted(m.part("m"), reverse=True):
        factor = a - q ** n
        cur = cur.act_algebra(factor)
        op = factor * op
        steps.append(f"a - {q ** n}")
    assert not cur.part("m") and not cur.is_zero(), "essentiality witness failed"
    return Witness(op, m, cur, steps)


def project_to_W(x: QPModuleElement) -> QPModuleElement:
    """M -> W = M/V: drop v-terms, rename m(p) -> w(p)."""
    return QPModuleElement("W", x.q, [(("w", p), c) for p, c in x.part("m").items()])
