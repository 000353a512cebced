"""Exact coefficient fields.

Three modes are supported:

* ``Rational``          -- the rationals,
* ``RationalFunction``  -- the field Q(q) of rational functions in an indeterminate q,
* ``Cyclotomic``        -- the cyclotomic field Q(zeta_n), kept modulo the n-th
  cyclotomic polynomial.

Values are immutable. Binary operations between two scalars of different
modes raise :class:`ModeMismatch`; plain ``int`` and ``Fraction`` operands are
rational constants and are accepted by every mode.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd, lcm
from typing import Optional

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd

from . import poly as P
from .errors import DivisionByZero, ModeMismatch, ZeroInput

_ONE = Fraction(1)


class Scalar:
    __slots__ = ()

    # -- to be provided by subclasses
    @property
    def mode(self) -> tuple:
        raise NotImplementedError

    def lift(self, c) -> "Scalar":
        """Embed an ``int``/``Fraction`` into this scalar's mode."""
        raise NotImplementedError

    def _add(self, other): raise NotImplementedError
    def _mul(self, other): raise NotImplementedError
    def _neg(self): raise NotImplementedError
    def _inv(self): raise NotImplementedError
    def _key(self): raise NotImplementedError

    def is_zero(self) -> bool:
        raise NotImplementedError

    def constant_value(self) -> Optional[Fraction]:
        """The rational value if this element is a constant, else ``None``."""
        raise NotImplementedError

    def looks_negative(self) -> bool:
        """Leading coefficient is negative; used only for pretty-printing."""
        raise NotImplementedError

    # -- shared machinery
    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.mode != self.mode:
                raise ModeMismatch(f"cannot combine {mode_name(self.mode)} with {mode_name(other.mode)}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.lift(other)
        return None

    def zero(self) -> "Scalar":
        return self.lift(0)

    def one(self) -> "Scalar":
        return self.lift(1)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._add(o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._add(o._neg())

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o._add(self._neg())

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._mul(o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._mul(o.inv())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o._mul(self.inv())

    def __neg__(self):
        return self._neg()

    def __pos__(self):
        return self

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self._inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inv(), -k
        acc = self.one()
        while k:
            if k & 1:
                acc = acc._mul(base)
            k >>= 1
            if k:
                base = base._mul(base)
        return acc

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._key() == o._key()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        c = self.constant_value()
        if c is not None:
            return hash(c)
        return hash((self.mode, self._key()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


def mode_name(mode: tuple) -> str:
    if mode[0] == "Q(zeta)":
        return f"Q(zeta_{mode[1]})"
    return mode[0]


# --------------------------------------------------------------------------
# Rationals


class Rational(Scalar):
    __slots__ = ("value",)

    def __init__(self, value=0, denominator: int = 1):
        object.__setattr__(self, "value", Fraction(value, denominator) if denominator != 1 else Fraction(value))

    def __setattr__(self, name, value):
        raise AttributeError("Rational is immutable")

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def mode(self):
        return ("Q",)

    def lift(self, c):
        return Rational(c)

    def _add(self, o):
        return Rational(self.value + o.value)

    def _mul(self, o):
        return Rational(self.value * o.value)

    def _neg(self):
        return Rational(-self.value)

    def _inv(self):
        return Rational(1 / self.value)

    def _key(self):
        return self.value

    def is_zero(self):
        return self.value == 0

    def constant_value(self):
        return self.value

    def looks_negative(self):
        return self.value < 0

    def __str__(self):
        return str(self.value)


# --------------------------------------------------------------------------
# Rational functions in q


def _frac_poly(p) -> tuple:
    return P.trim([Fraction(c) for c in p])


def _to_zz(p) -> tuple:
    """Integer coefficient list (highest degree first) and the denominator cleared."""
    m = lcm(*(c.denominator for c in p))
    return [ZZ(c.numerator * (m // c.denominator)) for c in reversed(p)], m


def _cancel(num, den) -> tuple:
    """Remove the polynomial gcd of num and den; the gcd runs over Z via sympy."""
    fn, mn = _to_zz(num)
    fd, md = _to_zz(den)
    _, cn, cd = dup_inner_gcd(fn, fd, ZZ)
    # num/den = (cn/mn) / (cd/md)
    scale = Fraction(md, mn)
    return (tuple(Fraction(int(c)) * scale for c in reversed(cn)),
            tuple(Fraction(int(c)) for c in reversed(cd)))


def _power(p, k: int):
    acc, base = (_ONE,), p
    while k:
        if k & 1:
            acc = P.mul(acc, base)
        k >>= 1
        if k:
            base = P.mul(base, base)
    return acc


class RationalFunction(Scalar):
    """numerator/denominator in Q[q], denominator monic, coprime to numerator."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,), *, _canonical: bool = False):
        num = _frac_poly(num)
        den = _frac_poly(den)
        if not _canonical:
            if not den:
                raise DivisionByZero("zero denominator")
            if not num:
                den = (_ONE,)
            elif len(den) > 1:
                num, den = _cancel(num, den)
            lead = den[-1]
            if lead != 1:
                num = P.scale(num, 1 / lead)
                den = P.scale(den, 1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def q(cls) -> "RationalFunction":
        return cls((0, 1), (1,), _canonical=True)

    @property
    def mode(self):
        return ("Q(q)",)

    def lift(self, c):
        return RationalFunction((Fraction(c),), (_ONE,), _canonical=True)

    def _add(self, o):
        if self.den == o.den:
            return RationalFunction(P.add(self.num, o.num), self.den, _canonical=len(self.den) == 1)
        return RationalFunction(
            P.add(P.mul(self.num, o.den), P.mul(o.num, self.den)), P.mul(self.den, o.den)
        )

    def _mul(self, o):
        if len(self.den) == 1 and len(o.den) == 1:
            return RationalFunction(P.mul(self.num, o.num), (_ONE,), _canonical=True)
        if not self.num or not o.num:
            return self.zero()
        # cancel crosswise; both inputs are already reduced
        a, d = _cancel(self.num, o.den) if len(o.den) > 1 else (self.num, o.den)
        c, b = _cancel(o.num, self.den) if len(self.den) > 1 else (o.num, self.den)
        num, den = P.mul(a, c), P.mul(b, d)
        lead = den[-1]
        return RationalFunction(P.scale(num, 1 / lead), P.scale(den, 1 / lead), _canonical=True)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        num, den = (self.num, self.den) if k >= 0 else (self.den, self.num)
        if k < 0 and not num:
            raise DivisionByZero("inverse of zero")
        k = abs(k)
        if k == 0:
            return self.one()
        pn, pd = _power(num, k), _power(den, k)
        lead = pd[-1]
        return RationalFunction(P.scale(pn, 1 / lead), P.scale(pd, 1 / lead), _canonical=True)

    def _neg(self):
        return RationalFunction(P.neg(self.num), self.den, _canonical=True)

    def _inv(self):
        return RationalFunction(self.den, self.num)

    def _key(self):
        return (self.num, self.den)

    def is_zero(self):
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        if not self.is_constant():
            return None
        return self.num[0] if self.num else Fraction(0)

    def looks_negative(self):
        return bool(self.num) and self.num[-1] < 0

    def evaluate(self, x):
        """Substitute a value for q (``Fraction`` or a scalar of another mode)."""
        den = P.evaluate(self.den, x)
        if den == 0:
            raise DivisionByZero(f"denominator vanishes at q={x}")
        return P.evaluate(self.num, x) / den

    def __str__(self):
        n = _render_poly(self.num, "q")
        if self.den == (_ONE,):
            return n
        d = _render_poly(self.den, "q")
        if " " in n:
            n = f"({n})"
        if " " in d or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"


def _render_poly(p, var: str) -> str:
    if not p:
        return "0"
    out = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# --------------------------------------------------------------------------
# Cyclotomic fields


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.

    Computed as (x^n - 1) divided by the product of Phi_d over proper divisors d.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = P.trim([Fraction(-1)] + [Fraction(0)] * (n - 1) + [_ONE])
    for d in range(1, n):
        if n % d == 0:
            quo, rem = P.divmod_(num, tuple(Fraction(c) for c in cyclotomic_poly(d)))
            assert not rem
            num = quo
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if igcd(k, n) == 1)


class Cyclotomic(Scalar):
    """Element of Q(zeta_n) as a polynomial in zeta of degree < phi(n)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("order must be positive")
        coeffs = _frac_poly(coeffs)
        phi = cyclotomic_poly(order)
        if len(coeffs) >= len(phi):
            coeffs = P.divmod_(coeffs, tuple(Fraction(c) for c in phi))[1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def zeta(cls, n: int) -> "Cyclotomic":
        return cls(n, (0, 1))

    @property
    def mode(self):
        return ("Q(zeta)", self.order)

    def lift(self, c):
        return Cyclotomic(self.order, (c,))

    def _add(self, o):
        return Cyclotomic(self.order, P.add(self.coeffs, o.coeffs))

    def _mul(self, o):
        return Cyclotomic(self.order, P.mul(self.coeffs, o.coeffs))

    def _neg(self):
        return Cyclotomic(self.order, P.neg(self.coeffs))

    def _inv(self):
        phi = tuple(Fraction(c) for c in cyclotomic_poly(self.order))
        g, s, _ = P.xgcd(self.coeffs, phi)
        assert g == (_ONE,), "cyclotomic polynomial must be irreducible"
        return Cyclotomic(self.order, s)

    def _key(self):
        return self.coeffs

    def is_zero(self):
        return not self.coeffs

    def constant_value(self):
        if len(self.coeffs) > 1:
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def looks_negative(self):
        return bool(self.coeffs) and self.coeffs[-1] < 0

    def __str__(self):
        return _render_poly(self.coeffs, f"zeta:{self.order}")


# --------------------------------------------------------------------------


def root_of_unity_order(x, bound: int = 360) -> Optional[int]:
    """Least ``k <= bound`` with ``x**k == 1``, or ``None``.

    Rationals are decided exactly (only 1 and -1 are torsion) and so are
    non-constant rational functions (never torsion). In Q(zeta_n) every root of
    unity has order dividing lcm(2, n), so the search stops there.
    """
    if isinstance(x, (int, Fraction)):
        x = Rational(x)
    if x.is_zero():
        raise ZeroInput("zero is not a unit")
    c = x.constant_value()
    if c is not None:
        if c == 1:
            return 1
        if c == -1:
            return 2 if bound >= 2 else None
        return None
    if isinstance(x, RationalFunction):
        return None
    n = x.order
    cap = n if n % 2 == 0 else 2 * n
    acc = x
    for k in range(1, min(bound, cap) + 1):
        if acc == 1:
            return k
        acc = acc * x
    return None


def is_torsion(x, bound: int = 360) -> bool:
    return root_of_unity_order(x, bound) is not None


def unify(*values) -> list:
    """Bring ints, Fractions and scalars to one common mode.

    Pure numbers adopt the mode of the other arguments (``Rational`` when all
    are pure numbers); two genuine scalars of different modes raise.
    """
    mode_src = None
    for v in values:
        if isinstance(v, Scalar):
            if mode_src is None:
                mode_src = v
            elif v.mode != mode_src.mode:
                raise ModeMismatch(f"cannot combine {mode_name(mode_src.mode)} with {mode_name(v.mode)}")
    if mode_src is None:
        mode_src = Rational(0)
    return [v if isinstance(v, Scalar) else mode_src.lift(v) for v in values]


def random_scalar(rng, mode: str = "Q", order: int = 4, span: int = 5, nonzero: bool = False) -> Scalar:
    """Random scalar for seeded suites; ``mode`` is ``Q``, ``Q(q)`` or ``Q(zeta)``."""
    def num():
        return Fraction(rng.randint(-span, span), rng.randint(1, 3))

    while True:
        if mode == "Q":
            x = Rational(num())
        elif mode == "Q(q)":
            x = RationalFunction([num() for _ in range(rng.randint(1, 3))],
                                 [num() or _ONE] + [num() for _ in range(rng.randint(0, 1))])
        elif mode == "Q(zeta)":
            x = Cyclotomic(order, [num() for _ in range(len(cyclotomic_poly(order)) - 1)])
        else:
            raise ValueError(f"unknown mode {mode!r}")
        if not (nonzero and x.is_zero()):
            return x
