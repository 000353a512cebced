"""Dense univariate polynomials over an exact field.

A polynomial is a tuple of coefficients, lowest degree first, with no trailing
zeros; ``()`` is the zero polynomial. Coefficients may be any exact field
elements that interoperate with ``int`` (``Fraction`` or a ``Scalar``).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence, Tuple

Poly = Tuple


def trim(p: Sequence) -> Poly:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def degree(p: Poly) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(p) - 1


def add(p: Poly, r: Poly) -> Poly:
    if len(p) < len(r):
        p, r = r, p
    out = list(p)
    for i, c in enumerate(r):
        out[i] = out[i] + c
    return trim(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, r: Poly) -> Poly:
    return add(p, neg(r))


def scale(p: Poly, c) -> Poly:
    if c == 0:
        return ()
    return trim([c * x for x in p])


def _rational(p) -> bool:
    return all(type(c) in (Fraction, int) for c in p)


def _mul_rational(p: Poly, r: Poly) -> Poly:
    # clear denominators once and convolve plain integers
    mp = lcm(*(Fraction(c).denominator for c in p))
    mr = lcm(*(Fraction(c).denominator for c in r))
    ip = [int(c * mp) for c in p]
    ir = [int(c * mr) for c in r]
    out = [0] * (len(p) + len(r) - 1)
    for i, x in enumerate(ip):
        if x:
            for j, y in enumerate(ir):
                out[i + j] += x * y
    m = mp * mr
    return trim([Fraction(c, m) for c in out])


def mul(p: Poly, r: Poly) -> Poly:
    if not p or not r:
        return ()
    if len(p) > 2 and len(r) > 2 and _rational(p) and _rational(r):
        return _mul_rational(p, r)
    out = [0] * (len(p) + len(r) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(r):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_(p: Poly, r: Poly) -> tuple[Poly, Poly]:
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dr = len(r) - 1
    lead = r[-1]
    inv_lead = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
    quot = [0] * max(len(p) - dr, 0)
    for k in range(len(p) - 1 - dr, -1, -1):
        c = rem[k + dr] * inv_lead
        quot[k] = c
        if c == 0:
            continue
        for j, y in enumerate(r):
            rem[k + j] = rem[k + j] - c * y
    return trim(quot), trim(rem[:dr])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    lead = p[-1]
    if lead == 1:
        return p
    inv = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
    return tuple(c * inv for c in p[:-1]) + (p[-1] * inv,)


def gcd(p: Poly, r: Poly) -> Poly:
    """Monic greatest common divisor (``()`` if both inputs are zero)."""
    while r:
        p, r = r, divmod_(p, r)[1]
    return monic(p)


def xgcd(p: Poly, r: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*p + t*r == g`` and ``g`` monic."""
    r0, r1 = p, r
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return (), s0, t0
    lead = r0[-1]
    inv = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def monomial(k: int, c=1) -> Poly:
    return trim([0] * k + [c])
