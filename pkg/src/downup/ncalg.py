"""Two-generator algebras given by terminating rewriting systems.

Words are plain strings over the generator letters (``""`` is the unit).
Three presentations are built in:

* ``downup(alpha, beta, gamma)`` on letters d > u with
  ``ddu -> alpha*dud + beta*udd + gamma*d`` and
  ``duu -> alpha*udu + beta*uud + gamma*u``;
* ``qplane(q)`` on b > a with ``ba -> q^-1*ab``  (ab = q ba);
* ``qweyl(q)`` on b > a with ``ba -> q^-1*ab - q^-1``  (ab - q ba = 1).

Every right-hand side is smaller than its left-hand side in the
degree-lexicographic order, so rewriting terminates.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional

from .errors import InvalidParameter, ModeMismatch, PresentationMismatch
from .scalars import Scalar, unify

DOWNUP_NORMAL_WORD = re.compile(r"^u*(du)*d*$")


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: tuple  # ((word, coeff), ...)


@dataclass(frozen=True, eq=False)
class Presentation:
    name: str
    params: tuple  # ((name, Scalar), ...)
    letters: str  # highest precedence first
    rules: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self.name, self.mode) == (other.name, other.mode) and self.params == other.params

    def __hash__(self):
        return hash((self.name, self.params))

    def param(self, key: str) -> Scalar:
        return dict(self.params)[key]

    @property
    def one_scalar(self) -> Scalar:
        return self.params[0][1].one()

    @property
    def mode(self) -> tuple:
        return self.params[0][1].mode

    @property
    def generators(self) -> tuple:
        """Generators in the conventional order (d, u) or (a, b)."""
        return ("d", "u") if self.name == "downup" else ("a", "b")

    def deglex_key(self, word: str) -> tuple:
        rank = {ch: len(self.letters) - i for i, ch in enumerate(self.letters)}
        return (len(word), tuple(rank[ch] for ch in word))

    def find_redex(self, word: str):
        for rule in self.rules:
            pos = word.find(rule.lhs)
            if pos >= 0:
                return pos, rule
        return None, None

    def is_normal_word(self, word: str) -> bool:
        return all(rule.lhs not in word for rule in self.rules)

    def describe(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.name}({ps})"


def make_presentation(name: str, **params) -> Presentation:
    if name == "downup":
        alpha, beta, gamma = unify(params["alpha"], params["beta"], params["gamma"])
        rules = (
            Rule("ddu", (("dud", alpha), ("udd", beta), ("d", gamma))),
            Rule("duu", (("udu", alpha), ("uud", beta), ("u", gamma))),
        )
        return Presentation("downup", (("alpha", alpha), ("beta", beta), ("gamma", gamma)), "du", rules)
    if name in ("qplane", "qweyl"):
        (q,) = unify(params["q"])
        if q.is_zero():
            raise InvalidParameter("q must be nonzero")
        qi = q.inv()
        rhs = (("ab", qi),) if name == "qplane" else (("ab", qi), ("", -qi))
        return Presentation(name, (("q", q),), "ba", (Rule("ba", rhs),))
    raise InvalidParameter(f"unknown algebra {name!r}")


def downup(alpha, beta, gamma) -> Presentation:
    return make_presentation("downup", alpha=alpha, beta=beta, gamma=gamma)


def qplane(q) -> Presentation:
    return make_presentation("qplane", q=q)


def qweyl(q) -> Presentation:
    return make_presentation("qweyl", q=q)


def _check_scalar(pres: Presentation, c):
    if isinstance(c, Scalar):
        if c.mode != pres.mode:
            raise ModeMismatch(f"coefficient {c} does not live in the field of {pres.describe()}")
        return c
    return pres.one_scalar.lift(c)


def _reduce_word(pres: Presentation, word: str) -> Mapping[str, Scalar]:
    cache = pres._cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    pos, rule = pres.find_redex(word)
    if rule is None:
        out = {word: pres.one_scalar}
    else:
        head, tail = word[:pos], word[pos + len(rule.lhs):]
        out: Dict[str, Scalar] = {}
        for w, c in rule.rhs:
            if c.is_zero():
                continue
            for w2, c2 in _reduce_word(pres, head + w + tail).items():
                v = out.get(w2)
                v = c * c2 if v is None else v + c * c2
                if v.is_zero():
                    out.pop(w2, None)
                else:
                    out[w2] = v
    cache[word] = out
    return out


def normal_form(pres: Presentation, raw: Mapping[str, object] | Iterable) -> "AlgebraElement":
    """Reduce a raw linear combination ``{word: coeff}`` to normal form."""
    items = raw.items() if isinstance(raw, Mapping) else raw
    out: Dict[str, Scalar] = {}
    for word, c in items:
        c = _check_scalar(pres, c)
        if c.is_zero():
            continue
        for ch in word:
            if ch not in pres.letters:
                raise InvalidParameter(f"letter {ch!r} is not a generator of {pres.name}")
        for w2, c2 in _reduce_word(pres, word).items():
            v = out.get(w2)
            v = c * c2 if v is None else v + c * c2
            if v.is_zero():
                out.pop(w2, None)
            else:
                out[w2] = v
    return AlgebraElement(pres, out, _trusted=True)


class AlgebraElement:
    """Finite linear combination of normal words of a presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: Mapping[str, Scalar], *, _trusted: bool = False):
        if not _trusted:
            other = normal_form(pres, terms)
            terms = other.terms
        self.pres = pres
        self.terms = dict(sorted(terms.items(), key=lambda t: pres.deglex_key(t[0]), reverse=True))

    # constructors
    @classmethod
    def scalar(cls, pres: Presentation, c) -> "AlgebraElement":
        return normal_form(pres, {"": c})

    @classmethod
    def gen(cls, pres: Presentation, letter: str) -> "AlgebraElement":
        return normal_form(pres, {letter: 1})

    @classmethod
    def word(cls, pres: Presentation, word: str, c=1) -> "AlgebraElement":
        return normal_form(pres, {word: c})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def coefficient(self, word: str) -> Scalar:
        return self.terms.get(word, self.pres.one_scalar.zero())

    def _same(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.pres != self.pres:
                raise PresentationMismatch(f"{self.pres.describe()} vs {other.pres.describe()}")
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return AlgebraElement.scalar(self.pres, other)
        return None

    def __add__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return normal_form(self.pres, list(self.terms.items()) + list(o.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.pres, {w: -c for w, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            o = self._same(other)
            raw = []
            for w1, c1 in self.terms.items():
                for w2, c2 in o.terms.items():
                    raw.append((w1 + w2, c1 * c2))
            return normal_form(self.pres, raw)
        if isinstance(other, (Scalar, int, Fraction)):
            c = _check_scalar(self.pres, other)
            if c.is_zero():
                return AlgebraElement(self.pres, {}, _trusted=True)
            return AlgebraElement(self.pres, {w: v * c for w, v in self.terms.items()}, _trusted=True)
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central
        return self.__mul__(other)

    def __truediv__(self, other):
        c = _check_scalar(self.pres, other)
        return self * c.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        acc = AlgebraElement.scalar(self.pres, 1)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def __eq__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.pres.name, tuple(self.terms)))

    def __str__(self):
        return render_terms([("*".join(w), c) for w, c in self.terms.items()])

    def __repr__(self):
        return f"<{self.pres.name}: {self}>"


def render_terms(terms) -> str:
    """Render ``[(basis_text, coeff), ...]``; ``basis_text == ""`` means the unit."""
    if not terms:
        return "0"
    parts = []
    for basis, c in terms:
        neg = c.looks_negative()
        s = str(-c) if neg else str(c)
        if " " in s:
            s = f"({s})"
        if not basis:
            body = s
        elif s == "1":
            body = basis
        else:
            body = f"{s}*{basis}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def r_commutator(x: AlgebraElement, y: AlgebraElement, r) -> AlgebraElement:
    """``[x, y]_r = xy - r yx``."""
    return x * y - (y * x) * r


def check_confluence(pres: Presentation) -> dict:
    """Resolve every overlap/inclusion ambiguity between rule left-hand sides."""
    ambiguities = []
    for i, r1 in enumerate(pres.rules):
        for j, r2 in enumerate(pres.rules):
            l1, l2 = r1.lhs, r2.lhs
            # suffix of l1 == prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    ambiguities.append(_resolve(pres, "overlap", word, r1, 0, r2, len(l1) - k))
            # l2 strictly inside l1
            if i != j and len(l2) <= len(l1):
                start = l1.find(l2)
                while start >= 0:
                    ambiguities.append(_resolve(pres, "inclusion", l1, r1, 0, r2, start))
                    start = l1.find(l2, start + 1)
    return {
        "presentation": pres.describe(),
        "ambiguities": ambiguities,
        "confluent": all(a["resolved"] for a in ambiguities),
    }


def _one_step(pres, word, rule, pos):
    head, tail = word[:pos], word[pos + len(rule.lhs):]
    return normal_form(pres, [(head + w + tail, c) for w, c in rule.rhs])


def _resolve(pres, kind, word, r1, p1, r2, p2) -> dict:
    left = _one_step(pres, word, r1, p1)
    right = _one_step(pres, word, r2, p2)
    return {
        "kind": kind,
        "word": word,
        "rules": [r1.lhs, r2.lhs],
        "via_first": str(left),
        "via_second": str(right),
        "resolved": left == right,
    }


def normality_scalars(x: AlgebraElement) -> Optional[tuple]:
    """Scalars ``c_g`` with ``g*x == c_g * x*g`` for each generator, if they exist."""
    pres = x.pres
    if x.is_zero():
        return None
    out = []
    for g in pres.generators:
        ge = AlgebraElement.gen(pres, g)
        left, right = ge * x, x * ge
        if right.is_zero():
            return None
        lead = next(iter(right.terms))
        c = left.coefficient(lead) / right.terms[lead]
        if left != right * c:
            return None
        out.append(c)
    return tuple(out)


def is_central(x: AlgebraElement) -> bool:
    for g in x.pres.generators:
        ge = AlgebraElement.gen(x.pres, g)
        if not (ge * x - x * ge).is_zero():
            return False
    return True


def random_element(pres: Presentation, rng: random.Random, max_degree: int = 4, max_terms: int = 4,
                   coeff_range: int = 5) -> AlgebraElement:
    """Random element with small integer coefficients, for randomized suites."""
    raw = []
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        word = "".join(rng.choice(pres.letters) for _ in range(deg))
        c = rng.randint(-coeff_range, coeff_range)
        raw.append((word, c))
    return normal_form(pres, raw)
