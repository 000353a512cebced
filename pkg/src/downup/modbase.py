"""Shared machinery for the explicit modules: basis-indexed vectors and witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .errors import InvalidParameter, ParameterMismatch, TorsionParameter
from .ncalg import AlgebraElement, render_terms
from .scalars import Rational, Scalar, root_of_unity_order

#: witness operations refuse q whose multiplicative order is at most this
TORSION_BOUND = 360

Symbol = Tuple[str, int]  # ("v", n) / ("m", p) / ("w", n)


class ModuleElement:
    """Finite linear combination of basis symbols of one explicit module.

    Subclasses fix the family (which algebra acts) and provide ``act``.
    """

    __slots__ = ("module", "q", "terms")

    family = ""
    algebra = ""  # name of the acting presentation
    symbols: Dict[str, str] = {}  # module name -> allowed symbol kinds

    def __init__(self, module: str, q: Scalar, terms: Dict[Symbol, object] | Iterable = ()):
        if module not in self.symbols:
            raise InvalidParameter(f"unknown module {module!r} for {self.family}")
        if not isinstance(q, Scalar):
            q = Rational(q)
        self.check_q(q)
        allowed = self.symbols[module]
        items = terms.items() if isinstance(terms, dict) else terms
        out: Dict[Symbol, Scalar] = {}
        for (kind, idx), c in items:
            if kind not in allowed:
                raise InvalidParameter(f"symbol {kind}({idx}) does not belong to {module}")
            self.check_index(kind, idx)
            if not isinstance(c, Scalar):
                c = q.lift(c)
            elif c.mode != q.mode:
                raise ParameterMismatch("coefficient and q live in different fields")
            key = (kind, idx)
            v = out[key] + c if key in out else c
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
        self.module = module
        self.q = q
        self.terms = dict(sorted(out.items()))

    # subclasses override
    @classmethod
    def check_q(cls, q: Scalar) -> None:
        if q.is_zero():
            raise InvalidParameter("q must be nonzero")

    @classmethod
    def check_index(cls, kind: str, idx: int) -> None:
        pass

    def act(self, g: str) -> "ModuleElement":
        raise NotImplementedError

    # constructors
    @classmethod
    def basis(cls, module: str, q: Scalar, kind: str, idx: int, c=1):
        return cls(module, q, {(kind, idx): c})

    def _new(self, terms) -> "ModuleElement":
        return type(self)(self.module, self.q, terms)

    def zero(self):
        return self._new({})

    def is_zero(self) -> bool:
        return not self.terms

    def part(self, kind: str) -> Dict[int, Scalar]:
        return {i: c for (k, i), c in self.terms.items() if k == kind}

    def _same(self, other) -> "ModuleElement":
        if not isinstance(other, ModuleElement) or other.family != self.family:
            return None
        if other.module != self.module:
            raise ParameterMismatch(f"elements of {self.module} and {other.module} cannot be combined")
        if other.q.mode != self.q.mode or other.q != self.q:
            raise ParameterMismatch("elements use different parameters q")
        return other

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self._new(list(self.terms.items()) + list(o.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, Scalar)):
            return self._new({k: v * c for k, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return (self.family, self.module) == (other.family, other.module) and self.terms == other.terms

    def __hash__(self):
        return hash((self.family, self.module, tuple(self.terms)))

    def __str__(self):
        return render_terms([(f"{k}({i})", c) for (k, i), c in self.terms.items()])

    def __repr__(self):
        return f"<{self.family}:{self.module} {self}>"

    def act_word(self, word: str) -> "ModuleElement":
        """Letters act right-to-left: ``act_word('ab')`` is ``a.(b.self)``."""
        x = self
        for g in reversed(word):
            x = x.act(g)
        return x

    def act_algebra(self, x: AlgebraElement) -> "ModuleElement":
        if x.pres.name != self.algebra:
            raise ParameterMismatch(f"{x.pres.name} does not act on {self.family} modules")
        qx = x.pres.param("q")
        if qx.mode != self.q.mode or qx != self.q:
            raise ParameterMismatch(f"operator uses q={qx}, module uses q={self.q}")
        acc = self.zero()
        for word, c in x.terms.items():
            acc = acc + self.act_word(word) * c
        return acc


@dataclass
class Witness:
    """Operator ``c`` together with the vector ``c . m`` it produces."""

    operator: AlgebraElement
    source: ModuleElement
    result: ModuleElement
    steps: list = field(default_factory=list)

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def recheck(self) -> bool:
        """Recompute ``operator . source`` from scratch and compare with ``result``."""
        return self.source.act_algebra(self.operator) == self.result

    def as_dict(self) -> dict:
        return {
            "operator": str(self.operator),
            "element": str(self.source),
            "result": str(self.result),
            "steps": list(self.steps),
            "sound": self.recheck(),
        }


def guard_torsion(q: Scalar, bound: int = TORSION_BOUND) -> None:
    k = root_of_unity_order(q, bound)
    if k is not None:
        raise TorsionParameter(f"q={q} is a root of unity of order {k}")


def random_module_element(cls, module: str, q: Scalar, rng, max_support: int = 8, max_index: int = 12,
                          coeff_range: int = 5) -> ModuleElement:
    """Nonzero random element of ``module`` with at most ``max_support`` basis symbols."""
    kinds = cls.symbols[module]
    lo = 0 if cls.family == "qwa" else -max_index
    out = {}
    while not out:
        for _ in range(rng.randint(1, max_support)):
            kind = rng.choice(kinds)
            idx = rng.randint(0 if kind in "mw" else lo, max_index)
            c = rng.randint(-coeff_range, coeff_range) or 1
            out[(kind, idx)] = c
    return cls(module, q, out)
