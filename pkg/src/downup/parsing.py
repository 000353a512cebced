"""Recursive-descent parser shared by scalar literals, algebra and module elements.

Grammar (whitespace-insensitive, explicit ``*``)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" exponent)?
    exponent := ["-"] INT | "(" ["-"] INT ")"
    atom   := INT | "q" | "zeta:" INT | GEN | SYM "(" ["-"] INT ")" | "(" expr ")"

``GEN`` is one of the generator letters ``d u a b`` and ``SYM`` one of the
module basis symbols ``v m w``. Which atoms are legal depends on the caller.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import DivisionByZero, DownUpError, ParseError
from .scalars import Cyclotomic, Rational, RationalFunction, Scalar

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<zeta>zeta\s*:\s*\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # int | zeta | name | op | end
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# AST nodes are plain tuples: ("num", Fraction) ("q",) ("zeta", n) ("gen", letter)
# ("sym", kind, index) ("neg", x) ("add"|"sub"|"mul"|"div", x, y) ("pow", x, k)


class _Parser:
    def __init__(self, text: str, gens: str, syms: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.gens = gens
        self.syms = syms

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        raise ParseError(msg, self.text, tok.pos)

    def eat(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str):
        if not self.eat(text):
            self.error(f"expected {text!r}")

    def parse(self):
        if self.tok.kind == "end":
            self.error("empty expression")
        node = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        node = self.term()
        while True:
            if self.eat("+"):
                node = ("add", node, self.term())
            elif self.eat("-"):
                node = ("sub", node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            if self.eat("*"):
                node = ("mul", node, self.unary())
            elif self.eat("/"):
                node = ("div", node, self.unary())
            else:
                return node

    def unary(self):
        if self.eat("-"):
            return ("neg", self.unary())
        if self.eat("+"):
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.eat("^"):
            node = ("pow", node, self.exponent())
        return node

    def signed_int(self) -> int:
        neg = self.eat("-")
        if self.tok.kind != "int":
            self.error("expected an integer")
        k = int(self.tok.text)
        self.i += 1
        return -k if neg else k

    def exponent(self) -> int:
        if self.eat("("):
            k = self.signed_int()
            self.expect(")")
            return k
        return self.signed_int()

    def atom(self):
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return ("num", Fraction(int(tok.text)))
        if tok.kind == "zeta":
            self.i += 1
            n = int(tok.text.split(":")[1])
            if n < 1:
                self.error("cyclotomic order must be positive", tok)
            return ("zeta", n)
        if tok.kind == "name":
            self.i += 1
            if tok.text == "q":
                return ("q",)
            if tok.text in self.gens and len(tok.text) == 1:
                return ("gen", tok.text)
            if tok.text in self.syms and len(tok.text) == 1:
                self.expect("(")
                idx = self.signed_int()
                self.expect(")")
                return ("sym", tok.text, idx)
            self.error(f"unknown name {tok.text!r}", tok)
        if self.eat("("):
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {tok.text!r}")


def parse(text: str, gens: str = "", syms: str = ""):
    return _Parser(text, gens, syms).parse()


def evaluate(node, resolve: Callable = None):
    """Evaluate an AST; ``resolve`` turns ("gen", ..)/("sym", ..) nodes into values."""
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "q":
        return RationalFunction.q()
    if kind == "zeta":
        return Cyclotomic.zeta(node[1])
    if kind in ("gen", "sym"):
        return resolve(node)
    if kind == "neg":
        return -evaluate(node[1], resolve)
    if kind == "pow":
        base = evaluate(node[1], resolve)
        k = node[2]
        if k < 0 and not isinstance(base, (Fraction, Scalar)):
            raise ParseError("negative powers are only allowed on scalars")
        if isinstance(base, Fraction) and base == 0 and k < 0:
            raise DivisionByZero("zero to a negative power")
        return base ** k
    x = evaluate(node[1], resolve)
    y = evaluate(node[2], resolve)
    if kind == "div":
        if not isinstance(y, (Fraction, Scalar)):
            raise ParseError("division is only allowed by scalars")
        if y == 0:
            raise DivisionByZero("division by zero")
        if isinstance(x, Fraction) and isinstance(y, Fraction):
            return x / y
        return x * (1 / y if isinstance(y, Fraction) else y.inv())
    try:
        if kind == "add":
            return x + y
        if kind == "sub":
            return x - y
        if kind == "mul":
            return x * y
    except TypeError as exc:
        if isinstance(exc, DownUpError):
            raise
        raise ParseError(f"incompatible operands for {kind}") from None
    raise AssertionError(kind)


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal; the mode follows from the literal (q, zeta:n or neither)."""
    value = evaluate(parse(text))
    if isinstance(value, Fraction):
        return Rational(value)
    return value


def parse_literal(text: str):
    """Like :func:`parse_scalar` but keeps pure numbers as ``Fraction`` (mode-neutral)."""
    return evaluate(parse(text))


def parse_element(pres, text: str):
    """Parse an algebra element over ``pres``; only its generator letters are accepted."""
    from .ncalg import AlgebraElement

    node = parse(text, gens=pres.letters)
    value = evaluate(node, lambda n: AlgebraElement.gen(pres, n[1]))
    if isinstance(value, AlgebraElement):
        return value
    return AlgebraElement.scalar(pres, value)
