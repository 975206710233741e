"""Recursive-descent parser for Q(t) expressions such as ``(3*t - 2)/4`` or ``t + 7``."""
from __future__ import annotations

import re
from typing import Callable, Mapping

from ..errors import ParseError
from .scalar import T, Scalar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at offset {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, names, functions):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = names
        self.functions = functions

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "")

    def take(self, kind=None, value=None):
        tok = self.peek()
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r} but found {tok[1] or 'end of input'!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> Scalar:
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_atom(self):
        kind, val = self.peek()
        return kind in ("num", "name") or (kind, val) == ("op", "(")

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    value = value * rhs
                else:
                    if rhs.is_zero():
                        raise ParseError(f"division by zero in {self.text!r}")
                    value = value / rhs
            elif self._starts_atom():
                # implicit multiplication, e.g. 3t or 2(t+1)
                value = value * self.power()
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            exponent = self.unary()
            if not exponent.is_integer_constant():
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            k = int(exponent.constant_value())
            if k < 0 and base.is_zero():
                raise ParseError(f"division by zero in {self.text!r}")
            return base ** k
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return Scalar(int(val))
        if kind == "name":
            self.take()
            if self.peek() == ("op", "(") and val in self.functions:
                self.take()
                args = [self._int_arg()]
                while self.peek() == ("op", ","):
                    self.take()
                    args.append(self._int_arg())
                self.take("op", ")")
                return Scalar.coerce(self.functions[val](*args))
            if val in self.names:
                return Scalar.coerce(self.names[val])
            raise ParseError(f"unknown name {val!r} in {self.text!r}")
        if (kind, val) == ("op", "("):
            self.take()
            value = self.expr()
            self.take("op", ")")
            return value
        raise ParseError(f"unexpected {val or 'end of input'!r} in {self.text!r}")

    def _int_arg(self) -> int:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        return sign * int(self.take("num")[1])


def parse_scalar(
    text: str,
    names: Mapping[str, object] | None = None,
    functions: Mapping[str, Callable[..., object]] | None = None,
) -> Scalar:
    """Parse an expression in ``t`` into a Scalar.

    ``names`` maps extra identifiers to values (``t`` is always available unless
    overridden); ``functions`` maps identifiers to callables taking integer
    arguments, e.g. ``{"h": lambda r, s: ...}`` for ``h(2,1)``.
    """
    env = {"t": T}
    env.update(names or {})
    return _Parser(text, env, dict(functions or {})).parse()
