"""The space-expression language used on the command line.

::

    expr := "simplex(" int ")" | "boundary(" int ")" | "horn(" int "," int ")"
          | "product(" expr "," expr ")" | "quotient(" expr "," expr ")"
          | "disjoint(" expr "," expr ")"

Whitespace is ignored.  ``quotient(a, b)`` collapses ``b``, which must be a
face-closed subcomplex of ``a`` with matching cell names.
"""

from __future__ import annotations

import re

from .sset import SSet, boundary, disjoint_union, horn, product, quotient, simplex

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<name>[a-z]+)|(?P<sym>[(),])")

_INT_ARGS = {"simplex": 1, "boundary": 1, "horn": 2}
_SPACE_ARGS = {"product": product, "quotient": quotient, "disjoint": disjoint_union}


class ParseError(ValueError):
    """Malformed space expression; ``pos`` is the character offset of the problem."""

    def __init__(self, message: str, pos: int, text: str) -> None:
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError("unexpected character", pos, text)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def _peek(self) -> tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", "", len(self.text))

    def _take(self, kind: str, value: str | None = None) -> str:
        k, v, pos = self._peek()
        if k != kind or (value is not None and v != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {v or 'end of input'!r}", pos, self.text)
        self.i += 1
        return v

    def expr(self) -> tuple[SSet, str]:
        _, name, pos = self._peek()
        self._take("name")
        self._take("sym", "(")
        if name in _INT_ARGS:
            args = [int(self._take("int"))]
            for _ in range(_INT_ARGS[name] - 1):
                self._take("sym", ",")
                args.append(int(self._take("int")))
            self._take("sym", ")")
            canon = f"{name}({','.join(map(str, args))})"
            try:
                return _build_int(name, args), canon
            except ValueError as exc:
                raise ParseError(str(exc), pos, self.text) from None
        if name in _SPACE_ARGS:
            a, ca = self.expr()
            self._take("sym", ",")
            b, cb = self.expr()
            self._take("sym", ")")
            return _SPACE_ARGS[name](a, b), f"{name}({ca},{cb})"
        raise ParseError(f"unknown builder {name!r}", pos, self.text)


def _build_int(name: str, args: list[int]) -> SSet:
    if name == "simplex":
        return simplex(args[0])
    if name == "boundary":
        if args[0] < 1:
            raise ValueError("boundary(n) needs n >= 1")
        return boundary(args[0])
    n, k = args
    if not 0 <= k <= n or n < 1:
        raise ValueError(f"horn({n},{k}) needs n >= 1 and 0 <= k <= n")
    return horn(n, k)


def parse_space_canonical(text: str) -> tuple[SSet, str]:
    """Parse ``text``; also return the expression with whitespace removed."""
    p = _Parser(text)
    X, canon = p.expr()
    k, v, pos = p._peek()
    if k != "end":
        raise ParseError(f"trailing input {v!r}", pos, text)
    return X, canon


def parse_space(text: str) -> SSet:
    return parse_space_canonical(text)[0]
