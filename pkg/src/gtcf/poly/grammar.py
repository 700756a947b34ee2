"""Text grammar for polynomials over a carrier field.

::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" factor) | ("/" INT))*
    factor := "-" factor | atom ("^" INT)?
    atom   := INT | "g" | "x[" INT "][" INT "]" | "(" expr ")"

``g`` is the field generator (ζ_n for cyclotomic carriers). The canonical
printer writes terms in descending lex order and field coefficients through
the field's ``format``; its output parses back to the same polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from ..ff.field import Field
from .multipoly import Layout, LayoutMismatch, MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))", re.S)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def where(offset: int) -> tuple[int, int]:
        line = max(i for i, s in enumerate(line_starts) if s <= offset)
        return line + 1, offset - line_starts[line] + 1

    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unreadable input", *where(pos))
        start = m.start(m.lastindex)
        line, col = where(start)
        if m.group(1):
            out.append(_Tok("int", m.group(1), line, col))
        elif m.group(2):
            out.append(_Tok("name", m.group(2), line, col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[]":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            out.append(_Tok("op", ch, line, col))
        pos = m.end()
    line, col = where(len(text))
    out.append(_Tok("end", "", line, col))
    return out


class _Parser:
    def __init__(self, text: str, field: Field, layout: Layout):
        self.toks = _tokenize(text)
        self.i = 0
        self.F = field
        self.L = layout

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, message: str, tok: Optional[_Tok] = None) -> ParseError:
        t = tok or self.cur
        return ParseError(message, t.line, t.column)

    def take(self, kind: str, text: Optional[str] = None) -> _Tok:
        t = self.cur
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise self.fail(f"expected {want!r}, found {got!r}")
        self.i += 1
        return t

    def const(self, c: Any) -> MultiPoly:
        return MultiPoly.const(self.F, self.L, c)

    def parse(self) -> MultiPoly:
        if self.cur.kind == "end":
            raise self.fail("empty polynomial")
        out = self.expr()
        if self.cur.kind != "end":
            raise self.fail(f"unexpected {self.cur.text!r}")
        return out

    def expr(self) -> MultiPoly:
        out = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.take("op").text
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> MultiPoly:
        out = self.factor()
        while self.cur.kind == "op" and self.cur.text in "*/":
            op = self.take("op")
            if op.text == "*":
                out = out * self.factor()
            else:
                d = self.take("int")
                c = self.F.from_int(int(d.text))
                if self.F.is_zero(c):
                    raise self.fail("division by zero in the carrier field", d)
                out = out.scale(self.F.inv(c))
        return out

    def factor(self) -> MultiPoly:
        if self.cur.kind == "op" and self.cur.text == "-":
            self.take("op")
            return -self.factor()
        base = self.atom()
        if self.cur.kind == "op" and self.cur.text == "^":
            self.take("op")
            e = int(self.take("int").text)
            base = base**e
        return base

    def atom(self) -> MultiPoly:
        t = self.cur
        if t.kind == "int":
            self.take("int")
            return self.const(self.F.from_int(int(t.text)))
        if t.kind == "name" and t.text == "g":
            self.take("name")
            gen = getattr(self.F, "gen", None)
            if gen is None:
                raise self.fail("carrier field has no generator 'g'", t)
            return self.const(gen)
        if t.kind == "name" and t.text in ("x", "X"):
            self.take("name")
            self.take("op", "[")
            b = int(self.take("int").text)
            self.take("op", "]")
            self.take("op", "[")
            s = int(self.take("int").text)
            self.take("op", "]")
            try:
                return MultiPoly.var(self.F, self.L, b, s)
            except LayoutMismatch as exc:
                raise self.fail(str(exc), t) from exc
        if t.kind == "op" and t.text == "(":
            self.take("op")
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise self.fail(f"unexpected {t.text or 'end of input'!r}", t)


def parse_poly(text: str, field: Field, layout: Layout) -> MultiPoly:
    return _Parser(text, field, layout).parse()


def parse_polys(texts: Iterable[str], field: Field, layout: Layout) -> list[MultiPoly]:
    out = []
    for i, t in enumerate(texts, start=1):
        try:
            out.append(parse_poly(t, field, layout))
        except ParseError as exc:
            # report the generator position as the line
            raise ParseError(f"generator {i}: {exc.reason}", i, exc.column) from exc
    return out


def format_coeff(field: Field, c: Any) -> str:
    fmt = getattr(field, "format", None)
    return fmt(c) if fmt else str(c)


def format_monomial(layout: Layout, m: tuple[int, ...]) -> str:
    parts = []
    for i, a in enumerate(m):
        if a:
            name = layout.name(i)
            parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts)


def format_poly(f: MultiPoly, order: str = "lex") -> str:
    if f.is_zero():
        return "0"
    F = f.field
    parts = []
    for m, c in f.sorted_terms(order):
        mono = format_monomial(f.layout, m)
        if not mono:
            parts.append(format_coeff(F, c))
        elif c == F.one:
            parts.append(mono)
        else:
            parts.append(f"{format_coeff(F, c)}*{mono}")
    return "+".join(parts)
