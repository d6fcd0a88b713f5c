"""Parser for the textual element form.

Grammar:

  element := ('+' | '-')? term (('+' | '-') term)*
  term    := (scalar '*')? factor ('.' factor)*
  factor  := ident '*'?
  scalar  := integer ('/' integer)?

Identifiers are maximal runs of characters outside the reserved set
".*+-/" and whitespace.  '.' is the explicit product, so identifiers
never need quoting.  A leading integer followed by '*' and another
identifier reads as a scalar prefix; otherwise the '*' is the adjoint
marker of a ghost edge.  The bare expression "0" denotes the zero
element unless the graph declares an id named 0, in which case zero
prints and parses as 0 times a vertex.

parse_element inverts the canonical printing of elements exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import AlgebraContext, Element
from .errors import ExprSyntaxError, UnknownId

__all__ = ["parse_element"]

_OPS = set("+-.*/")


@dataclass(frozen=True)
class _Token:
    kind: str  # "op" | "ident" | "end"
    value: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            toks.append(_Token("op", ch, i))
            i += 1
            continue
        start = i
        while i < len(text) and not text[i].isspace() and text[i] not in _OPS:
            i += 1
        toks.append(_Token("ident", text[start:i], start))
    toks.append(_Token("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, ctx: AlgebraContext, text: str):
        self.ctx = ctx
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, ahead: int = 0) -> _Token:
        j = min(self.i + ahead, len(self.toks) - 1)
        return self.toks[j]

    def advance(self) -> _Token:
        tok = self.toks[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def _is_op(self, tok: _Token, chars: str) -> bool:
        return tok.kind == "op" and tok.value in chars

    def element(self) -> Element:
        negate = False
        if self._is_op(self.peek(), "+-"):
            negate = self.advance().value == "-"
        x = self.term()
        if negate:
            x = self.ctx.neg(x)
        while self._is_op(self.peek(), "+-"):
            op = self.advance().value
            t = self.term()
            x = self.ctx.sub(x, t) if op == "-" else self.ctx.add(x, t)
        end = self.peek()
        if end.kind != "end":
            raise ExprSyntaxError(f"unexpected {end.value!r}", end.pos)
        return x

    def _scalar_prefix(self):
        """Consume 'int*' or 'int/int*' if the tokens ahead read as a
        scalar prefix; return the scalar or None."""
        tok = self.peek()
        if tok.kind != "ident" or not tok.value.isdigit():
            return None
        nxt = self.peek(1)
        if self._is_op(nxt, "*") and (
            self.peek(2).kind == "ident" or not self.ctx.graph.has_id(tok.value)
        ):
            # digits '*' ident is always a scalar prefix; digits that name
            # nothing in the graph cannot be a ghost factor either
            self.advance()
            self.advance()
            return self._coerce(Fraction(int(tok.value)), tok.pos)
        if self._is_op(nxt, "/"):
            den = self.peek(2)
            if den.kind == "ident" and den.value.isdigit() and self._is_op(self.peek(3), "*"):
                self.advance()
                self.advance()
                self.advance()
                self.advance()
                if int(den.value) == 0:
                    raise ExprSyntaxError("zero denominator", den.pos)
                return self._coerce(Fraction(int(tok.value), int(den.value)), tok.pos)
        return None

    def _coerce(self, frac: Fraction, pos: int):
        try:
            return self.ctx.field.of(frac)
        except ZeroDivisionError:
            raise ExprSyntaxError("denominator is zero in this field", pos) from None

    def term(self) -> Element:
        scalar = self._scalar_prefix()
        x = self.factor()
        while self._is_op(self.peek(), "."):
            self.advance()
            x = self.ctx.mul(x, self.factor())
        if scalar is not None:
            x = self.ctx.scale(scalar, x)
        return x

    def factor(self) -> Element:
        tok = self.peek()
        if tok.kind != "ident":
            what = repr(tok.value) if tok.kind == "op" else "end of input"
            raise ExprSyntaxError(f"expected an identifier, found {what}", tok.pos)
        self.advance()
        ghost = False
        star = self.peek()
        if self._is_op(star, "*"):
            self.advance()
            ghost = True
        g = self.ctx.graph
        if g.has_vertex(tok.value):
            if ghost:
                raise ExprSyntaxError("only edges have adjoints", star.pos)
            return self.ctx.atom(tok.value)
        if g.has_edge(tok.value):
            return self.ctx.atom(tok.value, ghost=ghost)
        raise UnknownId(f"no vertex or edge {tok.value!r} (at position {tok.pos})")


def parse_element(ctx: AlgebraContext, text: str) -> Element:
    """Parse text into a normal-form element of the given context."""
    parser = _Parser(ctx, text)
    first = parser.peek()
    if (
        first.kind == "ident"
        and first.value == "0"
        and parser.peek(1).kind == "end"
        and not ctx.graph.has_id("0")
    ):
        return ctx.zero()
    return parser.element()
