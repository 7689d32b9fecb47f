"""Group-expression grammar for the command line.

    EXPR := TERM ("x" TERM)*
    TERM := TYPE | TYPE "^" INT | "Aff" INT
    TYPE := LETTER INT, LETTER in A..G

Whitespace-insensitive; at most one Aff term.  "Aff" (not "A^k") names the
affine factor so that a single character of lookahead decides every token.
Parsing normalizes: multiplicities of equal types merge and factors sort, so
parse(format(expr)) == expr.
"""

from __future__ import annotations

from .bounds import GroupExpr, make_expr
from .roots import FAMILIES, SimpleType


class ExprSyntaxError(ValueError):
    """Malformed group expression; `position` is the 1-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str) -> ExprSyntaxError:
        return ExprSyntaxError(message, self.pos + 1)

    def integer(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error(f"expected {what}")
        return int(self.text[start : self.pos])


def parse_expr(text: str) -> GroupExpr:
    """Parse and normalize a group expression like "B4 x C3" or "A1^3 x Aff2"."""
    sc = _Scanner(text)
    pairs: list[tuple[SimpleType, int]] = []
    affine: int | None = None
    while True:
        ch = sc.peek()
        if ch == "A" and sc.text[sc.pos : sc.pos + 3] == "Aff":
            if affine is not None:
                raise sc.error("only one Aff term is allowed")
            sc.pos += 3
            affine = sc.integer("affine dimension after Aff")
        elif ch in FAMILIES:
            at = sc.pos
            family = ch
            sc.pos += 1
            rank = sc.integer(f"rank after {family}")
            try:
                t = SimpleType(family, rank)
            except ValueError as exc:
                raise ExprSyntaxError(str(exc), at + 1) from None
            mult = 1
            if sc.peek() == "^":
                sc.pos += 1
                mult = sc.integer("multiplicity after ^")
                if mult < 1:
                    raise sc.error("multiplicity must be >= 1")
            pairs.append((t, mult))
        else:
            raise sc.error("expected a simple type A..G or Aff")
        if sc.peek() == "":
            break
        if sc.peek() != "x":
            raise sc.error("expected x between terms")
        sc.pos += 1
    if not pairs and not affine:
        raise ExprSyntaxError("expression names no group", 1)
    return make_expr(pairs, affine or 0)


def format_expr(expr: GroupExpr) -> str:
    """Canonical rendering; round-trips through parse_expr."""
    return str(expr)
