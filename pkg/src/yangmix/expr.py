"""Parser for transition-operator expressions such as ``"2*I8 - 0.5*I3"``.

Grammar (whitespace is ignored between tokens)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := [real '*'] symbol
    symbol := I+ | I- | U+ | U- | V+ | V- | I3 | I8
"""
import math
import re
from dataclasses import dataclass

SYMBOLS = ("I+", "I-", "U+", "U-", "V+", "V-", "I3", "I8")

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_SYMBOL = re.compile(r"[IUV][+-]|I[38]")
_SPACE = re.compile(r"\s*")


class ExprParseError(ValueError):
    def __init__(self, text, pos, expected):
        self.text = text
        self.offset = len(text[:pos].encode("utf-8"))
        self.expected = expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at byte {self.offset}: expected {expected}, found {found}")


@dataclass(frozen=True)
class OperatorExpr:
    """Formal real-linear combination of ladder symbols."""

    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise ValueError("operator expression needs at least one term")
        for coeff, sym in self.terms:
            if sym not in SYMBOLS:
                raise ValueError(f"unknown ladder symbol {sym!r}")
            if not math.isfinite(coeff):
                raise ValueError(f"non-finite coefficient {coeff!r} on {sym}")

    def __add__(self, other):
        return OperatorExpr(self.terms + other.terms)

    def __mul__(self, scale):
        return OperatorExpr(tuple((scale * c, s) for c, s in self.terms))

    __rmul__ = __mul__

    def __str__(self):
        parts = []
        for i, (c, s) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = s if mag == 1 else f"{mag:g}*{s}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        self.pos = _SPACE.match(self.text, self.pos).end()

    def error(self, expected):
        raise ExprParseError(self.text, self.pos, expected)

    def term(self, sign):
        self.skip()
        coeff = 1.0
        expected = "a number or a ladder symbol"
        m = _NUMBER.match(self.text, self.pos)
        if m:
            coeff = float(m.group())
            self.pos = m.end()
            self.skip()
            if not self.text.startswith("*", self.pos):
                self.error("'*'")
            self.pos += 1
            self.skip()
            expected = "a ladder symbol"
        m = _SYMBOL.match(self.text, self.pos)
        if not m:
            self.error(f"{expected} ({', '.join(SYMBOLS)})")
        self.pos = m.end()
        return sign * coeff, m.group()

    def parse(self):
        self.skip()
        sign = 1.0
        if self.text.startswith(("+", "-"), self.pos):
            sign = -1.0 if self.text[self.pos] == "-" else 1.0
            self.pos += 1
        terms = [self.term(sign)]
        while True:
            self.skip()
            if self.pos == len(self.text):
                return OperatorExpr(tuple(terms))
            op = self.text[self.pos]
            if op not in "+-":
                self.error("'+', '-' or end of input")
            self.pos += 1
            terms.append(self.term(1.0 if op == "+" else -1.0))


def parse_operator_expr(text):
    """Parse an operator expression; raises ExprParseError with a byte offset."""
    return _Parser(text).parse()
