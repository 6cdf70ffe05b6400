"""Compact literals for sequences.

Grammar (exact):

    FORWARD := WORD? "(" WORD ")#"          e.g.  (*12)#   1(2)#   *(2)#
    BACK    := "#(" WORD ")" WORD?          e.g.  #(1)21   #(2112)2111
    BISEQ   := BACK "." FORWARD             e.g.  #(1)*.(112*)#
    WORD    := ("*" | "1" | "2")+

Formatting uses canonical form, so parse(format(x)) == x and
format(parse(s)) is the canonical spelling of s.
"""

from __future__ import annotations

from .backward import BackSeq, BiSeq
from .errors import EmptyPeriod, LiteralSyntaxError
from .sequences import SYMBOLS, ForwardSeq, KneadingSeq


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise LiteralSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def word(self) -> str:
        start = self.pos
        while self.peek() in SYMBOLS and self.peek():
            self.pos += 1
        return self.text[start : self.pos]

    def done(self):
        if self.pos != len(self.text):
            raise LiteralSyntaxError("trailing characters", self.pos)


def _forward(sc: _Scanner) -> ForwardSeq:
    prefix = sc.word()
    sc.expect("(")
    period = sc.word()
    if not period:
        raise EmptyPeriod(f"empty period at position {sc.pos}")
    sc.expect(")")
    sc.expect("#")
    return ForwardSeq(prefix, period)


def _backward(sc: _Scanner) -> BackSeq:
    sc.expect("#")
    sc.expect("(")
    period = sc.word()
    if not period:
        raise EmptyPeriod(f"empty period at position {sc.pos}")
    sc.expect(")")
    suffix = sc.word()
    return BackSeq(period, suffix)


def parse_forward(text: str) -> ForwardSeq:
    sc = _Scanner(text)
    out = _forward(sc)
    sc.done()
    return out


def parse_backward(text: str) -> BackSeq:
    sc = _Scanner(text)
    out = _backward(sc)
    sc.done()
    return out


def parse_biseq(text: str) -> BiSeq:
    sc = _Scanner(text)
    back = _backward(sc)
    sc.expect(".")
    fwd = _forward(sc)
    sc.done()
    return BiSeq(back, fwd)


def parse_literal(text: str):
    """Dispatch on shape: two-sided, backward, or forward literal."""
    if not text:
        raise LiteralSyntaxError("empty literal", 0)
    if text.startswith("#"):
        if "." in text:
            return parse_biseq(text)
        return parse_backward(text)
    return parse_forward(text)


def parse_kneading(text: str) -> KneadingSeq:
    return KneadingSeq(parse_forward(text))
