"""Right-infinite eventually periodic sequences over the symbol set {*, 1, 2}.

A sequence is stored as a finite prefix plus a repeating period word, both
plain strings.  Canonical form (primitive period, shortest prefix) is
enforced on construction, so ``==`` is exact sequence equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AdmissibilityViolation,
    BadSymbol,
    EmptyPeriod,
    EqualInputs,
    InadmissibleInput,
    NotPurelyPeriodic,
)

STAR = "*"
ONE = "1"
TWO = "2"
SYMBOLS = "*12"

#: Returned by positional searches that provably never succeed.
INFINITY = math.inf

_COMPLEMENT = {ONE: TWO, TWO: ONE}


def complement(sym: str) -> str:
    """Swap 1 and 2.  Undefined (KeyError) on the critical symbol."""
    return _COMPLEMENT[sym]


def sym_approx(a: str, b: str) -> bool:
    """The ~ relation on symbols: equal, or at least one is *."""
    return a == b or a == STAR or b == STAR


def word_approx(u: str, v: str) -> bool:
    return len(u) == len(v) and all(sym_approx(a, b) for a, b in zip(u, v))


def check_word(word: str) -> str:
    for i, c in enumerate(word):
        if c not in SYMBOLS:
            raise BadSymbol(f"bad symbol {c!r} at index {i}")
    return word


def primitive_root(word: str) -> str:
    """Shortest word u such that the input is a power of u."""
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True)
class ForwardSeq:
    """Eventually periodic right-infinite sequence ``prefix (period)^inf``."""

    prefix: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise EmptyPeriod("period word must be nonempty")
        check_word(self.prefix)
        check_word(self.period)
        prefix = self.prefix
        period = primitive_root(self.period)
        # Shortest-prefix rule: a trailing prefix symbol equal to the last
        # period symbol belongs to the periodic part (rotate right).
        while prefix and prefix[-1] == period[-1]:
            period = period[-1] + period[:-1]
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    def at(self, i: int) -> str:
        """Symbol at index i >= 0."""
        if i < 0:
            raise IndexError("forward sequences start at index 0")
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def take(self, n: int) -> str:
        """First n symbols as a word."""
        reps = max(0, (n - len(self.prefix)) // len(self.period) + 2)
        return (self.prefix + self.period * reps)[:n]

    @property
    def purely_periodic(self) -> bool:
        return not self.prefix

    def __str__(self) -> str:
        return f"{self.prefix}({self.period})#"


def _joint_bound(x: ForwardSeq, y: ForwardSeq) -> int:
    return max(len(x.prefix), len(y.prefix)) + math.lcm(
        len(x.period), len(y.period)
    )


def approx(x: ForwardSeq, y: ForwardSeq) -> bool:
    """Componentwise ~ of two sequences.

    Beyond the longest prefix both sequences are jointly periodic, so a
    scan of one joint period decides the relation exactly.
    """
    return all(
        sym_approx(x.at(i), y.at(i)) for i in range(_joint_bound(x, y))
    )


def shift(x: ForwardSeq, n: int):
    """Drop the first n symbols."""
    if n < 0:
        raise ValueError("shift distance must be nonnegative")
    if n <= len(x.prefix):
        return ForwardSeq(x.prefix[n:], x.period)
    j = (n - len(x.prefix)) % len(x.period)
    return ForwardSeq("", x.period[j:] + x.period[:j])


def first_discrepancy(x: ForwardSeq, y: ForwardSeq):
    """Least index where the symbols fail ~, or INFINITY when none exists."""
    for i in range(_joint_bound(x, y)):
        if not sym_approx(x.at(i), y.at(i)):
            return i
    return INFINITY


def is_acceptable(t: ForwardSeq) -> bool:
    """Every shift that ~-matches the sequence must equal it.

    Only shifts by 1..N-1 need checking: shifting by the primitive period
    is the identity on a purely periodic sequence.
    """
    if t.prefix:
        raise NotPurelyPeriodic("acceptability is defined for periodic sequences")
    n = len(t.period)
    return not any(approx(shift(t, k), t) for k in range(1, n))


@dataclass(frozen=True)
class KneadingSeq:
    """Kneading sequence: purely periodic, ``*`` at 0, ``1`` at 1, acceptable."""

    seq: ForwardSeq

    def __post_init__(self):
        s = self.seq
        if s.prefix:
            raise NotPurelyPeriodic("kneading sequence must be purely periodic")
        word = s.period
        if len(word) < 2:
            raise EmptyPeriod("kneading period must have length >= 2")
        if word[0] != STAR or STAR in word[1:]:
            raise BadSymbol("kneading sequence has * exactly at index 0")
        if word[1] != ONE:
            raise BadSymbol("first iterate lies in the pseudoleg labelled 1")
        if not is_acceptable(s):
            raise InadmissibleInput(f"{s} is not acceptable")

    @property
    def N(self) -> int:
        return len(self.seq.period)

    def sym(self, i: int) -> str:
        """tau_i, read cyclically for any integer i."""
        return self.seq.period[i % self.N]

    def __str__(self) -> str:
        return str(self.seq)


def is_admissible(x: ForwardSeq, tau: KneadingSeq) -> bool:
    """Membership in the dendrite's symbol space.

    Two conjunct conditions: every * forces the kneading tail, and any
    shift that ~-matches the kneading sequence equals it.
    """
    ts = tau.seq
    bound = len(x.prefix) + math.lcm(len(x.period), tau.N)
    for n in range(bound + 1):
        z = shift(x, n)
        if x.at(n) == STAR and z != ts:
            return False
        if z != ts and approx(z, ts):
            return False
    return True


def mu_point(x: ForwardSeq, y: ForwardSeq, tau: KneadingSeq) -> ForwardSeq:
    """The canonical admissible point strictly between two admissible points.

    Copies the (unique) non-star symbols up to the first discrepancy, puts
    the critical symbol there, and continues with the kneading sequence.
    """
    if x == y:
        raise EqualInputs("the two points must differ")
    for name, s in (("x", x), ("y", y)):
        if not is_admissible(s, tau):
            raise InadmissibleInput(f"{name} = {s} is not admissible")
    n = first_discrepancy(x, y)
    # Distinct admissible sequences can never ~-match throughout.
    assert n != INFINITY
    pieces = []
    for i in range(int(n)):
        a = x.at(i)
        pieces.append(a if a != STAR else y.at(i))
    mu = ForwardSeq("".join(pieces), tau.seq.period)
    if not is_admissible(mu, tau):
        raise AdmissibilityViolation(f"constructed point {mu} is inadmissible")
    return mu
