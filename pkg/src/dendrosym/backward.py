"""Backward itineraries, two-sided points, discrepancy sets, and folds.

A backward itinerary occupies the negative coordinates ...,-2,-1.  It is
stored as a period word repeating toward minus infinity plus a finite
suffix next to position -1.  ``depth`` always means the positive number k
for position -k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import (
    BadSymbol,
    BetaUndefined,
    EmptyFlip,
    EmptyPeriod,
    FlipOutOfRange,
)
from .sequences import (
    INFINITY,
    STAR,
    ForwardSeq,
    KneadingSeq,
    approx,
    check_word,
    complement,
    primitive_root,
    shift,
    sym_approx,
)

#: Flip selector meaning "every matched position in the residue class".
ALL = "ALL"

FlipChoice = Union[str, Iterable[int]]


@dataclass(frozen=True)
class BackSeq:
    """Left-infinite eventually periodic sequence ``...(period)(period)suffix``.

    The suffix word is written left to right toward position -1, i.e. its
    last character sits at position -1.  Canonical form: primitive period
    and shortest suffix (a leading suffix symbol equal to the period's
    natural continuation is absorbed, rotating the period left).
    """

    period: str
    suffix: str = ""

    def __post_init__(self):
        if not self.period:
            raise EmptyPeriod("period word must be nonempty")
        check_word(self.period)
        check_word(self.suffix)
        period = primitive_root(self.period)
        suffix = self.suffix
        while suffix and suffix[0] == period[0]:
            suffix = suffix[1:]
            period = period[1:] + period[0]
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "suffix", suffix)

    def at(self, depth: int) -> str:
        """Symbol at position -depth, depth >= 1."""
        if depth < 1:
            raise IndexError("backward sequences live at negative positions")
        s, p = self.suffix, self.period
        if depth <= len(s):
            return s[len(s) - depth]
        m = depth - len(s)
        return p[(len(p) - (m % len(p))) % len(p)]

    def top(self, m: int) -> str:
        """The word at positions -m..-1, deepest first."""
        return "".join(self.at(d) for d in range(m, 0, -1))

    def append(self, word: str) -> "BackSeq":
        """Shift everything m = len(word) deeper and write word at -m..-1."""
        return BackSeq(self.period, self.suffix + word)

    def resuffix(self, m: int) -> tuple[str, str]:
        """A non-canonical (period, suffix) pair with suffix length >= m."""
        if m <= len(self.suffix):
            return self.period, self.suffix
        k = (m - len(self.suffix)) % len(self.period)
        p = self.period[-k:] + self.period[:-k] if k else self.period
        return p, self.top(m)

    @property
    def star_free(self) -> bool:
        return STAR not in self.period and STAR not in self.suffix

    def __str__(self) -> str:
        return f"#({self.period}){self.suffix}"


def back_first_discrepancy(e: BackSeq, f: BackSeq):
    """Least depth where two backward itineraries differ (strict), or INFINITY."""
    bound = max(len(e.suffix), len(f.suffix)) + math.lcm(
        len(e.period), len(f.period)
    )
    for d in range(1, bound + 1):
        if e.at(d) != f.at(d):
            return d
    return INFINITY


@dataclass(frozen=True, eq=False)
class DiscrepancySet:
    """Eventually periodic subset of the positive depths.

    Membership below ``threshold`` is the explicit ``head``; at and beyond
    it, depth k belongs iff ``k % tail_modulus in tail_residues``.
    """

    threshold: int
    head: frozenset
    tail_residues: frozenset
    tail_modulus: int

    @classmethod
    def from_finite(cls, elements: Iterable[int]) -> "DiscrepancySet":
        els = frozenset(int(k) for k in elements)
        if any(k < 1 for k in els):
            raise ValueError("depths are positive")
        return cls(max(els) + 1 if els else 1, els, frozenset(), 1)

    @classmethod
    def from_residues(
        cls, residues: Iterable[int], modulus: int, threshold: int = 1
    ) -> "DiscrepancySet":
        return cls(
            threshold,
            frozenset(),
            frozenset(r % modulus for r in residues),
            modulus,
        )

    @property
    def is_finite(self) -> bool:
        return not self.tail_residues

    @property
    def is_empty(self) -> bool:
        return not self.head and not self.tail_residues

    def contains(self, k: int) -> bool:
        if k < 1:
            return False
        if k < self.threshold:
            return k in self.head
        return (k % self.tail_modulus) in self.tail_residues

    def first(self):
        """Smallest member, or INFINITY if empty."""
        if self.head:
            return min(self.head)
        if not self.tail_residues:
            return INFINITY
        return next(
            k
            for k in range(self.threshold, self.threshold + self.tail_modulus)
            if k % self.tail_modulus in self.tail_residues
        )

    def elements(self, upto: int) -> Iterator[int]:
        return (k for k in range(1, upto + 1) if self.contains(k))

    def residues_mod(self, n: int, window: int = 1) -> frozenset:
        """All residues mod n attained by members (exact by periodicity)."""
        out = {k % n for k in self.head}
        span = math.lcm(self.tail_modulus, n) * window
        out.update(
            k % n
            for k in range(self.threshold, self.threshold + span)
            if (k % self.tail_modulus) in self.tail_residues
        )
        return frozenset(out)

    def to_finite_set(self) -> frozenset:
        if not self.is_finite:
            raise ValueError("set is infinite")
        return self.head

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiscrepancySet):
            return NotImplemented
        bound = max(self.threshold, other.threshold) + math.lcm(
            self.tail_modulus, other.tail_modulus
        )
        return all(self.contains(k) == other.contains(k) for k in range(1, bound + 1))

    def __str__(self) -> str:
        if self.is_empty:
            return "{}"
        if self.is_finite:
            return "{" + ", ".join(str(k) for k in sorted(self.head)) + "}"
        shown = list(self.elements(self.threshold + 2 * self.tail_modulus))[:6]
        return "{" + ", ".join(str(k) for k in shown) + ", ...}"


def discrepancies(e: BackSeq, f: BackSeq) -> DiscrepancySet:
    """The set of depths where the two itineraries differ (strict inequality)."""
    t = max(len(e.suffix), len(f.suffix)) + 1
    mod = math.lcm(len(e.period), len(f.period))
    head = frozenset(k for k in range(1, t) if e.at(k) != f.at(k))
    residues = frozenset(
        k % mod for k in range(t, t + mod) if e.at(k) != f.at(k)
    )
    return DiscrepancySet(t, head, residues, mod)


def match_depth(e: BackSeq, i: int, tau: KneadingSeq):
    """Deepest j such that the suffix matches the kneading alignment i down to j.

    The depth-k match condition for k = i mod N unrolls to per-position
    comparisons against tau at alignment i, which is what gets scanned.
    """
    if not 0 <= i < tau.N:
        raise ValueError("residue out of range")
    bound = len(e.suffix) + math.lcm(len(e.period), tau.N) + tau.N
    for j in range(1, bound + 1):
        if not sym_approx(e.at(j), tau.sym(i - j)):
            return j - 1
    return INFINITY


@dataclass(frozen=True)
class BetaResult:
    """Outcome of the deepest-match search in one residue class."""

    kind: str  # "undefined" | "finite" | "infinite"
    depth: int = 0

    UNDEFINED = "undefined"
    FINITE = "finite"
    INFINITE = "infinite"

    @classmethod
    def undefined(cls):
        return cls(cls.UNDEFINED)

    @classmethod
    def finite(cls, depth: int):
        return cls(cls.FINITE, depth)

    @classmethod
    def infinite(cls):
        return cls(cls.INFINITE)

    @property
    def is_defined(self) -> bool:
        return self.kind != self.UNDEFINED

    @property
    def is_finite(self) -> bool:
        return self.kind == self.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == self.INFINITE

    def __str__(self) -> str:
        if self.is_finite:
            return str(self.depth)
        return self.kind


def beta(e: BackSeq, i: int, tau: KneadingSeq) -> BetaResult:
    """Largest matched depth congruent to i mod N, if any."""
    md = match_depth(e, i, tau)
    if md == INFINITY:
        return BetaResult.infinite()
    k = md - ((md - i) % tau.N)
    if k < 1:
        return BetaResult.undefined()
    return BetaResult.finite(k)


@dataclass(frozen=True)
class BiSeq:
    """Two-sided point: backward part left of 0, forward part from 0 on."""

    back: BackSeq
    fwd: ForwardSeq

    def at(self, j: int) -> str:
        return self.fwd.at(j) if j >= 0 else self.back.at(-j)

    def __str__(self) -> str:
        return f"{self.back}.{self.fwd}"


def project(p: BiSeq, n: int) -> ForwardSeq:
    """The forward sequence read from coordinate n on."""
    if n >= 0:
        return shift(p.fwd, n)
    head = "".join(p.back.at(-j) for j in range(n, 0))
    return ForwardSeq(head + p.fwd.prefix, p.fwd.period)


def boundary_point(e: BackSeq, i: int, tau: KneadingSeq) -> BiSeq:
    """The unique common boundary point of the cylinders across residue i.

    Keeps e strictly below the matched depth and follows the kneading
    alignment from there on; projects to the i-th shift of the kneading
    sequence at coordinate 0.
    """
    b = beta(e, i, tau)
    if not b.is_defined:
        raise BetaUndefined(f"beta^{i} undefined for {e}")
    n = tau.N
    fwd = shift(tau.seq, i % n)
    if b.is_infinite:
        period = "".join(tau.sym(i - n + j) for j in range(n))
        return BiSeq(BackSeq(period), fwd)
    depth = b.depth
    word = "".join(tau.sym(i - d) for d in range(depth, 0, -1))
    p, s = e.resuffix(depth)
    return BiSeq(BackSeq(p, s[: len(s) - depth] + word), fwd)


def _class_positions(i: int, n: int, upto: int) -> list[int]:
    start = i % n if i % n else n
    return list(range(start, upto + 1, n))


def fold_apply(e: BackSeq, i: int, flips: FlipChoice, tau: KneadingSeq) -> BackSeq:
    """Flip symbols of e inside one matched residue class.

    ``flips`` is ALL (the entire class up to the matched depth, possibly
    infinite) or an explicit set of negative positions.  The result differs
    from e exactly on the flipped positions.
    """
    b = beta(e, i, tau)
    if not b.is_defined:
        raise BetaUndefined(f"beta^{i} undefined for {e}")
    n = tau.N

    if isinstance(flips, str):
        if flips != ALL:
            raise FlipOutOfRange(f"unknown flip selector {flips!r}")
        if b.is_infinite:
            return _fold_whole_class(e, i, tau)
        depths = _class_positions(i, n, b.depth)
    else:
        positions = sorted(set(int(x) for x in flips))
        if not positions:
            raise EmptyFlip("a fold must flip at least one position")
        if any(x >= 0 for x in positions):
            raise FlipOutOfRange("flip positions are negative coordinates")
        depths = [-x for x in positions]
        for d in depths:
            if d % n != i % n:
                raise FlipOutOfRange(f"position {-d} not in residue class {i}")
            if b.is_finite and d > b.depth:
                raise FlipOutOfRange(f"position {-d} deeper than matched depth {b.depth}")
    if not depths:
        raise EmptyFlip("residue class contains no matched position")

    deepest = max(depths)
    p, s = e.resuffix(deepest)
    chars = list(s)
    for d in depths:
        idx = len(s) - d
        if chars[idx] == STAR:
            raise FlipOutOfRange(f"cannot flip the critical symbol at {-d}")
        chars[idx] = complement(chars[idx])
    return BackSeq(p, "".join(chars))


def _fold_whole_class(e: BackSeq, i: int, tau: KneadingSeq) -> BackSeq:
    """Flip every depth congruent to i mod N (infinite matched range)."""
    n = tau.N
    ls = len(e.suffix)
    span = math.lcm(len(e.period), n)
    chars = list(e.suffix)
    for d in range(1, ls + 1):
        if d % n == i % n:
            chars[ls - d] = complement(chars[ls - d])
    new_period = [""] * span
    for j in range(1, span + 1):
        d = ls + j
        sym = e.at(d)
        if d % n == i % n:
            if sym == STAR:
                raise FlipOutOfRange(f"cannot flip the critical symbol at {-d}")
            sym = complement(sym)
        new_period[(span - j) % span] = sym
    return BackSeq("".join(new_period), "".join(chars))


def in_cylinder(p: BiSeq, e: BackSeq, n: int = -1) -> bool:
    """Whether p lies in the depth-n cylinder around e (n <= -1)."""
    if n > -1:
        raise ValueError("cylinders here are anchored at negative coordinates")
    start = -n
    bound = max(len(p.back.suffix), len(e.suffix), start) + math.lcm(
        len(p.back.period), len(e.period)
    )
    return all(
        sym_approx(p.back.at(d), e.at(d)) for d in range(start, bound + 1)
    )


def biseq_admissible(p: BiSeq, tau: KneadingSeq) -> bool:
    """Every projection of the two-sided point is admissible.

    Nonnegative coordinates reduce to one admissibility check; negative
    coordinates are scanned over one joint period of the backward part.
    """
    from .sequences import is_admissible

    ts = tau.seq
    if not is_admissible(project(p, 0), tau):
        return False
    bound = len(p.back.suffix) + math.lcm(len(p.back.period), tau.N)
    for n in range(-bound, 0):
        z = project(p, n)
        if p.back.at(-n) == STAR and z != ts:
            return False
        if z != ts and approx(z, ts):
            return False
    return True


def same_arc_component(e: BackSeq, f: BackSeq, tau: KneadingSeq) -> bool:
    """Arc-component test for the points behind two backward itineraries.

    True when the discrepancy set is finite, or when all deep enough
    discrepancies fall in one residue class mod N and every block between
    consecutive ones ~-matches a power of the kneading word on both sides.
    """
    d = discrepancies(e, f)
    if d.is_finite:
        return True
    n = tau.N
    # Head discrepancies may be arbitrary, so only the tail matters.
    tail_rs = frozenset(
        k % n
        for k in range(d.threshold, d.threshold + math.lcm(d.tail_modulus, n))
        if d.contains(k)
    )
    if len(tail_rs) != 1:
        return False
    (r,) = tail_rs
    start = max(len(e.suffix), len(f.suffix), d.threshold)
    span = 2 * math.lcm(d.tail_modulus, n, len(e.period), len(f.period))
    ks = [k for k in range(start, start + span + 1) if d.contains(k)]
    for k1, k2 in zip(ks, ks[1:]):
        for j in range(k1 + 1, k2 + 1):
            t = tau.sym(r - j)
            if not (sym_approx(e.at(j), t) and sym_approx(f.at(j), t)):
                return False
    return True
