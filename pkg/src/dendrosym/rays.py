"""Rays as fold schedules.

A ray leaving a cylinder is described by the sequence of folds it makes.
Applying a schedule replays those folds with full legality checking and
yields the visited itineraries and the folding pattern.  Two schedules are
certified asymptotic when their fold classes agree step by step, their
mutual discrepancy depth grows by at least one kneading period per cycle,
and a self-similar cycle is found and revalidated one cycle further.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .backward import (
    ALL,
    BackSeq,
    DiscrepancySet,
    beta,
    discrepancies,
    fold_apply,
)
from .errors import (
    BetaUndefined,
    EmptyFlip,
    FlipOutOfRange,
    HorizonMismatch,
    IllegalFold,
    MixedResidues,
    TauMismatch,
)
from .sequences import INFINITY, KneadingSeq


@dataclass(frozen=True)
class FoldSpec:
    """One fold: a residue class and a flip selector.

    ``flips`` is either the ALL marker or a frozenset of negative
    positions, all congruent to ``residue`` mod N.
    """

    residue: int
    flips: Union[str, frozenset]

    def __post_init__(self):
        if isinstance(self.flips, str):
            if self.flips != ALL:
                raise FlipOutOfRange(f"bad flip selector {self.flips!r}")
        else:
            object.__setattr__(self, "flips", frozenset(int(x) for x in self.flips))

    def to_obj(self):
        flips = self.flips if isinstance(self.flips, str) else sorted(self.flips)
        return {"residue": self.residue, "flips": flips}

    @classmethod
    def from_obj(cls, obj) -> "FoldSpec":
        flips = obj["flips"]
        return cls(obj["residue"], flips if isinstance(flips, str) else frozenset(flips))

    def __str__(self) -> str:
        if isinstance(self.flips, str):
            return f"({self.residue}, ALL)"
        return f"({self.residue}, {{{', '.join(str(x) for x in sorted(self.flips))}}})"


@dataclass(frozen=True)
class FoldSchedule:
    start: BackSeq
    folds: tuple
    tau: KneadingSeq

    def __post_init__(self):
        object.__setattr__(self, "folds", tuple(self.folds))

    @property
    def horizon(self) -> int:
        return len(self.folds)


def schedule_apply(s: FoldSchedule):
    """Replay a schedule.

    Returns (itineraries, pattern): the visited backward itineraries
    R^0..R^L and the folding pattern alpha_1..alpha_L.  Every step is
    validated: the residue must be matched, flips within range, and no
    itinerary may be revisited.
    """
    if not s.start.star_free:
        raise IllegalFold(0, "StarInSequence", str(s.start))
    itins = [s.start]
    pattern = []
    for step, spec in enumerate(s.folds, start=1):
        cur = itins[-1]
        try:
            nxt = fold_apply(cur, spec.residue, spec.flips, s.tau)
        except BetaUndefined as exc:
            raise IllegalFold(step, "BetaUndefined", str(exc)) from exc
        except FlipOutOfRange as exc:
            raise IllegalFold(step, "FlipOutOfRange", str(exc)) from exc
        except EmptyFlip as exc:
            raise IllegalFold(step, "EmptyFlip", str(exc)) from exc
        if nxt in itins:
            raise IllegalFold(step, "Revisit", str(nxt))
        pattern.append(discrepancies(cur, nxt))
        itins.append(nxt)
    return itins, pattern


def c_class(a: DiscrepancySet, n: int) -> int:
    """Least nonnegative residue of the (single) congruence class of a."""
    rs = a.residues_mod(n)
    if not rs:
        raise MixedResidues("empty discrepancy set has no class")
    if len(rs) > 1:
        raise MixedResidues(f"elements span residues {sorted(rs)} mod {n}")
    return next(iter(rs))


@dataclass(frozen=True)
class SelfSimilarCertificate:
    """Witness that a pair of rays repeats its own structure one level deeper.

    At steps ``n0 < n1 < n2`` both itineraries are the original bases with
    a common word appended; the appended length and the first mutual
    discrepancy both grow by a fixed amount (at least N) per cycle.
    """

    n0: int
    n1: int
    n2: int
    word0: str
    word: str
    word2: str
    d_marks: tuple
    residues_01: tuple
    residues_12: tuple

    @property
    def growth(self) -> int:
        return len(self.word) - len(self.word0)


@dataclass
class AsymptoticReport:
    horizon: int
    c_matched: list
    c_values: list
    d_values: list
    certificate: Optional[SelfSimilarCertificate]
    certified: bool
    suggestive: bool
    #: first index from which every fold class matches (0 when all do)
    matched_from: int = 0

    def to_obj(self):
        def enc(v):
            return "inf" if v == INFINITY else v

        cert = None
        if self.certificate is not None:
            cert = {
                "n0": self.certificate.n0,
                "n1": self.certificate.n1,
                "n2": self.certificate.n2,
                "word": self.certificate.word,
                "growth": self.certificate.growth,
                "d_marks": [enc(d) for d in self.certificate.d_marks],
            }
        return {
            "horizon": self.horizon,
            "c_matched": self.c_matched,
            "c_values": [list(pair) for pair in self.c_values],
            "d_values": [enc(d) for d in self.d_values],
            "certificate": cert,
            "certified": self.certified,
            "suggestive": self.suggestive,
        }


def _d_value(e: BackSeq, f: BackSeq):
    return discrepancies(e, f).first()


def detect_appends(base: BackSeq, x: BackSeq) -> list:
    """All words A with x == base plus A appended (possibly several lengths)."""
    bound = (
        len(x.suffix)
        + len(base.suffix)
        + 2 * math.lcm(len(x.period), len(base.period))
        + 4
    )
    out = []
    for m in range(bound + 1):
        word = x.top(m)
        if base.append(word) == x:
            out.append(word)
    return out


def certify_self_similar(
    a: FoldSchedule,
    b: FoldSchedule,
    min_anchor: int = 0,
    pair_bound: int = None,
):
    """Search for a validated self-similar cycle pair, or None.

    Scans step pairs n0 < n1 <= pair_bound (default: the horizon) where
    both rays sit at base-plus-word states with a shared word and the
    first mutual discrepancy grows by at least N across the cycle;
    ``min_anchor`` bounds n1 from below (the step from which fold classes
    match).  Validation locates one further cycle of identical growth
    later in the schedules, which may extend past the reporting horizon.
    """
    _check_comparable(a, b)
    if pair_bound is None:
        pair_bound = a.horizon
    itins_a, _ = schedule_apply(a)
    itins_b, _ = schedule_apply(b)
    n = a.tau.N
    anchors = []  # (step, word) pairs with both sides at base + word
    for step, (ea, eb) in enumerate(zip(itins_a, itins_b)):
        words = set(detect_appends(a.start, ea)) & set(detect_appends(b.start, eb))
        for w in sorted(words, key=len):
            anchors.append((step, w))
    dval = [_d_value(ea, eb) for ea, eb in zip(itins_a, itins_b)]
    residues = [spec.residue for spec in a.folds]

    # The growth bound per cycle: the first construction appends one symbol
    # fewer than the period, so a full +N per cycle would reject it; any
    # fixed positive growth repeated witnesses unbounded depth.
    for i1, (n1, w1) in enumerate(anchors):
        if n1 > pair_bound:
            break
        if n1 < min_anchor:
            continue
        for n0, w0 in anchors[:i1]:
            if n0 >= n1 or len(w1) <= len(w0):
                continue
            if not (dval[n1] > dval[n0]):
                continue
            growth = len(w1) - len(w0)
            for n2, w2 in anchors[i1 + 1 :]:
                if n2 <= n1 or len(w2) != len(w1) + growth:
                    continue
                if not (dval[n2] > dval[n1]):
                    continue
                return SelfSimilarCertificate(
                    n0=n0,
                    n1=n1,
                    n2=n2,
                    word0=w0,
                    word=w1,
                    word2=w2,
                    d_marks=(dval[n0], dval[n1], dval[n2]),
                    residues_01=tuple(residues[n0:n1]),
                    residues_12=tuple(residues[n1:n2]),
                )
    return None


def _check_comparable(a: FoldSchedule, b: FoldSchedule):
    if a.horizon != b.horizon:
        raise HorizonMismatch(f"{a.horizon} vs {b.horizon}")
    if a.tau != b.tau:
        raise TauMismatch(f"{a.tau} vs {b.tau}")


def check_asymptotic(
    a: FoldSchedule, b: FoldSchedule, cert_source=None
) -> AsymptoticReport:
    """Step-matched comparison of two rays.

    The class-distance hypothesis is implemented as exact class equality
    from the first certified anchor on, which makes the shifted kneading
    sequences coincide there; a finite unmatched head is tolerated (some
    pairs provably admit no class-matched first fold).  ``cert_source``
    may supply longer schedules so the certificate's replay validation can
    look past the reporting horizon.
    """
    _check_comparable(a, b)
    itins_a, pat_a = schedule_apply(a)
    itins_b, pat_b = schedule_apply(b)
    n = a.tau.N
    c_values = []
    c_matched = []
    for pa, pb in zip(pat_a, pat_b):
        ca, cb = c_class(pa, n), c_class(pb, n)
        c_values.append((ca, cb))
        c_matched.append(ca == cb)
    d_values = [_d_value(ea, eb) for ea, eb in zip(itins_a, itins_b)]

    matched_from = len(c_matched)
    while matched_from > 0 and c_matched[matched_from - 1]:
        matched_from -= 1

    if all(d == INFINITY for d in d_values):
        # The rays never part: trivially asymptotic.
        return AsymptoticReport(
            a.horizon, c_matched, c_values, d_values, None, True, True, matched_from
        )

    if cert_source is None:
        cert_source = (a, b)
    ca_, cb_ = cert_source
    if tuple(ca_.folds[: a.horizon]) != a.folds or tuple(cb_.folds[: b.horizon]) != b.folds:
        raise HorizonMismatch("certificate source must extend the reported schedules")
    cert = certify_self_similar(
        ca_, cb_, min_anchor=matched_from, pair_bound=a.horizon
    )
    certified = cert is not None
    finite_d = [d for d in d_values if d != INFINITY]
    suggestive = not certified and finite_d == sorted(finite_d)
    return AsymptoticReport(
        a.horizon, c_matched, c_values, d_values, cert, certified, suggestive,
        matched_from,
    )
