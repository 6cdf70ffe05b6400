"""Search helpers that realize interior fold paths between itineraries.

The theorem constructions alternate deep single folds with short interior
walks that rewrite the shallow window of both rays in lockstep.  When the
window content is identical on the two rays, a fold confined to it is
legal on one iff legal on the other, so one breadth-first search serves
both.  A slower paired search covers constructions where the two sides
need different flips with matching fold classes.
"""

from __future__ import annotations

import heapq
import itertools
import math
from collections import deque

from .backward import BackSeq, beta
from .errors import BuildError
from .sequences import KneadingSeq, sym_approx

_SUBSET_CAP = 6


def replace_top(state: BackSeq, word: str) -> BackSeq:
    """Overwrite positions -len(word)..-1 of state with word (deepest first)."""
    if not word:
        return state
    p, s = state.resuffix(len(word))
    return BackSeq(p, s[: len(s) - len(word)] + word)


def window_match_depth(word: str, tau: KneadingSeq, r: int) -> int:
    """Depth through which the window matches the kneading alignment r.

    Flips not deeper than this value are legal regardless of what lies
    below the window, because the match condition only reads the window.
    """
    m = len(word)
    for j in range(1, m + 1):
        if not sym_approx(word[m - j], tau.sym(r - j)):
            return j - 1
    return m


def _flip_word(word: str, depths) -> str:
    m = len(word)
    chars = list(word)
    for d in depths:
        chars[m - d] = "2" if chars[m - d] == "1" else "1"
    return "".join(chars)


def _window_moves(word: str, tau: KneadingSeq):
    """Legal (residue, depth-subset) moves on a window word, deterministic order."""
    n = tau.N
    out = []
    for r in range(n):
        md = window_match_depth(word, tau, r)
        positions = [d for d in range(1, md + 1) if d % n == r % n]
        if not positions:
            continue
        positions = positions[:_SUBSET_CAP]
        subsets = []
        for size in range(1, len(positions) + 1):
            subsets.extend(itertools.combinations(positions, size))
        for sub in subsets:
            out.append((r, frozenset(sub)))
    return out


def window_walk(
    start: str,
    target: str,
    tau: KneadingSeq,
    ctx_e: BackSeq,
    ctx_f: BackSeq,
    hist_e: frozenset,
    hist_f: frozenset,
    node_cap: int = 400000,
):
    """Shortest lockstep fold path rewriting the shared top window.

    ``ctx_e``/``ctx_f`` are the two current full states (their top windows
    both equal ``start``).  ``target`` may contain ``*`` at free slots; the
    walk stops at the nearest word fitting the pattern.  Returns the list
    of (residue, depths) moves and the word reached.
    """
    if len(start) != len(target):
        raise BuildError("window endpoints must have equal length")

    def fits(word: str) -> bool:
        return all(t == "*" or c == t for c, t in zip(word, target))

    if fits(start):
        return [], start
    seen = {start}
    queue = deque([(start, ())])
    nodes = 0
    while queue:
        word, path = queue.popleft()
        for r, depths in _window_moves(word, tau):
            nxt = _flip_word(word, depths)
            if nxt in seen:
                continue
            nodes += 1
            if nodes > node_cap:
                raise BuildError("window walk exceeded the node cap")
            full_e = replace_top(ctx_e, nxt)
            full_f = replace_top(ctx_f, nxt)
            if full_e in hist_e or full_f in hist_f:
                continue
            seen.add(nxt)
            new_path = path + ((r, depths),)
            if fits(nxt):
                return list(new_path), nxt
            queue.append((nxt, new_path))
    raise BuildError(f"no interior fold path from {start!r} to {target!r}")


def _tree_moves(state: BackSeq, tau: KneadingSeq, cap: int):
    n = tau.N
    out = []
    for r in range(n):
        b = beta(state, r, tau)
        if not b.is_defined:
            continue
        top = min(b.depth if b.is_finite else cap, cap)
        start = r % n if r % n else n
        positions = list(range(start, top + 1, n))
        for size in range(1, min(len(positions), 3) + 1):
            for sub in itertools.combinations(positions, size):
                out.append((r, frozenset(sub)))
    return out


def component_tree(base: BackSeq, tau: KneadingSeq, limit: int, node_cap: int = 120000):
    """BFS layers of the cylinder tree rooted at a backward itinerary.

    The arc-component's cylinder adjacency graph is a tree, so breadth
    first search realizes the unique fold path to every cylinder.  Returns
    {state: (dist, parent, (residue, depths))}.
    """
    from .backward import fold_apply

    cap = limit + 3 * tau.N
    seen = {base: (0, None, None)}
    queue = deque([base])
    nodes = 0
    while queue:
        state = queue.popleft()
        dist = seen[state][0]
        if dist >= limit:
            continue
        nodes += 1
        if nodes > node_cap:
            break
        for r, sub in _tree_moves(state, tau, cap):
            nxt = fold_apply(state, r, {-d for d in sub}, tau)
            if nxt in seen:
                continue
            seen[nxt] = (dist + 1, state, (r, sub))
            queue.append(nxt)
    return seen


def tree_path(tree: dict, target: BackSeq):
    """(states, moves) along the unique path from the root to target."""
    states = [target]
    moves = []
    cur = target
    while True:
        dist, parent, move = tree[cur]
        if parent is None:
            break
        moves.append(move)
        states.append(parent)
        cur = parent
    states.reverse()
    moves.reverse()
    return states, moves


def _finite_diff_depths(x: BackSeq, y: BackSeq) -> list:
    """Depths where x and y differ; raises if they differ cofinally."""
    guard = math.lcm(len(x.period), len(y.period))
    bound = max(len(x.suffix), len(y.suffix)) + 2 * guard
    diffs = [d for d in range(1, bound + 1) if x.at(d) != y.at(d)]
    if any(d > bound - guard for d in diffs):
        raise BuildError("targets differ arbitrarily deep; not fold-reachable")
    return diffs


def _pair_moves(state: BackSeq, target: BackSeq, r: int, tau: KneadingSeq, depth_cap: int):
    """Candidate flip sets in class r for one ray of the paired search."""
    b = beta(state, r, tau)
    if not b.is_defined:
        return []
    n = tau.N
    top = b.depth if b.is_finite else depth_cap
    top = min(top, depth_cap)
    start = r % n if r % n else n
    legal = list(range(start, top + 1, n))
    if not legal:
        return []
    needed = [d for d in legal if state.at(d) != target.at(d)]
    cands = set()
    for size in range(1, min(len(needed), _SUBSET_CAP) + 1):
        cands.update(itertools.combinations(needed, size))
    aux = [d for d in legal if d not in needed][:4]
    for extra in aux:
        cands.add((extra,))
        for d in needed[:4]:
            cands.add(tuple(sorted((extra, d))))
    for pair in itertools.combinations(aux, 2):
        cands.add(pair)
    return sorted(cands)


def _apply_depths(state: BackSeq, depths) -> BackSeq:
    p, s = state.resuffix(max(depths))
    chars = list(s)
    for d in depths:
        idx = len(s) - d
        chars[idx] = "2" if chars[idx] == "1" else "1"
    return BackSeq(p, "".join(chars))


def anchor_search(
    base_e: BackSeq,
    base_f: BackSeq,
    tau: KneadingSeq,
    size: int,
    exclude=(),
    max_steps: int = 12,
    node_cap: int = 120000,
):
    """Shortest free-class lockstep walk to any shared appended word.

    Finds the first pair of fold paths of equal length taking the two
    bases to ``base_e + w`` and ``base_f + w`` for one word w of the given
    size (not in ``exclude``).  Used to open constructions whose displayed
    first cycle is geometrically blocked.
    """
    from .rays import detect_appends

    n = tau.N
    counter = itertools.count()
    heap = [(0, next(counter), base_e, base_f, ())]
    best = {(base_e, base_f): 0}
    nodes = 0
    cap_depth = size + 2 * n
    while heap:
        g, _, se, sf, path = heapq.heappop(heap)
        common = set(detect_appends(base_e, se)) & set(detect_appends(base_f, sf))
        for w in sorted(common):
            if len(w) == size and w not in exclude:
                return (
                    [(m[0][0], m[0][1]) for m in path],
                    [(m[1][0], m[1][1]) for m in path],
                    w,
                )
        if g >= max_steps:
            continue
        nodes += 1
        if nodes > node_cap:
            break
        seen_e = {m[0][2] for m in path} | {base_e}
        seen_f = {m[1][2] for m in path} | {base_f}
        for re_ in range(n):
            moves_e = _anchor_moves(se, re_, tau, cap_depth)
            if not moves_e:
                continue
            for rf in range(n):
                moves_f = _anchor_moves(sf, rf, tau, cap_depth)
                for fe in moves_e:
                    ne = _apply_depths(se, fe)
                    if ne in seen_e:
                        continue
                    for ff in moves_f:
                        nf = _apply_depths(sf, ff)
                        if nf in seen_f:
                            continue
                        key = (ne, nf)
                        if best.get(key, 10**9) <= g + 1:
                            continue
                        best[key] = g + 1
                        newpath = path + (
                            ((re_, frozenset(fe), ne), (rf, frozenset(ff), nf)),
                        )
                        heapq.heappush(
                            heap, (g + 1, next(counter), ne, nf, newpath)
                        )
    raise BuildError(f"no shared {size}-symbol anchor reachable")


def _anchor_moves(state: BackSeq, r: int, tau: KneadingSeq, depth_cap: int):
    b = beta(state, r, tau)
    if not b.is_defined:
        return []
    n = tau.N
    top = min(b.depth if b.is_finite else depth_cap, depth_cap)
    start = r % n if r % n else n
    legal = list(range(start, top + 1, n))
    out = []
    for size in range(1, min(len(legal), 3) + 1):
        out.extend(itertools.combinations(legal, size))
    return out


def paired_transport(
    state_e: BackSeq,
    state_f: BackSeq,
    target_e: BackSeq,
    target_f: BackSeq,
    tau: KneadingSeq,
    hist_e: frozenset,
    hist_f: frozenset,
    max_steps: int = 16,
    node_cap: int = 120000,
    match_classes: bool = True,
):
    """A* search for lockstep folds toward a pair of target itineraries.

    With ``match_classes`` the two rays fold in the same residue class at
    every step (the asymptotic regime); without it only the step count is
    shared, which covers the finitely many alignment folds some pairs need
    before their classes can match at all.  Returns (moves_e, moves_f),
    lists of (residue, depths) pairs of equal length.
    """
    n = tau.N
    te_, tf_ = target_e, target_f
    diff_e = _finite_diff_depths(state_e, te_)
    diff_f = _finite_diff_depths(state_f, tf_)
    depth_cap = max(diff_e + diff_f + [len(state_e.suffix), len(state_f.suffix)]) + 2 * n

    def h(se, sf):
        ce = {d % n for d in _finite_diff_depths(se, te_) if d <= depth_cap}
        cf = {d % n for d in _finite_diff_depths(sf, tf_) if d <= depth_cap}
        return len(ce | cf) if match_classes else max(len(ce), len(cf))

    best = {(state_e, state_f): 0}
    counter = itertools.count()
    # path entries: ((r_e, flips_e, new_state_e), (r_f, flips_f, new_state_f))
    heap = [(h(state_e, state_f), 0, next(counter), state_e, state_f, ())]
    nodes = 0
    while heap:
        _, g, _, se, sf, path = heapq.heappop(heap)
        if se == te_ and sf == tf_:
            return (
                [(m[0][0], m[0][1]) for m in path],
                [(m[1][0], m[1][1]) for m in path],
            )
        if g >= max_steps:
            continue
        nodes += 1
        if nodes > node_cap:
            break
        seen_e = hist_e | {m[0][2] for m in path} | {state_e}
        seen_f = hist_f | {m[1][2] for m in path} | {state_f}
        all_moves_e = {r: _pair_moves(se, te_, r, tau, depth_cap) for r in range(n)}
        all_moves_f = {r: _pair_moves(sf, tf_, r, tau, depth_cap) for r in range(n)}
        if match_classes:
            combos = [(r, r) for r in range(n)]
        else:
            combos = [(re_, rf) for re_ in range(n) for rf in range(n)]
        for re_, rf in combos:
            moves_e = all_moves_e[re_]
            moves_f = all_moves_f[rf]
            if not moves_e or not moves_f:
                continue
            for fe in moves_e:
                ne = _apply_depths(se, fe)
                if ne in seen_e:
                    continue
                for ff in moves_f:
                    nf = _apply_depths(sf, ff)
                    if nf in seen_f:
                        continue
                    key = (ne, nf)
                    if best.get(key, 10**9) <= g + 1:
                        continue
                    best[key] = g + 1
                    newpath = path + (
                        ((re_, frozenset(fe), ne), (rf, frozenset(ff), nf)),
                    )
                    heapq.heappush(
                        heap,
                        (g + 1 + h(ne, nf), g + 1, next(counter), ne, nf, newpath),
                    )
    raise BuildError("paired transport search exhausted")
