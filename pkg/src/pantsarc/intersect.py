"""Minimal self-intersection numbers of arcs.

The arc's word is turned into the chord diagram of the planar module;
each unordered pair of chords then either visibly crosses, visibly
does not, or is undecidable because the two chords meet in a side of a
cutting arc.  An undecidable pair is resolved by sliding both strands
across the shared side, segment by segment, until they diverge (or
merge into a boundary stretch).  The pairs visited while sliding form
a *chain*; the whole chain contributes at most one crossing, namely
exactly when the two divergence ends fall on opposite sides of the
strands' common corridor.

Within a chain the two strands either run in the same direction along
the word (parallel) or in opposite directions (antiparallel); which
one is forced by how the shared side is approached.  The count
iterates over all pairs, resolving each chain once at a canonical
member, so the result does not depend on visiting order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .planar import DECISIONS, Segment, endpoint_items
from .words import ArcWord


class AlignmentOverrun(RuntimeError):
    """A chain walk left the segment range; impossible for valid words."""


def self_intersection(w: ArcWord) -> int:
    """Minimal number of self-crossings of the arc described by ``w``."""
    fr, to = endpoint_items(w.start, w.letters, w.end)
    return count_from_items(fr, to)


def count_from_items(fr, to):
    """Self-intersection count from raw per-segment endpoint items."""
    T = len(fr)
    dec = DECISIONS
    sc = [f << 3 | t for f, t in zip(fr, to)]
    total = 0
    for d in range(1, T):
        p = 0
        top = T - d
        while p < top:
            q = p + d
            c = dec[sc[p] << 6 | sc[q]]
            if c < 2:
                total += c
                p += 1
                continue
            if to[p] == to[q]:
                # parallel chain; the sweep meets its rearmost pair first
                P, Q = p, q
                while to[P] == to[Q]:
                    P += 1
                    Q += 1
                shared = to[p]
                left_rear = (fr[q] - shared) % 8 < (fr[p] - shared) % 8
                shared = fr[P]
                left_front = (to[Q] - shared) % 8 > (to[P] - shared) % 8
                total += left_rear != left_front
                p = P + 1
            elif fr[p] == fr[q]:
                # the rearward member (p-1, q-1) shares its far ends, so the
                # sweep would have consumed this pair already
                raise AlignmentOverrun("parallel chain met off its rear pair")
            else:
                # antiparallel chain, counted once at its rearmost pair,
                # the member with the widest gap
                if fr[p] == to[q]:
                    # either the rearward continuation exists, or the
                    # strands merge into one boundary stretch (no crossing)
                    p += 1
                    continue
                P, Q = p, q
                while to[P] == fr[Q]:
                    if Q - P < 3:
                        raise AlignmentOverrun("antiparallel strands collided")
                    P += 1
                    Q -= 1
                shared = to[p]
                left_rear = (to[q] - shared) % 8 < (fr[p] - shared) % 8
                shared = fr[P]
                left_front = (fr[Q] - shared) % 8 > (to[P] - shared) % 8
                total += left_rear != left_front
                p += 1
    return total


@dataclass(frozen=True)
class Chain:
    """A resolved segment pair: the members it drags along and the
    verdict shared by all of them.  Member pairs are 1-based.  A
    decidable pair stands alone as a one-member chain with its own
    verdict; ``parallel`` is False for those."""

    members: tuple
    parallel: bool
    free_end: bool
    decision: int

    @property
    def terminal(self):
        """The forward-most member, which carries the chain's digit."""
        return self.members[-1]


def _strand_side(shared, into, item1, item2):
    if item1 == item2:
        raise ValueError("strands at the same item have not diverged")
    r1 = (item1 - shared) % 8
    r2 = (item2 - shared) % 8
    return (r2 < r1) if into else (r2 > r1)


def _walk_chain(fr, to, T, p0, q0):
    """Members and verdict of the chain through the undecidable (p0, q0)."""
    parallel = to[p0] == to[q0] or fr[p0] == fr[q0]
    free = False
    p, q = p0, q0
    if parallel:
        while fr[p] == fr[q]:
            if p == 0:
                raise AlignmentOverrun("parallel chain ran past the first segment")
            p -= 1
            q -= 1
    else:
        while fr[p] == to[q]:
            if p == 0:
                # same boundary stretch at both word ends: a free end
                assert q == T - 1
                free = True
                break
            p -= 1
            q += 1
    bp, bq = p, q
    p, q = p0, q0
    if parallel:
        while to[p] == to[q]:
            if q == T - 1:
                raise AlignmentOverrun("parallel chain ran past the last segment")
            p += 1
            q += 1
    else:
        while to[p] == fr[q]:
            if q - p < 3:
                raise AlignmentOverrun("antiparallel strands collided")
            p += 1
            q -= 1
    fp, fq = p, q
    dq = 1 if parallel else -1
    members = tuple((bp + k, bq + k * dq) for k in range(fp - bp + 1))
    if free:
        decision = 0
    else:
        rear = _strand_side(to[bp], True, fr[bp], fr[bq] if parallel else to[bq])
        front = _strand_side(fr[fp], False, to[fp], to[fq] if parallel else fr[fq])
        decision = int(rear != front)
    return members, parallel, free, decision


def resolve_chain(w: ArcWord, i: int, j: int) -> Chain:
    """Resolve the chain through the segment pair (i, j).

    Indices are 1-based positions along the word's segment list.  A
    pair decidable from its endpoints comes back as a singleton chain
    carrying its own verdict; an undecidable pair drags in the whole
    chain it belongs to.
    """
    fr, to = endpoint_items(w.start, w.letters, w.end)
    T = len(fr)
    if not (1 <= i < j <= T):
        raise ValueError(f"need 1 <= i < j <= {T}, got ({i}, {j})")
    p, q = i - 1, j - 1
    c = DECISIONS[(fr[p] << 3 | to[p]) << 6 | fr[q] << 3 | to[q]]
    if c != 2:
        return Chain(((i, j),), False, False, c)
    members, parallel, free, decision = _walk_chain(fr, to, T, p, q)
    return Chain(tuple((a + 1, b + 1) for a, b in members),
                 parallel, free, decision)


@dataclass(frozen=True)
class Trace:
    """The full pair grid behind one self-intersection count.

    ``cells`` maps 1-based pairs (i, j), i < j, to "0", "1" or "X":
    decided pairs carry their contribution, chain members defer to the
    forward-most member of their chain, which carries the digit for the
    whole chain and is the only place a chain can add to the total.
    """

    word: str
    labels: tuple
    cells: dict
    total: int

    def render(self) -> str:
        T = len(self.labels)
        names = [f"w{k + 1}={lab}" for k, lab in enumerate(self.labels)]
        width = max(len(n) for n in names) + 2
        lines = [" " * width + "".join(n.ljust(width) for n in names[1:])]
        for i in range(1, T):
            row = [names[i - 1].ljust(width)]
            for j in range(2, T + 1):
                row.append((self.cells.get((i, j), "") if j > i else "").ljust(width))
            lines.append("".join(row).rstrip())
        lines.append(f"total = {self.total}")
        return "\n".join(lines)


def trace(w: ArcWord) -> Trace:
    """Evaluate the word and keep the whole pair grid for inspection."""
    fr, to = endpoint_items(w.start, w.letters, w.end)
    T = len(fr)
    dec = DECISIONS
    cells = {}
    total = 0
    for p in range(T - 1):
        for q in range(p + 1, T):
            if (p, q) in cells:
                continue
            c = dec[(fr[p] << 3 | to[p]) << 6 | fr[q] << 3 | to[q]]
            if c < 2:
                cells[(p, q)] = "01"[c]
                total += c
                continue
            members, _, _, decision = _walk_chain(fr, to, T, p, q)
            for pair in members[:-1]:
                cells[pair] = "X"
            cells[members[-1]] = "01"[decision]
            total += decision
    labels = tuple(Segment(f, t).label() for f, t in zip(fr, to))
    shifted = {(p + 1, q + 1): v for (p, q), v in cells.items()}
    return Trace(str(w), labels, shifted, total)
