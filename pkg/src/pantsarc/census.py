"""Exhaustive censuses of arc words, grouped by word length.

Where the intersect module prices a single word, this module walks
every valid word of a given length and tallies the distribution of
self-intersection numbers.  Words sharing a prefix share every
segment pair inside that prefix, so the walk is a depth-first search
over letters that carries a running subtotal per tree node instead of
re-pricing each word from scratch.

Each undecidable pair belongs to a chain (see the intersect module)
and the chain must be charged exactly once.  The search charges it at
the member whose larger segment index is largest, because that member
is completed last: for a chain whose strands run parallel this is the
forward-most member, for antiparallel strands it is the rearmost one,
and a chain that merges into a boundary stretch is never charged at
all, which is also its correct price.

The search is split into eight independent jobs keyed by the starting
boundary and the first crossing, so a census can optionally spread
over worker processes; the merged histogram does not depend on the
number of workers.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool

from .intersect import AlignmentOverrun
from .planar import CORNER_ITEM, DECISIONS, EDGE_ITEM, FAR_WAIST_ITEM
from .words import ArcWord, _CLASHING_FAMILY

# every arc with no self-crossing at all, up to free homotopy
SIMPLE_WORDS = ("12", "13", "21", "23", "31", "32", "33", "1b1", "1B1", "2a2", "2A2")

# letter codes in the ASCII order of their characters: A, B, a, b
_LEX_CODES = (1, 3, 0, 2)

# admissible closing digits by family of the last crossing, ascending
_ENDS_FOR_FAMILY = ((2, 3), (1, 3))

# crossing-free words, already in ASCII order
_BARE_WORDS = ("12", "13", "21", "23", "31", "32", "33")


class BudgetExceeded(RuntimeError):
    """A census was requested beyond the supported size without opting in."""


def count_words(word_length: int) -> int:
    """Number of valid words of the given length, counted directly.

    Crossing-free words contribute 7; with one crossing there are 16
    words, and each further crossing multiplies the count by 3.
    """
    if word_length < 2:
        raise ValueError("a word has at least two symbols")
    if word_length == 2:
        return 7
    return 16 * 3 ** (word_length - 3)


def enumerate_words(word_length: int):
    """Yield every valid word of the given length in ASCII order."""
    if word_length < 2:
        raise ValueError("a word has at least two symbols")
    if word_length == 2:
        for text in _BARE_WORDS:
            yield ArcWord(int(text[0]), (), int(text[1]))
        return
    L = word_length - 2
    letters = [0] * L

    def grow(k):
        if k == L:
            for end in _ENDS_FOR_FAMILY[letters[-1] >> 1]:
                yield ArcWord(start, tuple(letters), end)
            return
        banned = letters[k - 1] ^ 1 if k else None
        for c in _LEX_CODES:
            if c == banned:
                continue
            if k == 0 and c >> 1 == _CLASHING_FAMILY.get(start):
                continue
            letters[k] = c
            yield from grow(k + 1)

    for start in (1, 2, 3):
        yield from grow(0)


def _first_letter_tasks():
    tasks = []
    for start in (1, 2, 3):
        for c in _LEX_CODES:
            if c >> 1 != _CLASHING_FAMILY.get(start):
                tasks.append((start, c))
    return tasks


def _census_task(word_length, start, first):
    """Histogram over all words of one (start, first crossing) job."""
    L = word_length - 2
    T = L + 1
    fr = [0] * T
    to = [0] * T
    sc = [0] * T
    letters = [0] * L
    letters[0] = first
    fr[0] = CORNER_ITEM[start] if start != 3 else FAR_WAIST_ITEM[first]
    to[0] = EDGE_ITEM[first]
    sc[0] = fr[0] << 3 | to[0]
    hist = Counter()
    dec = DECISIONS

    def pair_adds(s):
        # price every pair (p, s); s is the newest segment on the path
        adds = 0
        cs = sc[s]
        ts = to[s]
        fs = fr[s]
        for p in range(s):
            c = dec[sc[p] << 6 | cs]
            if c < 2:
                adds += c
            elif to[p] == ts:
                # parallel strands continue forward; charged there
                pass
            elif fr[p] == fs:
                # forward-most member of a parallel chain
                P, Q = p, s
                while fr[P] == fr[Q]:
                    P -= 1
                    Q -= 1
                shared = to[P]
                rear = (fr[Q] - shared) % 8 < (fr[P] - shared) % 8
                shared = fr[p]
                front = (to[s] - shared) % 8 > (to[p] - shared) % 8
                adds += rear != front
            elif fr[p] == ts:
                # antiparallel strands continue rearward (or merge into
                # one boundary stretch, which costs nothing)
                pass
            else:
                # rearmost member of an antiparallel chain
                P, Q = p, s
                while to[P] == fr[Q]:
                    if Q - P < 3:
                        raise AlignmentOverrun("antiparallel strands collided")
                    P += 1
                    Q -= 1
                shared = to[p]
                rear = (to[s] - shared) % 8 < (fr[p] - shared) % 8
                shared = fr[P]
                front = (fr[Q] - shared) % 8 > (to[P] - shared) % 8
                adds += rear != front
        return adds

    def grow(k, subtotal):
        if k == L:
            last = letters[-1]
            base = EDGE_ITEM[last ^ 1]
            fr[L] = base
            for end in _ENDS_FOR_FAMILY[last >> 1]:
                to[L] = CORNER_ITEM[end] if end != 3 else FAR_WAIST_ITEM[last ^ 1]
                sc[L] = base << 3 | to[L]
                hist[subtotal + pair_adds(L)] += 1
            return
        prev = letters[k - 1]
        banned = prev ^ 1
        base = EDGE_ITEM[banned]
        fr[k] = base
        for c in _LEX_CODES:
            if c == banned:
                continue
            letters[k] = c
            to[k] = EDGE_ITEM[c]
            sc[k] = base << 3 | to[k]
            grow(k + 1, subtotal + pair_adds(k))

    grow(1, 0)
    return hist


def _census_task_args(args):
    return _census_task(*args)


@dataclass(frozen=True)
class CensusReport:
    """Distribution of self-intersection numbers at one word length."""

    word_length: int
    word_count: int
    min_i: int
    max_i: int
    histogram: dict

    def histogram_pairs(self):
        """The histogram as a sorted list of [value, count] pairs."""
        return [[i, self.histogram[i]] for i in sorted(self.histogram)]

    def as_dict(self):
        return {
            "word_length": self.word_length,
            "word_count": self.word_count,
            "min_i": self.min_i,
            "max_i": self.max_i,
            "histogram": self.histogram_pairs(),
        }


# beyond this length a census is hours of work, not minutes
CENSUS_SIZE_LIMIT = 16


def census(word_length: int, jobs: int | None = None,
           allow_large: bool = False) -> CensusReport:
    """Tally self-intersection numbers over all words of one length.

    ``jobs`` selects the number of worker processes (default: the
    ARC_JOBS environment variable, else 1).  Lengths above
    CENSUS_SIZE_LIMIT are refused unless ``allow_large`` is set.
    """
    if word_length < 2:
        raise ValueError("a word has at least two symbols")
    if word_length > CENSUS_SIZE_LIMIT and not allow_large:
        raise BudgetExceeded(
            f"censuses beyond word length {CENSUS_SIZE_LIMIT} take hours; "
            "pass allow_large=True to run one anyway")
    if jobs is None:
        jobs = int(os.environ.get("ARC_JOBS", "1"))
    if word_length == 2:
        hist = Counter({0: 7})
    else:
        tasks = [(word_length, start, first)
                 for start, first in _first_letter_tasks()]
        hist = Counter()
        if jobs > 1:
            with Pool(min(jobs, len(tasks))) as pool:
                for part in pool.map(_census_task_args, tasks):
                    hist.update(part)
        else:
            for t in tasks:
                hist.update(_census_task(*t))
    count = sum(hist.values())
    return CensusReport(word_length, count, min(hist), max(hist), dict(hist))


def length_bounds(word_length: int):
    """Proved bounds (lower, upper) on i over words of one length.

    With L crossings every arc satisfies
    ceil(L / 2) - 1 <= i <= L (L + 1) / 2 (lower bound clamped at 0).
    The lower bound is attained for odd L; the upper is far from tight.
    """
    L = word_length - 2
    if L < 0:
        raise ValueError("a word has at least two symbols")
    return max(0, (L + 1) // 2 - 1), L * (L + 1) // 2


def conjectured_max(word_length: int) -> int:
    """Conjectured largest i at one word length, matching every census run.

    With L crossings this is L^2/4 + L for even L and (L^2 - 1)/4 + L
    for odd L.
    """
    L = word_length - 2
    if L < 0:
        raise ValueError("a word has at least two symbols")
    return L * L // 4 + L


def max_witness(word_length: int) -> ArcWord:
    """A word attaining the conjectured maximum at its length."""
    L = word_length - 2
    if L < 0:
        raise ValueError("a word has at least two symbols")
    if L % 2 == 0:
        if L == 0:
            return ArcWord(1, (), 3)
        return ArcWord(1, (2, 1) * (L // 2), 3)
    return ArcWord(3, (2, 1) * (L // 2) + (2,), 3)


def check_conjectured_max(word_length: int) -> bool:
    """Whether the witness word really attains the conjectured maximum."""
    from .intersect import self_intersection

    return self_intersection(max_witness(word_length)) == conjectured_max(word_length)


def load_reference_minmax() -> dict:
    """The packaged census extremes, word length -> (min i, max i)."""
    import importlib.resources

    text = (importlib.resources.files("pantsarc")
            .joinpath("data/census_minmax.csv").read_text())
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line or line.startswith("word_length"):
            continue
        wl, lo, hi = line.split(",")
        out[int(wl)] = (int(lo), int(hi))
    return out
