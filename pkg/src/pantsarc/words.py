"""Arc words on a pair of pants.

A pair of pants (a sphere with three holes, boundaries labeled 1, 2
and 3) is cut into a disk by two disjoint simple arcs: cutting arc
``a`` runs from boundary 1 to boundary 3 and cutting arc ``b`` from
boundary 2 to boundary 3.  A properly embedded arc is described by a
word  ``n1 x1 ... xL n2``:  the digits name the boundaries carrying
the endpoints and each letter records a crossing of a cutting arc,
uppercase for the reverse direction (``A`` undoes ``a``, ``B`` undoes
``b``).

Words are kept reduced and taut: a crossing never immediately undoes
the previous one, consecutive boundary digits ``11`` and ``22`` are
excluded (such arcs retract into the boundary), and the first or last
crossing may not be the cutting arc that touches the starting or
ending boundary (those corner segments retract as well).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

LETTER_CHARS = "aAbB"
SEAM_CHARS = "123"

_CODE_OF = {ch: k for k, ch in enumerate(LETTER_CHARS)}

# boundary digit -> letter family (0 = a, 1 = b) that may not sit next to it
_CLASHING_FAMILY = {1: 0, 2: 1}


def invert_code(code: int) -> int:
    """Code of the reverse crossing: a <-> A and b <-> B."""
    return code ^ 1


def letter_family(code: int) -> int:
    """0 for crossings of cutting arc a, 1 for cutting arc b."""
    return code >> 1


class WordError(ValueError):
    """Rejected word text; ``position`` indexes the offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class MalformedToken(WordError):
    """A character outside the alphabet 123aAbB."""


class BadShape(WordError):
    """Text does not have the shape digit, crossings, digit."""


class ForbiddenPair(WordError):
    """A crossing-free word from boundary 1 or 2 back to itself."""


class NonReduced(WordError):
    """A crossing immediately undone by its reverse."""


class EndpointClash(WordError):
    """First or last crossing touches the cutting arc at its own boundary."""


@dataclass(frozen=True)
class ArcWord:
    """A validated arc word: two boundary labels and the crossing codes."""

    start: int
    letters: tuple
    end: int

    @property
    def word_length(self) -> int:
        """Number of symbols in the word, crossings plus the two digits."""
        return len(self.letters) + 2

    def render(self) -> str:
        mid = "".join(LETTER_CHARS[c] for c in self.letters)
        return f"{self.start}{mid}{self.end}"

    def __str__(self) -> str:
        return self.render()


def parse_word(text: str) -> ArcWord:
    """Parse and validate an arc word string.

    Scans left to right and raises the WordError subclass describing
    the first character at which the text stops being extendable to a
    valid word.
    """
    if not text:
        raise BadShape("empty word", 0)
    ch = text[0]
    if ch not in SEAM_CHARS:
        if ch not in _CODE_OF:
            raise MalformedToken(f"unknown character {ch!r}", 0)
        raise BadShape("word must open with a boundary digit", 0)
    start = int(ch)
    letters = []
    for i in range(1, len(text)):
        ch = text[i]
        if ch in _CODE_OF:
            code = _CODE_OF[ch]
            if not letters and _CLASHING_FAMILY.get(start) == code >> 1:
                raise EndpointClash(
                    f"crossing {ch!r} retracts into boundary {start}", i)
            if letters and code == letters[-1] ^ 1:
                raise NonReduced(f"crossing {ch!r} undoes the previous one", i)
            letters.append(code)
        elif ch in SEAM_CHARS:
            end = int(ch)
            if not letters and start == end and start != 3:
                raise ForbiddenPair(
                    f"crossing-free word from boundary {start} to itself", i)
            if letters and _CLASHING_FAMILY.get(end) == letters[-1] >> 1:
                raise EndpointClash(
                    f"crossing {text[i - 1]!r} retracts into boundary {end}", i)
            if i + 1 < len(text):
                raise BadShape("text continues past the closing digit", i + 1)
            return ArcWord(start, tuple(letters), end)
        else:
            raise MalformedToken(f"unknown character {ch!r}", i)
    raise BadShape("word never closes with a boundary digit", len(text))


def inverse(w: ArcWord) -> ArcWord:
    """The same arc traversed backwards."""
    return ArcWord(w.end, tuple(c ^ 1 for c in reversed(w.letters)), w.start)


_SWAP_BOUNDARY = {1: 2, 2: 1, 3: 3}


def relabel(w: ArcWord) -> ArcWord:
    """Exchange the two legs: boundaries 1 <-> 2 and cutting arcs a <-> b."""
    return ArcWord(_SWAP_BOUNDARY[w.start],
                   tuple(c ^ 2 for c in w.letters),
                   _SWAP_BOUNDARY[w.end])


class SeamCounts(NamedTuple):
    a_count: int
    b_count: int


def seam_counts(w: ArcWord) -> SeamCounts:
    """How many times the word crosses each cutting arc, either direction."""
    b = sum(c >> 1 for c in w.letters)
    return SeamCounts(len(w.letters) - b, b)


def is_positive(w: ArcWord) -> bool:
    """True when no crossing occurs together with its reverse."""
    cases_seen = [set(), set()]
    for c in w.letters:
        cases_seen[c >> 1].add(c & 1)
    return all(len(s) < 2 for s in cases_seen)


def _flip_blocks(w: ArcWord) -> ArcWord:
    xs = list(w.letters)
    last = len(xs) - 1
    while True:
        lo = next((k for k, c in enumerate(xs) if c & 1), None)
        if lo is None:
            break
        hi = lo
        while hi < last and xs[hi + 1] & 1:
            hi += 1
        flip_lo, flip_hi = lo, hi
        if lo == 0 and xs[hi] >> 1 == _CLASHING_FAMILY.get(w.start):
            # the block's closing run would land on the first position
            while xs[flip_hi] == xs[hi]:
                flip_hi -= 1
        elif hi == last and xs[lo] >> 1 == _CLASHING_FAMILY.get(w.end):
            while xs[flip_lo] == xs[lo]:
                flip_lo += 1
        assert flip_lo <= flip_hi
        xs[flip_lo:flip_hi + 1] = [c ^ 1 for c in reversed(xs[flip_lo:flip_hi + 1])]
    return ArcWord(w.start, tuple(xs), w.end)


def positivize(w: ArcWord) -> ArcWord:
    """Rewrite the word as a positive word without raising the crossing count.

    Each maximal uppercase block is replaced by its reversed lowercase
    mirror.  When the flipped block would land a clashing crossing next
    to an endpoint boundary, the run of equal letters feeding that
    endpoint is left in place and flipped on a later round.  On a few
    words that block rewrite raises the self-intersection number; the
    word is then traversed backwards and flipped instead, which brought
    the count back down in every such word of length up to 12
    (exhaustive check).  Crossing counts and word length are always
    preserved, and a word with no lowercase crossings at all is simply
    traversed backwards.
    """
    if not any(c & 1 for c in w.letters):
        return w
    if all(c & 1 for c in w.letters):
        return inverse(w)
    flipped = _flip_blocks(w)
    # the crossing engine sits above this module, so fetch it lazily
    from .intersect import self_intersection
    if self_intersection(flipped) <= self_intersection(w):
        return flipped
    other = _flip_blocks(inverse(w))
    if self_intersection(other) <= self_intersection(flipped):
        return other
    return flipped
