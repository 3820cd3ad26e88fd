"""Families of arcs with prescribed self-intersection numbers.

An arc is k-low-lying when the continued fraction of its endpoint
slope has all quotients at most k.  This module carries a catalog of
word families whose self-intersection numbers follow closed forms in
one or two parameters; the Z families come with explicit continued
fractions whose quotients never exceed 2, so together they exhibit a
2-low-lying arc for every target number: ``decompose`` picks the
family and parameters hitting a requested count exactly.

The same value sets admit a second description as ranges of shifted
squares, which makes membership a constant-time test; ``in_value_set``
implements that form and ``value_set_members`` the original
parameterization, so the two can be played against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .words import ArcWord


class UnsupportedFamily(ValueError):
    """The family does not provide the requested data."""


def _rep(block, times):
    return tuple(block) * times


@dataclass(frozen=True)
class Family:
    """One parameterized family: words, closed form, continued fraction."""

    name: str
    needs_m: bool
    word: callable
    value: callable
    quotients: callable = None
    fixed: bool = False


FAMILIES = {
    # single-parameter ladders; no bounded continued fraction attached
    "F1": Family("F1", False,
                 lambda n, m: ArcWord(1, _rep((3, 1), n), 2),
                 lambda n, m: n),
    "F2": Family("F2", False,
                 lambda n, m: ArcWord(1, _rep((2, 1), n), 3),
                 lambda n, m: n * n + 2 * n),
    "F3": Family("F3", False,
                 lambda n, m: ArcWord(1, _rep((3, 1), n) + (3,), 1),
                 lambda n, m: n),
    "F4": Family("F4", False,
                 lambda n, m: ArcWord(3, _rep((2, 1), n) + (2,), 3),
                 lambda n, m: n * n + 3 * n + 1),
    # two-parameter families with quotients bounded by 2
    "Z1": Family("Z1", True,
                 lambda n, m: ArcWord(1, _rep((2, 1), n) + (2, 0, 2) + _rep((1, 3, 1), m), 2),
                 lambda n, m: (m + n + 1) ** 2 + 2 * m + n,
                 lambda n, m: (2,) * (2 * n) + (1, 2, 1, 1) + (2,) * (2 * m - 1) + (1,)),
    "Z2": Family("Z2", True,
                 lambda n, m: ArcWord(1, _rep((2, 1), n) + _rep((2, 0, 0), m), 2),
                 lambda n, m: (m + n) ** 2 + 2 * m + 3 * n,
                 lambda n, m: (2,) * (2 * n) + (1, 1) + (2,) * (2 * m - 1) + (1,)),
    "Z3": Family("Z3", False,
                 lambda n, m: ArcWord(1, _rep((2, 1), n + 2) + (2, 0), 3),
                 lambda n, m: (n + 4) ** 2 - 2,
                 lambda n, m: (2,) * (2 * (n + 2)) + (1, 1, 1, 1)),
    "Z4": Family("Z4", False,
                 lambda n, m: ArcWord(1, _rep((2, 1), n) + (2,), 1),
                 lambda n, m: n * (n + 3),
                 lambda n, m: (2,) * (2 * n) + (1, 1)),
    "Z5": Family("Z5", False,
                 lambda n, m: ArcWord(1, _rep((2, 1), n) + (2, 0), 2),
                 lambda n, m: n * (n + 3) + 1,
                 lambda n, m: (2,) * (2 * n) + (1, 1, 1)),
    # two sporadic values the Z families miss
    "C2": Family("C2", False,
                 lambda n, m: ArcWord(1, (2, 1), 2),
                 lambda n, m: 2,
                 lambda n, m: (2, 1, 1),
                 fixed=True),
    "C7": Family("C7", False,
                 lambda n, m: ArcWord(1, (2, 1, 2, 0), 3),
                 lambda n, m: 7,
                 lambda n, m: (2, 2, 1, 1, 1, 1),
                 fixed=True),
}


def _checked(family_id: str, n: int, m) -> Family:
    try:
        fam = FAMILIES[family_id]
    except KeyError:
        raise UnsupportedFamily(f"unknown family {family_id!r}") from None
    if fam.fixed:
        if n != 0 or m is not None:
            raise ValueError(f"family {family_id} has no parameters")
        return fam
    if n < 0:
        raise ValueError("n must be nonnegative")
    if fam.needs_m:
        if m is None or m < 1:
            raise ValueError(f"family {family_id} needs m >= 1")
    elif m is not None:
        raise ValueError(f"family {family_id} has no second parameter")
    return fam


def family_word(family_id: str, n: int = 0, m: int | None = None) -> ArcWord:
    """The word of one family member."""
    return _checked(family_id, n, m).word(n, m)


def family_intersections(family_id: str, n: int = 0, m: int | None = None) -> int:
    """Closed-form self-intersection number of one family member."""
    return _checked(family_id, n, m).value(n, m)


def family_quotients(family_id: str, n: int = 0, m: int | None = None) -> tuple:
    """Continued-fraction quotients of one family member's slope."""
    fam = _checked(family_id, n, m)
    if fam.quotients is None:
        raise UnsupportedFamily(
            f"family {family_id} carries no bounded continued fraction")
    return fam.quotients(n, m)


def continued_fraction_value(quotients) -> Fraction:
    """Value of the continued fraction 1/(a1 + 1/(a2 + ... + 1/ak))."""
    qs = tuple(quotients)
    if not qs or any(a < 1 for a in qs):
        raise ValueError("quotients must be a nonempty sequence of positive integers")
    value = Fraction(0)
    for a in reversed(qs):
        value = Fraction(1, a + value)
    return value


class Decomposition(NamedTuple):
    family: str
    n: int
    m: int | None


def decompose(target: int) -> Decomposition:
    """Family and parameters of a 2-low-lying arc with ``target`` crossings.

    Writes target = j^2 + i0 with -j <= i0 <= j - 1 and reads the
    family off the offset i0; the values 0, 2 and 7 need their own
    words.
    """
    if target < 0:
        raise ValueError("a self-intersection number is nonnegative")
    if target == 0:
        return Decomposition("Z4", 0, None)
    if target == 2:
        return Decomposition("C2", 0, None)
    if target == 7:
        return Decomposition("C7", 0, None)
    r = isqrt(target)
    j = r if target <= r * r + r - 1 else r + 1
    i0 = target - j * j
    if -1 <= i0 <= j - 3:
        return Decomposition("Z2", i0 + 1, j - i0 - 2)
    if -j <= i0 <= -3:
        return Decomposition("Z1", -i0 - 3, j + i0 + 1)
    if i0 == -2:
        return Decomposition("Z3", j - 4, None)
    if i0 == j - 2:
        return Decomposition("Z4", j - 1, None)
    assert i0 == j - 1
    return Decomposition("Z5", j - 1, None)


@dataclass(frozen=True)
class WitnessArc:
    """A concrete arc hitting a requested self-intersection number."""

    target: int
    family: str
    n: int
    m: int | None
    word: ArcWord
    quotients: tuple


def witness(target: int) -> WitnessArc:
    """A 2-low-lying arc with exactly ``target`` self-crossings."""
    family, n, m = decompose(target)
    assert family_intersections(family, n, m) == target
    return WitnessArc(target, family, n, m,
                      family_word(family, n, m),
                      family_quotients(family, n, m))


# --- value sets of the Z families, and the covering of all targets ---

def in_value_set(family_id: str, value: int) -> bool:
    """Whether some member of the family has this intersection number.

    Uses the shifted-square description of each value set, so the test
    costs one integer square root.
    """
    if value < 0:
        return False
    if family_id == "Z1":
        s = isqrt(value)
        return s >= 2 and s * s + s <= value <= s * s + 2 * s - 2
    if family_id == "Z2":
        s = isqrt(value + 1) - 1
        return s >= 1 and s * s + 2 * s <= value <= s * s + 3 * s - 1
    if family_id == "Z3":
        r = isqrt(value + 2)
        return r >= 4 and r * r == value + 2
    if family_id == "Z4":
        r = isqrt(4 * value + 9)
        return r * r == 4 * value + 9
    if family_id == "Z5":
        return value >= 1 and in_value_set("Z4", value - 1)
    raise UnsupportedFamily(f"no value-set rule for family {family_id!r}")


_COVER_FAMILIES = ("Z1", "Z2", "Z3", "Z4", "Z5")

_SPORADIC_VALUES = {2: "C2", 7: "C7"}


def covering_family(value: int) -> str:
    """Name of a family whose value set contains ``value``."""
    if value in _SPORADIC_VALUES:
        return _SPORADIC_VALUES[value]
    for family_id in _COVER_FAMILIES:
        if in_value_set(family_id, value):
            return family_id
    raise AssertionError(f"value {value} escaped the covering families")


def value_set_members(family_id: str, limit: int) -> set:
    """All values of the family up to ``limit``, from the parameterization.

    Enumerates the closed form over its parameter grid, independent of
    the shifted-square membership test.
    """
    if family_id not in _COVER_FAMILIES:
        raise UnsupportedFamily(f"no value-set rule for family {family_id!r}")
    fam = FAMILIES[family_id]
    out = set()
    n = 0
    while True:
        first = fam.value(n, 1 if fam.needs_m else None)
        if first > limit:
            break
        if fam.needs_m:
            m = 1
            while (v := fam.value(n, m)) <= limit:
                out.add(v)
                m += 1
        else:
            out.add(first)
        n += 1
    return out


# --- pattern certificate for low-lying arcs ---

class LowLyingCheck(NamedTuple):
    """Outcome of the forbidden-pattern test.

    ``is_low_lying`` reports that no forbidden pattern occurs, so the
    arc is certified k-low-lying.  ``extrapolated`` marks judgments
    resting on patterns beyond the proven k = 4 catalog: mixed-case
    family alternations, or any window bound with k != 4.
    """

    is_low_lying: bool
    extrapolated: bool
    reason: str

    def __bool__(self) -> bool:
        return self.is_low_lying


def _equal_run(xs, k):
    run = 1
    for i in range(1, len(xs)):
        run = run + 1 if xs[i] == xs[i - 1] else 1
        if run == k:
            return i - k + 1
    return None


def _family_alternation(xs, span, uniform_case):
    for lo in range(len(xs) - span + 1):
        window = xs[lo:lo + span]
        if any(window[i] >> 1 == window[i + 1] >> 1 for i in range(span - 1)):
            continue
        if uniform_case and len({c & 1 for c in window}) > 1:
            continue
        return lo
    return None


def pattern_low_lying(w: ArcWord, k: int = 4) -> LowLyingCheck:
    """Certify an arc as k-low-lying by the absence of two patterns.

    The forbidden patterns are a run of k equal crossings and a window
    of 2k crossings alternating between the two cutting arcs.  For
    k = 4 the alternation pattern is established for windows of
    uniform case; a mixed-case alternation, or any other k, yields an
    extrapolated judgment.
    """
    if k < 2:
        raise ValueError("the window bound k must be at least 2")
    xs = w.letters
    run_at = _equal_run(xs, k)
    alt_literal = _family_alternation(xs, 2 * k, True)
    alt_any = _family_alternation(xs, 2 * k, False)
    if run_at is not None:
        reason = f"{k} equal crossings starting at position {run_at}"
        return LowLyingCheck(False, k != 4, reason)
    if alt_any is not None:
        reason = (f"{2 * k} crossings alternating between the cutting arcs "
                  f"starting at position {alt_any}")
        literal = k == 4 and alt_literal is not None
        return LowLyingCheck(False, not literal, reason)
    return LowLyingCheck(True, k != 4, "")


def load_reference_words(path=None) -> list:
    """The packaged (word, expected i) fixtures, or the file at path."""
    if path is None:
        import importlib.resources

        text = (importlib.resources.files("pantsarc")
                .joinpath("data/lowlying_words.csv").read_text())
    else:
        with open(path) as handle:
            text = handle.read()
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line or line.startswith("word,"):
            continue
        word, expected = line.rsplit(",", 1)
        out.append((word, int(expected)))
    return out
