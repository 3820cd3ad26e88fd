"""Arcs on a pair of pants: words, chord diagrams, self-intersection."""

from .words import (
    ArcWord,
    BadShape,
    EndpointClash,
    ForbiddenPair,
    MalformedToken,
    NonReduced,
    SeamCounts,
    WordError,
    inverse,
    is_positive,
    parse_word,
    positivize,
    relabel,
    seam_counts,
)
from .planar import Classification, Segment, classify, segments
from .intersect import AlignmentOverrun, Chain, Trace, resolve_chain, self_intersection, trace
from .census import (
    BudgetExceeded,
    CensusReport,
    census,
    conjectured_max,
    count_words,
    enumerate_words,
    length_bounds,
    max_witness,
)
from .lowlying import (
    Decomposition,
    LowLyingCheck,
    UnsupportedFamily,
    WitnessArc,
    continued_fraction_value,
    covering_family,
    decompose,
    family_intersections,
    family_quotients,
    family_word,
    in_value_set,
    pattern_low_lying,
    witness,
)

__all__ = [
    "ArcWord",
    "WordError",
    "MalformedToken",
    "BadShape",
    "ForbiddenPair",
    "NonReduced",
    "EndpointClash",
    "SeamCounts",
    "parse_word",
    "inverse",
    "relabel",
    "seam_counts",
    "is_positive",
    "positivize",
    "Classification",
    "Segment",
    "classify",
    "segments",
    "AlignmentOverrun",
    "Chain",
    "Trace",
    "self_intersection",
    "resolve_chain",
    "trace",
    "BudgetExceeded",
    "CensusReport",
    "census",
    "conjectured_max",
    "count_words",
    "enumerate_words",
    "length_bounds",
    "max_witness",
    "Decomposition",
    "LowLyingCheck",
    "UnsupportedFamily",
    "WitnessArc",
    "continued_fraction_value",
    "covering_family",
    "decompose",
    "family_intersections",
    "family_quotients",
    "family_word",
    "in_value_set",
    "pattern_low_lying",
    "witness",
]
