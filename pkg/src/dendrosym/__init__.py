"""Exact itinerary calculus for inverse limits of tentish dendrite maps."""

from .backward import (
    ALL,
    BackSeq,
    BetaResult,
    BiSeq,
    DiscrepancySet,
    beta,
    biseq_admissible,
    boundary_point,
    discrepancies,
    fold_apply,
    in_cylinder,
    match_depth,
    project,
    same_arc_component,
)
from .literals import (
    parse_backward,
    parse_biseq,
    parse_forward,
    parse_kneading,
    parse_literal,
)
from .sequences import (
    INFINITY,
    ONE,
    STAR,
    TWO,
    ForwardSeq,
    KneadingSeq,
    approx,
    complement,
    first_discrepancy,
    is_acceptable,
    is_admissible,
    mu_point,
    shift,
)

__all__ = [
    "ALL",
    "BackSeq",
    "BetaResult",
    "BiSeq",
    "DiscrepancySet",
    "ForwardSeq",
    "INFINITY",
    "KneadingSeq",
    "ONE",
    "STAR",
    "TWO",
    "approx",
    "beta",
    "biseq_admissible",
    "boundary_point",
    "complement",
    "discrepancies",
    "first_discrepancy",
    "fold_apply",
    "in_cylinder",
    "is_acceptable",
    "is_admissible",
    "match_depth",
    "mu_point",
    "parse_backward",
    "parse_biseq",
    "parse_forward",
    "parse_kneading",
    "parse_literal",
    "project",
    "same_arc_component",
    "shift",
]

__version__ = "0.1.0"
