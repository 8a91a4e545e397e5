"""Conjugacy and residual separability of generalized Baumslag-Solitar groups
relative to classes of finite groups given by a set of primes."""

from .bs1n import Bs1nElement, Bs1nGroup
from .errors import BoundExceeded, DomainError, GbsSepError, InternalError, ParseError, PreconditionError
from .graph import Edge, LabeledGraph
from .hquot import HElement, HGroup, find_separating_quotient
from .kernels import BACKEND
from .numtheory import PrimeSet, in_xi, is_p_number, multiplicative_order
from .separability import (
    Answer,
    FusionWitness,
    Verdict,
    condition1_check,
    conjugacy_separable_gbs,
    fusion_witness,
    residually_c_gbs,
)
from .words import GroupWord

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "BACKEND",
    "BoundExceeded",
    "Bs1nElement",
    "Bs1nGroup",
    "DomainError",
    "Edge",
    "FusionWitness",
    "GbsSepError",
    "GroupWord",
    "HElement",
    "HGroup",
    "InternalError",
    "LabeledGraph",
    "ParseError",
    "PreconditionError",
    "PrimeSet",
    "Verdict",
    "condition1_check",
    "conjugacy_separable_gbs",
    "find_separating_quotient",
    "fusion_witness",
    "in_xi",
    "is_p_number",
    "multiplicative_order",
    "residually_c_gbs",
]
