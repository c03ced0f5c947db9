"""Exact l1 (Spearman footrule) segments in S_n and their Genocchi counts."""

from footrule.bijections import (
    Parity,
    ParityContext,
    VerificationReport,
    eta,
    g_map,
    h_map,
    make_context,
    rho,
    verify_theorem,
)
from footrule.dumont import DumontKind, enumerate_dumont, genocchi_value, is_dumont
from footrule.errors import (
    EmptyInput,
    EvenSize,
    FootruleError,
    InvalidM,
    NotAPermutation,
    OddSize,
    SizeMismatch,
    SizeTooLarge,
    UnknownBackend,
)
from footrule.metric import (
    Backend,
    CountResult,
    IntervalProfile,
    count_between,
    count_segment,
    distance,
    enumerate_between,
    enumerate_segment,
    in_segment,
    segment_profile,
)
from footrule.perm import Permutation, compose, format_perm, inverse, make_wn, parse
from footrule.search import SearchReport, conjecture_check, max_segment_search

__version__ = "0.1.0"
