"""Ideal-theoretic invariants over prime fields.

Decides j-stretchedness and classical stretchedness, computes
j-multiplicity, reduction numbers, the index of nilpotency, nu-sequences,
embedding codimension and general Cohen-Macaulay type, and checks the
numerical Cohen-Macaulayness criteria for associated graded rings, all
for ideals in quotients of polynomial rings over prime fields localized
at the origin.
"""

from .analysis import (
    AssertedHypotheses,
    almost_cm_check,
    classify,
    cm_prediction,
    fixed_reduction_test,
    hilbert_K,
    is_j_stretched,
    nu_sequence,
    properties_audit,
    sally_condition,
    stretched_test,
    type_and_codim,
    vv_equalities,
)
from .errors import (
    CapExceeded,
    ComputationError,
    DegreeBoundExceeded,
    NotAReduction,
    NotHomogeneous,
    NotLocallyContained,
    NotMPrimary,
    SessionError,
    WitnessNotFound,
)
from .fibercone import analytic_spread, gr_presentation, graded_depth, rees_ideal
from .field import PrimeField
from .groebner import buchberger, eliminate, normal_form
from .ideals import AmbientRing, IdealHandle
from .lengths import INFINITE, LocalLength, hilbert_function, is_m_primary, quotient_length
from .orders import elimination_block, grevlex, lex
from .poly import Polynomial, PolyRing
from .reductions import (
    GeneralSampler,
    ReductionData,
    index_of_nilpotency,
    j_multiplicity,
    max_spread_check,
    reduction_number,
    sample_reduction,
)
from .registry import build_case, registry_ids, run_registry
from .report import AnalysisReport, analyze, report_from_json, report_to_json
from .session import SessionConfig, parse_session
from .speclab import QUANTITIES, fixed_vs_general, stability_trials

__all__ = [name for name in dir() if not name.startswith("_")]
