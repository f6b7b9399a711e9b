"""Exact noncommutative polynomial arithmetic, Malcev-Neumann series over the
free group, Bergman's centralizer algorithm, and a verifier for the degree
estimate of two-generated subalgebras of a free algebra."""

from .estimate import (
    EstimateReport,
    HypothesisReport,
    InstanceConfig,
    PipelineTrace,
    WitnessTrace,
    check_hypotheses,
    degree_bound,
    expand_Q,
    peel_decomposition,
    pipeline_trace,
    random_instance,
    verify_instance,
    witness_monomial,
)
from .fields import GF, QQ, Field, FieldScalar, field_from_tag
from .freealg import MINUS_INFINITY, NcPoly, commutator, independent_pair, substitute
from .mnseries import Cut, GroupSeries, TruncatedGroupSeries, centralize, conjugate, invert
from .parsing import PolySyntaxError, parse_poly
from .words import OrderConfig, group_compare, primitive_root

__version__ = "0.1.0"
