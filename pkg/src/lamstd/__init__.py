"""Executable standardization for the untyped lambda calculus.

Terms use concrete variable names (natural numbers) and multiple
substitution with uniform binder renaming.  Any beta-reduction trace can be
turned into a standard reduction sequence, and any trace ending in normal
form into a leftmost one.
"""

from .alpha import AlphaVerdict, alpha_eq
from .beta import (
    AlphaStep,
    BetaStep,
    ReductionTrace,
    contract_at,
    count_redexes,
    enumerate_successors,
    is_abstraction,
    transport_beta_along_alpha,
    validate_trace,
)
from .errors import (
    IndexOutOfRange,
    InvalidTrace,
    LamstdError,
    NotNormalForm,
    ParseError,
    PreconditionViolated,
    ResourceLimit,
)
from .oracle import enumerate_traces, find_trace
from .standard import (
    StandardSequence,
    certify_derivation,
    is_normal_form,
    leftmost_from_trace,
    standardize,
    trace_to_std,
    validate_standard,
)
from .strategies import FuelExhausted, Normalized, hap_step, leftmost_step, normalize_leftmost
from .syntax import parse_term, print_term
from .terms import IDENTITY, App, Lam, Substitution, Var, apply_subst, chi, single_subst

__version__ = "0.1.0"
