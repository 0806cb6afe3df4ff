"""Head reduction in application (hap), leftmost reduction, and normalization.

A hap step contracts the redex at the head of an application chain
``(\\x. M0) M1 M2 ... Mk`` and never looks under a lambda or into
arguments.  A leftmost step contracts redex 0.  Every hap step is a
leftmost step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .alpha import AlphaVerdict, alpha_eq
from .beta import AlphaStep, BetaStep, ReductionTrace, _contract
from .errors import PreconditionViolated
from .terms import App, Lam, Substitution, Term, apply_subst, single_subst

DEFAULT_FUEL = 10_000

# A hap trace is a ReductionTrace whose beta steps are all hap steps (index 0).
HapTrace = ReductionTrace


def hap_step(m: Term) -> Term | None:
    match m:
        case App(Lam(x, body), arg):
            return single_subst(body, x, arg)
        case App(fun, arg):
            head = hap_step(fun)
            return None if head is None else App(head, arg)
    return None


def leftmost_step(m: Term) -> Term | None:
    return _contract(m, 0) if m.redexes else None


def hap_implies_leftmost(m: Term) -> bool:
    n = hap_step(m)
    if n is None:
        raise PreconditionViolated("no hap step applies")
    return n == leftmost_step(m)


def check_hap_trace(t: ReductionTrace) -> str | None:
    for i, (prev, st) in enumerate(t.pairs(), start=1):
        if isinstance(st, BetaStep):
            if st.index != 0:
                return f"hap step with nonzero index at step {i}"
            if hap_step(prev) != st.result:
                return f"not a head step in application at step {i}"
        elif not alpha_eq(prev, st.result):
            return f"alpha step between non-equivalent terms at step {i}"
    return None


def is_hap_trace(t: ReductionTrace) -> bool:
    return check_hap_trace(t) is None


def hap_app_right(t: HapTrace, p: Term) -> HapTrace:
    """``M ->>hap N`` gives ``M P ->>hap N P``."""
    steps = []
    for st in t.steps:
        if isinstance(st, BetaStep):
            steps.append(BetaStep(0, App(st.result, p)))
        else:
            steps.append(AlphaStep(App(st.result, p)))
    return ReductionTrace(App(t.start, p), tuple(steps))


def hap_subst_step(m: Term, target: Term, s: Substitution) -> tuple[Term, AlphaVerdict]:
    if hap_step(m) != target:
        raise PreconditionViolated("target is not the hap contractum of m")
    n_prime = hap_step(apply_subst(m, s))
    assert n_prime is not None, "substitution destroyed a head redex"
    return n_prime, alpha_eq(n_prime, apply_subst(target, s))


def hap_trace_subst(t: HapTrace, s: Substitution) -> HapTrace:
    """Push a substitution through a hap trace.

    The image of each hap step is a hap step followed, when the contractum
    differs syntactically from the substituted target, by an alpha step.
    Alpha steps of the input collapse: alpha-equivalent terms have equal
    substitution images, so they are dropped.
    """
    start = cur = apply_subst(t.start, s)
    steps = []
    for st in t.steps:
        if isinstance(st, AlphaStep):
            image = apply_subst(st.result, s)
            if image != cur:
                steps.append(AlphaStep(image))
                cur = image
            continue
        n_prime = hap_step(cur)
        assert n_prime is not None, "substitution destroyed a head redex"
        steps.append(BetaStep(0, n_prime))
        cur = apply_subst(st.result, s)
        if n_prime != cur:
            steps.append(AlphaStep(cur))
    return ReductionTrace(start, tuple(steps))


@dataclass(frozen=True)
class Normalized:
    trace: ReductionTrace


@dataclass(frozen=True)
class FuelExhausted:
    partial: ReductionTrace


NormalizeOutcome = Union[Normalized, FuelExhausted]


def normalize_leftmost(m: Term, fuel: int = DEFAULT_FUEL) -> NormalizeOutcome:
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    steps = []
    cur = m
    for _ in range(fuel):
        if not cur.redexes:
            break
        cur = _contract(cur, 0)
        steps.append(BetaStep(0, cur))
    trace = ReductionTrace(m, tuple(steps))
    if cur.redexes:
        return FuelExhausted(trace)
    return Normalized(trace)
