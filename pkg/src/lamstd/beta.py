"""Positional beta-contraction and reduction traces.

Redexes are numbered left to right in the linear syntax, from zero.  For an
application ``(\\x. A) B`` the redex itself comes first, then the redexes of
``A``, then those of ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .alpha import AlphaVerdict, alpha_eq
from .errors import IndexOutOfRange, PreconditionViolated
from .terms import App, Lam, Term, single_subst


def is_abstraction(m: Term) -> bool:
    return isinstance(m, Lam)


def count_redexes(m: Term) -> int:
    return m.redexes


def contract_at(m: Term, n: int) -> Term:
    """Contract the ``n``-th redex of ``m``."""
    if not 0 <= n < m.redexes:
        raise IndexOutOfRange(f"redex index {n} out of range: term has {m.redexes} redex(es)")
    return _contract(m, n)


def _contract(m: Term, n: int) -> Term:
    match m:
        case App(Lam(x, body), arg):
            if n == 0:
                return single_subst(body, x, arg)
            n -= 1
            fun = m.fun
            if n < fun.redexes:
                return App(_contract(fun, n), arg)
            return App(fun, _contract(arg, n - fun.redexes))
        case App(fun, arg):
            if n < fun.redexes:
                return App(_contract(fun, n), arg)
            return App(fun, _contract(arg, n - fun.redexes))
        case Lam(x, body):
            return Lam(x, _contract(body, n))
    raise AssertionError("index bookkeeping out of sync with redex count")


def enumerate_successors(m: Term) -> list[tuple[int, Term]]:
    return [(n, _contract(m, n)) for n in range(m.redexes)]


def transport_beta_along_alpha(m: Term, n: int, m_prime: Term) -> tuple[Term, AlphaVerdict]:
    """Contract ``m_prime`` at the same index ``n`` used on ``m``.

    Returns the contractum together with the alpha-check against
    ``contract_at(m, n)``; callers decide what a failed check means.
    """
    if not alpha_eq(m, m_prime):
        raise PreconditionViolated("transport needs alpha-equivalent terms")
    n_prime = contract_at(m_prime, n)
    return n_prime, alpha_eq(n_prime, contract_at(m, n))


@dataclass(frozen=True)
class BetaStep:
    index: int
    result: Term


@dataclass(frozen=True)
class AlphaStep:
    result: Term


TraceStep = Union[BetaStep, AlphaStep]


@dataclass(frozen=True)
class ReductionTrace:
    """Witness of ``start ->>beta end``: beta steps interleaved with alpha steps."""

    start: Term
    steps: tuple[TraceStep, ...] = ()

    def __post_init__(self):
        if not isinstance(self.steps, tuple):
            object.__setattr__(self, "steps", tuple(self.steps))

    def end(self) -> Term:
        return self.steps[-1].result if self.steps else self.start

    def terms(self) -> list[Term]:
        return [self.start] + [st.result for st in self.steps]

    def beta_indices(self) -> list[int]:
        return [st.index for st in self.steps if isinstance(st, BetaStep)]

    def pairs(self):
        """Yield ``(predecessor, step)`` for every step."""
        prev = self.start
        for st in self.steps:
            yield prev, st
            prev = st.result

    def then(self, other: ReductionTrace) -> ReductionTrace:
        if other.start != self.end():
            raise ValueError("cannot concatenate traces whose endpoints differ")
        return ReductionTrace(self.start, self.steps + other.steps)

    def extend(self, *steps: TraceStep) -> ReductionTrace:
        return ReductionTrace(self.start, self.steps + steps)


def check_trace(t: ReductionTrace) -> str | None:
    """First defect of ``t`` as a diagnostic, or None when it replays."""
    for i, (prev, st) in enumerate(t.pairs(), start=1):
        match st:
            case BetaStep(index, result):
                if not 0 <= index < prev.redexes:
                    return f"redex index {index} out of range at step {i}"
                if _contract(prev, index) != result:
                    return f"beta step result does not match contraction at step {i}"
            case AlphaStep(result):
                if not alpha_eq(prev, result):
                    return f"alpha step between non-equivalent terms at step {i}"
            case _:
                return f"unknown step kind at step {i}"
    return None


def validate_trace(t: ReductionTrace) -> bool:
    return check_trace(t) is None
