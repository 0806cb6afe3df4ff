"""Brute-force enumeration of beta-reduction traces.

Used as a test oracle and by the CLI to find a reduction between two terms.
Traces contain beta steps only; contraction is deterministic for a given
index, so alpha steps would add nothing to what is reachable.
"""

from __future__ import annotations

import os

from .alpha import alpha_eq
from .beta import AlphaStep, BetaStep, ReductionTrace, _contract
from .errors import ResourceLimit
from .terms import Term

DEFAULT_FRONTIER_CAP = 100_000
CAP_ENV = "LAMSTD_FRONTIER_CAP"


def frontier_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_FRONTIER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{CAP_ENV} must be positive")
    return cap


def enumerate_traces(m: Term, depth: int, cap: int | None = None) -> list[ReductionTrace]:
    """Every trace from ``m`` with at most ``depth`` beta steps.

    Ordered lexicographically by index sequence, so a trace comes right
    before its own extensions.
    """
    if cap is None:
        cap = frontier_cap()
    found = [((), ())]
    level = [(m, (), ())]
    for _ in range(depth):
        nxt = []
        for term, indices, steps in level:
            for n in range(term.redexes):
                r = _contract(term, n)
                nxt.append((r, indices + (n,), steps + (BetaStep(n, r),)))
            if len(nxt) > cap:
                raise ResourceLimit(f"enumeration frontier exceeded {cap} states")
        if not nxt:
            break
        found.extend((idx, st) for _, idx, st in nxt)
        level = nxt
    found.sort(key=lambda pair: pair[0])
    return [ReductionTrace(m, steps) for _, steps in found]


def find_trace(m: Term, n: Term, depth: int, cap: int | None = None) -> ReductionTrace | None:
    """First enumerated trace from ``m`` ending at ``n``.

    Falls back to a trace ending alpha-equivalently, closed off with one
    alpha step.
    """
    traces = enumerate_traces(m, depth, cap)
    for t in traces:
        if t.end() == n:
            return t
    for t in traces:
        if alpha_eq(t.end(), n):
            return t.extend(AlphaStep(n))
    return None
