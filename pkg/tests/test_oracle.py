import pytest

from lamstd.beta import AlphaStep, BetaStep, ReductionTrace, validate_trace
from lamstd.errors import ResourceLimit
from lamstd.oracle import CAP_ENV, enumerate_traces, find_trace, frontier_cap
from lamstd.terms import App, Lam, Var
from oracles import nameless_replay, terms_up_to, to_nameless

x0, x1, x2, x3 = Var(0), Var(1), Var(2), Var(3)
I0 = Lam(0, x0)
K_START = App(Lam(0, x1), App(Lam(2, x2), x3))
OMEGA = App(Lam(0, App(x0, x0)), Lam(0, App(x0, x0)))


def _indices(traces):
    return [tuple(t.beta_indices()) for t in traces]


def test_enumerate_examples():
    assert enumerate_traces(Lam(0, x1), 3) == [ReductionTrace(Lam(0, x1))]
    assert _indices(enumerate_traces(App(I0, x1), 2)) == [(), (0,)]
    got = _indices(enumerate_traces(K_START, 2))
    assert (1, 0) in got and (0,) in got
    assert got == [(), (0,), (1,), (1, 0)]


def test_enumerate_order_and_validity():
    traces = enumerate_traces(OMEGA, 3)
    assert _indices(traces) == [(), (0,), (0, 0), (0, 0, 0)]
    m = App(App(I0, App(I0, x1)), App(I0, x2))
    traces = enumerate_traces(m, 3)
    idx = _indices(traces)
    assert idx == sorted(idx)
    assert all(validate_trace(t) for t in traces)


def test_enumerate_matches_independent_search():
    def expected(m, depth):
        out = [()]
        frontier = [((), to_nameless(m))]
        for _ in range(depth):
            nxt = []
            for idx, _ in frontier:
                k = 0
                while nameless_replay(m, idx + (k,)) is not None:
                    nxt.append((idx + (k,), None))
                    k += 1
            out.extend(i for i, _ in nxt)
            frontier = nxt
        return sorted(out)

    for m in terms_up_to(6):
        if not m.redexes:
            continue
        traces = enumerate_traces(m, 3)
        assert _indices(traces) == expected(m, 3)
        for t in traces:
            assert to_nameless(t.end()) == nameless_replay(m, t.beta_indices())


def test_resource_limit(monkeypatch):
    m = App(App(I0, App(I0, x1)), App(I0, x2))
    with pytest.raises(ResourceLimit):
        enumerate_traces(m, 3, cap=2)
    monkeypatch.setenv(CAP_ENV, "2")
    assert frontier_cap() == 2
    with pytest.raises(ResourceLimit):
        enumerate_traces(m, 3)
    monkeypatch.setenv(CAP_ENV, "lots")
    with pytest.raises(ValueError):
        frontier_cap()


def test_find_trace():
    assert find_trace(K_START, K_START, 2) == ReductionTrace(K_START)
    assert find_trace(App(I0, x1), x1, 2) == ReductionTrace(App(I0, x1), (BetaStep(0, x1),))
    assert find_trace(App(I0, x1), x2, 3) is None
    m = App(Lam(0, Lam(1, App(x1, x0))), x2)
    target = Lam(5, App(Var(5), x2))
    t = find_trace(m, target, 1)
    assert t is not None and isinstance(t.steps[-1], AlphaStep) and t.end() == target
    assert validate_trace(t)
