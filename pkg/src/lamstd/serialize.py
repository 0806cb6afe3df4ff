"""JSON trace documents.

    {"start": TERM,
     "steps": [{"kind": "beta", "index": N, "result": TERM}
               | {"kind": "alpha", "result": TERM}, ...],
     "bound": N}          # optional; present on standard sequences

Terms are embedded in the textual syntax.  Unknown keys are rejected.
Loading checks shape only; whether the steps replay is up to the caller.
"""

from __future__ import annotations

import json
from pathlib import Path

from .beta import AlphaStep, BetaStep, ReductionTrace
from .errors import InvalidTrace, LamstdError
from .standard import StandardSequence
from .syntax import parse_term, print_term

_TOP_KEYS = {"start", "steps"}
_OPTIONAL_TOP_KEYS = {"bound"}


def trace_to_document(t: ReductionTrace | StandardSequence, bound: int | None = None) -> dict:
    steps = []
    for st in t.steps:
        if isinstance(st, BetaStep):
            steps.append({"kind": "beta", "index": st.index, "result": print_term(st.result)})
        else:
            steps.append({"kind": "alpha", "result": print_term(st.result)})
    doc = {"start": print_term(t.start), "steps": steps}
    if bound is None and isinstance(t, StandardSequence):
        bound = t.bound
    if bound is not None:
        doc["bound"] = bound
    return doc


def _nat(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidTrace(f"{what} must be a natural number")
    return value


def _term(value, what: str):
    if not isinstance(value, str):
        raise InvalidTrace(f"{what} must be a term string")
    try:
        return parse_term(value)
    except LamstdError as e:
        raise InvalidTrace(f"{what}: {e}") from None


def _step(raw, i: int):
    if not isinstance(raw, dict):
        raise InvalidTrace(f"step {i} is not an object")
    kind = raw.get("kind")
    if kind == "beta":
        allowed = {"kind", "index", "result"}
    elif kind == "alpha":
        allowed = {"kind", "result"}
    else:
        raise InvalidTrace(f"step {i} has unknown kind {kind!r}")
    extra = set(raw) - allowed
    missing = allowed - set(raw)
    if extra:
        raise InvalidTrace(f"step {i} has unknown field(s): {', '.join(sorted(extra))}")
    if missing:
        raise InvalidTrace(f"step {i} is missing field(s): {', '.join(sorted(missing))}")
    result = _term(raw["result"], f"step {i} result")
    if kind == "beta":
        return BetaStep(_nat(raw["index"], f"step {i} index"), result)
    return AlphaStep(result)


def document_to_trace(doc) -> ReductionTrace:
    if not isinstance(doc, dict):
        raise InvalidTrace("trace document must be a JSON object")
    extra = set(doc) - _TOP_KEYS - _OPTIONAL_TOP_KEYS
    if extra:
        raise InvalidTrace(f"unknown field(s): {', '.join(sorted(extra))}")
    if not _TOP_KEYS <= set(doc):
        raise InvalidTrace("trace document needs 'start' and 'steps'")
    if not isinstance(doc["steps"], list):
        raise InvalidTrace("'steps' must be a list")
    start = _term(doc["start"], "start")
    steps = tuple(_step(raw, i) for i, raw in enumerate(doc["steps"], start=1))
    return ReductionTrace(start, steps)


def document_to_sequence(doc) -> StandardSequence:
    """Read a document as a standard sequence; a missing bound is recomputed."""
    t = document_to_trace(doc)
    if "bound" in doc:
        bound = _nat(doc["bound"], "bound")
    else:
        indices = t.beta_indices()
        bound = indices[-1] if indices else 0
    return StandardSequence(t.start, t.steps, bound)


def dumps(t: ReductionTrace | StandardSequence, bound: int | None = None) -> str:
    return json.dumps(trace_to_document(t, bound), ensure_ascii=False, indent=2)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidTrace(f"not valid JSON: {e}") from None


def load_document(path: str | Path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidTrace(f"cannot read {path}: {e.strerror}") from None
    return loads(text)
