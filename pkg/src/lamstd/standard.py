"""Standard reductions, standard sequences, and the two theorems built on them.

A standard-reduction derivation (``StdDerivation``) is a tree: each node
starts with a hap prefix and then either stops at a variable, splits an
application into two sub-derivations, descends into a lambda body, or
renames its endpoint up to alpha.  Every node keeps its concrete data, so a
derivation doubles as a certificate that :func:`certify_derivation` checks
without trusting whoever built it.

The pipeline is

    trace --trace_to_std--> derivation --std_to_seq--> standard sequence

``trace_to_std`` folds the trace step by step with :func:`st_append_beta`,
which inserts each contraction into the derivation at the right place.
``std_to_seq`` flattens the tree left to right; the redex indices it emits
are non-decreasing, and that is re-checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .alpha import alpha_eq
from .beta import (
    AlphaStep,
    BetaStep,
    ReductionTrace,
    TraceStep,
    _contract,
    check_trace,
    transport_beta_along_alpha,
)
from .errors import (
    EndpointMismatch,
    IndexOutOfRange,
    InternalError,
    InvalidTrace,
    MonotonicityViolation,
    NonLeftmostStep,
    NotNormalForm,
    PreconditionViolated,
    ShapeMismatch,
)
from .strategies import HapTrace, check_hap_trace, hap_app_right, hap_trace_subst
from .terms import (
    IDENTITY,
    App,
    Lam,
    Restriction,
    Substitution,
    Term,
    Var,
    apply_subst,
    chi,
    single_subst,
)

# ---------------------------------------------------------------------------
# Derivations


@dataclass(frozen=True)
class StVar:
    prefix: HapTrace
    x: int
    source: Term = field(init=False, repr=False, compare=False)
    endpoint: Term = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "source", self.prefix.start)
        object.__setattr__(self, "endpoint", Var(self.x))


@dataclass(frozen=True)
class StApp:
    prefix: HapTrace
    left: StdDerivation
    right: StdDerivation
    source: Term = field(init=False, repr=False, compare=False)
    endpoint: Term = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "source", self.prefix.start)
        object.__setattr__(self, "endpoint", App(self.left.endpoint, self.right.endpoint))


@dataclass(frozen=True)
class StAbs:
    prefix: HapTrace
    binder: int
    body: StdDerivation
    source: Term = field(init=False, repr=False, compare=False)
    endpoint: Term = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "source", self.prefix.start)
        object.__setattr__(self, "endpoint", Lam(self.binder, self.body.endpoint))


@dataclass(frozen=True)
class StAlpha:
    inner: StdDerivation
    target: Term
    source: Term = field(init=False, repr=False, compare=False)
    endpoint: Term = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "source", self.inner.source)
        object.__setattr__(self, "endpoint", self.target)


StdDerivation = Union[StVar, StApp, StAbs, StAlpha]


def st_refl(m: Term) -> StdDerivation:
    empty = ReductionTrace(m)
    match m:
        case Var(x):
            return StVar(empty, x)
        case App(f, a):
            return StApp(empty, st_refl(f), st_refl(a))
        case Lam(x, body):
            return StAbs(empty, x, st_refl(body))
    raise TypeError(f"not a term: {m!r}")


def _is_trivial(d: StdDerivation, x: int) -> bool:
    return isinstance(d, StVar) and d.x == x and not d.prefix.steps and d.prefix.start == Var(x)


class SubstDerivation:
    """Pointwise standard reductions between two substitutions.

    Variables outside the support map to the reflexive derivation at
    themselves.
    """

    __slots__ = ("_derivs", "_source", "_target")

    def __init__(self, derivs: Mapping[int, StdDerivation] = ()):
        items = derivs.items() if isinstance(derivs, Mapping) else derivs
        self._derivs = {x: d for x, d in items if not _is_trivial(d, x)}
        self._source = None
        self._target = None

    def lookup(self, x: int) -> StdDerivation:
        d = self._derivs.get(x)
        return st_refl(Var(x)) if d is None else d

    def update(self, x: int, d: StdDerivation) -> SubstDerivation:
        new = dict(self._derivs)
        new[x] = d
        return SubstDerivation(new)

    @property
    def source(self) -> Substitution:
        if self._source is None:
            self._source = Substitution({x: d.source for x, d in self._derivs.items()})
        return self._source

    @property
    def target(self) -> Substitution:
        if self._target is None:
            self._target = Substitution({x: d.endpoint for x, d in self._derivs.items()})
        return self._target

    def __repr__(self):
        return f"SubstDerivation({self._derivs!r})"


def prepend_hap(t: HapTrace, d: StdDerivation) -> StdDerivation:
    """``L ->>hap M`` and ``M ->>st N`` give ``L ->>st N``."""
    if t.end() != d.source:
        raise EndpointMismatch("hap trace does not end at the derivation's source")
    if not t.steps:
        return d
    return _prepend(t, d)


def _prepend(t: HapTrace, d: StdDerivation) -> StdDerivation:
    match d:
        case StVar(prefix, x):
            return StVar(t.then(prefix), x)
        case StApp(prefix, left, right):
            return StApp(t.then(prefix), left, right)
        case StAbs(prefix, binder, body):
            return StAbs(t.then(prefix), binder, body)
        case StAlpha(inner, target):
            return StAlpha(_prepend(t, inner), target)
    raise TypeError(f"not a derivation: {d!r}")


def st_subst(d: StdDerivation, sd: SubstDerivation) -> StdDerivation:
    """Derivation from ``d.source . sd.source`` to ``d.endpoint . sd.target``."""
    match d:
        case StVar(prefix, x):
            return prepend_hap(hap_trace_subst(prefix, sd.source), sd.lookup(x))
        case StApp(prefix, left, right):
            hp = hap_trace_subst(prefix, sd.source)
            out = StApp(hp, st_subst(left, sd), st_subst(right, sd))
            if hp.end() != App(out.left.source, out.right.source):
                raise EndpointMismatch("application prefix does not meet its parts")
            return out
        case StAbs(prefix, x, body):
            sigma, sigma2 = sd.source, sd.target
            hp = hap_trace_subst(prefix, sigma)
            image_src = hp.end()
            image_tgt = apply_subst(Lam(x, body.endpoint), sigma2)
            # z avoids every free variable on both sides, so the renamed
            # abstraction is an alpha-variant of the substituted one.
            z = chi(Restriction(IDENTITY, App(image_src, image_tgt)))
            renamed = Lam(z, apply_subst(body.source, sigma.update(x, Var(z))))
            if renamed != image_src:
                hp = hp.extend(AlphaStep(renamed))
            inner = st_subst(body, sd.update(x, st_refl(Var(z))))
            return StAlpha(StAbs(hp, z, inner), image_tgt)
        case StAlpha(inner, target):
            return StAlpha(st_subst(inner, sd), apply_subst(target, sd.target))
    raise TypeError(f"not a derivation: {d!r}")


def _abs_view(d: StdDerivation) -> StAbs:
    """Innermost StAbs node under a chain of StAlpha wrappers."""
    while isinstance(d, StAlpha):
        d = d.inner
    if not isinstance(d, StAbs):
        raise ShapeMismatch("derivation of an abstraction does not end in one")
    return d


def st_contract_top(d: StdDerivation) -> StdDerivation:
    """From ``L ->>st (\\x. M) N`` build ``L ->>st M[x := N]``."""
    match d.endpoint:
        case App(Lam(x, m), n):
            goal = single_subst(m, x, n)
        case _:
            raise ShapeMismatch("endpoint is not a redex")
    match d:
        case StAlpha(inner, _):
            out = st_contract_top(inner)
        case StApp(prefix, left, right):
            head = _abs_view(left)
            arg = right.source
            contractum = single_subst(head.body.source, head.binder, arg)
            hap = prefix.then(hap_app_right(head.prefix, arg)).extend(BetaStep(0, contractum))
            residual = st_subst(head.body, SubstDerivation({head.binder: right}))
            out = prepend_hap(hap, residual)
        case _:
            raise ShapeMismatch("a redex endpoint needs an application derivation")
    if out.endpoint != goal:
        out = StAlpha(out, goal)
    return out


def st_append_beta(d: StdDerivation, n: int) -> StdDerivation:
    """From ``L ->>st M`` and the ``n``-th contraction of ``M`` build ``L ->>st N``."""
    m = d.endpoint
    if not 0 <= n < m.redexes:
        raise IndexOutOfRange(f"redex index {n} out of range: term has {m.redexes} redex(es)")
    return _append(d, n)


def _append(d: StdDerivation, n: int) -> StdDerivation:
    match d:
        case StAlpha(inner, target):
            contractum, verdict = transport_beta_along_alpha(target, n, inner.endpoint)
            if not verdict:
                raise InternalError("alpha-variants contracted to non-equivalent terms")
            out = _append(inner, n)
            assert out.endpoint == contractum
            return StAlpha(out, _contract(target, n))
        case StApp(prefix, left, right):
            fun = left.endpoint
            k = n
            if isinstance(fun, Lam):
                if n == 0:
                    return st_contract_top(d)
                k = n - 1
            if k < fun.redexes:
                return StApp(prefix, _append(left, k), right)
            return StApp(prefix, left, _append(right, k - fun.redexes))
        case StAbs(prefix, x, body):
            return StAbs(prefix, x, _append(body, n))
    raise IndexOutOfRange("no redex at a variable")


def trace_to_std(t: ReductionTrace) -> StdDerivation:
    problem = check_trace(t)
    if problem:
        raise InvalidTrace(problem)
    d = st_refl(t.start)
    for st in t.steps:
        if isinstance(st, BetaStep):
            d = _append(d, st.index)
        else:
            d = StAlpha(d, st.result)
    return d


def check_derivation(d: StdDerivation) -> str | None:
    """First broken invariant of ``d``, or None for a sound certificate."""
    stack = [d]
    while stack:
        node = stack.pop()
        match node:
            case StVar(prefix, x):
                expected = Var(x)
                children = ()
            case StApp(prefix, left, right):
                expected = App(left.source, right.source)
                children = (left, right)
            case StAbs(prefix, binder, body):
                expected = Lam(binder, body.source)
                children = (body,)
            case StAlpha(inner, target):
                if not alpha_eq(inner.endpoint, target):
                    return "alpha node target is not alpha-equivalent to its inner endpoint"
                stack.append(inner)
                continue
            case _:
                return f"unknown derivation node {type(node).__name__}"
        problem = check_hap_trace(prefix)
        if problem:
            return f"bad hap prefix: {problem}"
        if prefix.end() != expected:
            return f"{type(node).__name__} prefix does not end where its body starts"
        stack.extend(children)
    return None


def certify_derivation(d: StdDerivation) -> bool:
    return check_derivation(d) is None


# ---------------------------------------------------------------------------
# Standard sequences


@dataclass(frozen=True)
class StandardSequence:
    """Reduction sequence whose redex indices never decrease.

    ``bound`` is the index of the last beta step (0 if there is none): the
    least index the next step may contract.
    """

    start: Term
    steps: tuple[TraceStep, ...] = ()
    bound: int = 0

    def __post_init__(self):
        if not isinstance(self.steps, tuple):
            object.__setattr__(self, "steps", tuple(self.steps))

    def as_trace(self) -> ReductionTrace:
        return ReductionTrace(self.start, self.steps)

    def end(self) -> Term:
        return self.steps[-1].result if self.steps else self.start

    def beta_indices(self) -> list[int]:
        return [st.index for st in self.steps if isinstance(st, BetaStep)]


def _last_bound(steps) -> int:
    for st in reversed(steps):
        if isinstance(st, BetaStep):
            return st.index
    return 0


def _seq(start: Term, steps) -> StandardSequence:
    steps = tuple(steps)
    return StandardSequence(start, steps, _last_bound(steps))


def check_standard(s: StandardSequence) -> str | None:
    problem = check_trace(s.as_trace())
    if problem:
        return problem
    last = None
    for i, st in enumerate(s.steps, start=1):
        if isinstance(st, BetaStep):
            if last is not None and st.index < last:
                return f"non-decreasing index violated at step {i}"
            last = st.index
    expected = 0 if last is None else last
    if s.bound != expected:
        return f"bound {s.bound} differs from last beta index {expected}"
    return None


def validate_standard(s: StandardSequence) -> bool:
    return check_standard(s) is None


def seq_map_abs(s: StandardSequence, binder: int) -> StandardSequence:
    steps = []
    for st in s.steps:
        wrapped = Lam(binder, st.result)
        steps.append(BetaStep(st.index, wrapped) if isinstance(st, BetaStep) else AlphaStep(wrapped))
    return StandardSequence(Lam(binder, s.start), tuple(steps), s.bound)


def seq_map_app_left(s: StandardSequence, arg: Term) -> StandardSequence:
    steps = []
    prev = s.start
    for st in s.steps:
        wrapped = App(st.result, arg)
        if isinstance(st, BetaStep):
            shift = 1 if isinstance(prev, Lam) else 0
            steps.append(BetaStep(st.index + shift, wrapped))
        else:
            steps.append(AlphaStep(wrapped))
        prev = st.result
    return _seq(App(s.start, arg), steps)


def seq_map_app_right(s: StandardSequence, fun: Term) -> StandardSequence:
    offset = fun.redexes + (1 if isinstance(fun, Lam) else 0)
    steps = []
    for st in s.steps:
        wrapped = App(fun, st.result)
        if isinstance(st, BetaStep):
            steps.append(BetaStep(st.index + offset, wrapped))
        else:
            steps.append(AlphaStep(wrapped))
    return _seq(App(fun, s.start), steps)


def haptrace_to_seq(t: HapTrace) -> StandardSequence:
    if any(isinstance(st, BetaStep) and st.index != 0 for st in t.steps):
        raise PreconditionViolated("hap traces contract at index 0 only")
    return StandardSequence(t.start, t.steps, 0)


def _flatten(d: StdDerivation, out: list) -> None:
    match d:
        case StVar(prefix, _):
            out.extend(prefix.steps)
        case StAbs(prefix, binder, body):
            out.extend(prefix.steps)
            out.extend(seq_map_abs(std_to_seq_unchecked(body), binder).steps)
        case StApp(prefix, left, right):
            out.extend(prefix.steps)
            out.extend(seq_map_app_left(std_to_seq_unchecked(left), right.source).steps)
            out.extend(seq_map_app_right(std_to_seq_unchecked(right), left.endpoint).steps)
        case StAlpha(inner, target):
            _flatten(inner, out)
            out.append(AlphaStep(target))
        case _:
            raise TypeError(f"not a derivation: {d!r}")


def std_to_seq_unchecked(d: StdDerivation) -> StandardSequence:
    steps: list = []
    _flatten(d, steps)
    return _seq(d.source, steps)


def std_to_seq(d: StdDerivation) -> StandardSequence:
    s = std_to_seq_unchecked(d)
    problem = check_standard(s)
    if problem:
        raise MonotonicityViolation(problem)
    return s


def standardize(t: ReductionTrace) -> StandardSequence:
    """Standard sequence with the same endpoints as the trace."""
    s = std_to_seq(trace_to_std(t))
    if s.start != t.start or s.end() != t.end():
        raise InternalError("standardization moved an endpoint")
    return s


# ---------------------------------------------------------------------------
# Leftmost reduction


def is_normal_form(m: Term) -> bool:
    return m.redexes == 0


def nf_step_is_leftmost(m: Term, n: int) -> bool:
    if not 0 <= n < m.redexes:
        raise PreconditionViolated(f"redex index {n} out of range")
    if not is_normal_form(_contract(m, n)):
        raise PreconditionViolated("contractum is not a normal form")
    return n == 0


def seq_to_leftmost(s: StandardSequence) -> ReductionTrace:
    problem = check_standard(s)
    if problem:
        raise InvalidTrace(problem)
    if not is_normal_form(s.end()):
        raise NotNormalForm("sequence does not end in a normal form")
    for i, st in enumerate(s.steps, start=1):
        if isinstance(st, BetaStep) and st.index != 0:
            raise NonLeftmostStep(f"step {i} contracts redex {st.index}, not the leftmost")
    return s.as_trace()


def leftmost_from_trace(t: ReductionTrace) -> ReductionTrace:
    """Leftmost trace with the same endpoints as a trace ending in normal form."""
    problem = check_trace(t)
    if problem:
        raise InvalidTrace(problem)
    if not is_normal_form(t.end()):
        raise NotNormalForm("trace does not end in a normal form")
    return seq_to_leftmost(standardize(t))
