"""Concrete lambda terms and multiple substitution.

Variables are natural numbers and terms are *not* identified up to
alpha-conversion: ``Lam(0, Var(0))`` and ``Lam(1, Var(1))`` are different
values.  Substitution is simultaneous over all variables and renames every
binder it passes through, choosing the new name with :func:`chi`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Union


@dataclass(frozen=True, slots=True)
class Var:
    index: int
    fv: frozenset = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    redexes: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"variable index must be a natural number, got {self.index}")
        object.__setattr__(self, "fv", frozenset((self.index,)))
        object.__setattr__(self, "size", 1)
        object.__setattr__(self, "redexes", 0)


@dataclass(frozen=True, slots=True)
class App:
    fun: Term
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    redexes: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fun, arg = self.fun, self.arg
        object.__setattr__(self, "fv", fun.fv | arg.fv)
        object.__setattr__(self, "size", 1 + fun.size + arg.size)
        n = fun.redexes + arg.redexes
        if isinstance(fun, Lam):
            n += 1
        object.__setattr__(self, "redexes", n)


@dataclass(frozen=True, slots=True)
class Lam:
    binder: int
    body: Term
    fv: frozenset = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    redexes: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.binder < 0:
            raise ValueError(f"binder must be a natural number, got {self.binder}")
        object.__setattr__(self, "fv", self.body.fv - {self.binder})
        object.__setattr__(self, "size", 1 + self.body.size)
        object.__setattr__(self, "redexes", self.body.redexes)


Term = Union[Var, App, Lam]


def free_in(x: int, m: Term) -> bool:
    return x in m.fv


def free_vars(m: Term) -> frozenset:
    return m.fv


def app_chain(head: Term, *args: Term) -> Term:
    """``head a1 a2 ... an`` associated to the left."""
    for a in args:
        head = App(head, a)
    return head


class Substitution:
    """Identity-almost-everywhere map from variables to terms.

    Only the finite support is stored; entries of the form ``x -> Var(x)``
    are dropped so that equal functions have equal representations.
    """

    __slots__ = ("_support", "_hash")

    def __init__(self, support: Mapping[int, Term] | Iterable[tuple[int, Term]] = ()):
        items = support.items() if isinstance(support, Mapping) else support
        self._support = {x: m for x, m in items if m != Var(x)}
        self._hash = None

    @property
    def support(self) -> Mapping[int, Term]:
        return MappingProxyType(self._support)

    def lookup(self, x: int) -> Term:
        m = self._support.get(x)
        return Var(x) if m is None else m

    __call__ = lookup

    def update(self, x: int, m: Term) -> Substitution:
        new = Substitution.__new__(Substitution)
        new._support = dict(self._support)
        new._hash = None
        if m == Var(x):
            new._support.pop(x, None)
        else:
            new._support[x] = m
        return new

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return self._support == other._support

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._support.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{x}: {m!r}" for x, m in sorted(self._support.items()))
        return f"Substitution({{{inner}}})"


IDENTITY = Substitution()


def ident_subst() -> Substitution:
    return IDENTITY


def update(s: Substitution, x: int, m: Term) -> Substitution:
    return s.update(x, m)


class Restriction(NamedTuple):
    """A substitution looked at only on the free variables of ``scope``."""

    subst: Substitution
    scope: Term


def _image_fv(s: Substitution, scope: Term) -> set:
    support = s._support
    out = set()
    for y in scope.fv:
        m = support.get(y)
        if m is None:
            out.add(y)
        else:
            out |= m.fv
    return out


def fresh_in_restriction(x: int, r: Restriction) -> bool:
    """True iff ``x`` is not free in ``subst(y)`` for any ``y`` free in ``scope``."""
    s, scope = r
    return all(not free_in(x, s.lookup(y)) for y in scope.fv)


def chi(r: Restriction) -> int:
    """Least natural number fresh for the restriction."""
    taken = _image_fv(r.subst, r.scope)
    v = 0
    while v in taken:
        v += 1
    return v


def apply_subst(m: Term, s: Substitution) -> Term:
    match m:
        case Var(x):
            return s.lookup(x)
        case App(f, a):
            return App(apply_subst(f, s), apply_subst(a, s))
        case Lam(x, body):
            y = chi(Restriction(s, m))
            return Lam(y, apply_subst(body, s.update(x, Var(y))))
    raise TypeError(f"not a term: {m!r}")


def single_subst(m: Term, x: int, n: Term) -> Term:
    """``m[x := n]``."""
    return apply_subst(m, IDENTITY.update(x, n))
