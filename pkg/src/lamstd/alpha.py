"""Decision procedure for alpha-equivalence.

Two abstractions are compared by renaming both binders to a common name
``y`` chosen by :func:`~lamstd.terms.chi` over both abstractions, then
comparing the renamed bodies.  Renaming is done with the same multiple
substitution used everywhere else, so every inner binder gets renamed too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolated
from .terms import IDENTITY, App, Lam, Restriction, Term, Var, apply_subst, chi


@dataclass(frozen=True)
class AlphaVerdict:
    equivalent: bool
    witness_fresh_var: int | None = None

    def __bool__(self):
        return self.equivalent


def _common_fresh(a: Lam, b: Lam) -> int:
    return chi(Restriction(IDENTITY, App(a, b)))


def _alpha(a: Term, b: Term) -> bool:
    # Renaming preserves size, so recursion on the renamed bodies terminates.
    while True:
        if a.size != b.size or a.fv != b.fv:
            return False
        match a, b:
            case Var(x), Var(y):
                return x == y
            case App(f, s), App(g, t):
                if not _alpha(f, g):
                    return False
                a, b = s, t
            case Lam(x, m), Lam(x2, m2):
                if a == b:
                    return True
                y = _common_fresh(a, b)
                a = apply_subst(m, IDENTITY.update(x, Var(y)))
                b = apply_subst(m2, IDENTITY.update(x2, Var(y)))
            case _:
                return False


def alpha_eq(a: Term, b: Term) -> AlphaVerdict:
    if not _alpha(a, b):
        return AlphaVerdict(False)
    if isinstance(a, Lam) and isinstance(b, Lam):
        return AlphaVerdict(True, _common_fresh(a, b))
    return AlphaVerdict(True)


def _require_alpha(a: Term, b: Term) -> None:
    if not _alpha(a, b):
        raise PreconditionViolated("terms are not alpha-equivalent")


def subst_collapses(a: Term, b: Term, s) -> bool:
    """Alpha-equivalent terms have syntactically equal substitution images."""
    _require_alpha(a, b)
    return apply_subst(a, s) == apply_subst(b, s)


def same_redex_count(a: Term, b: Term) -> bool:
    _require_alpha(a, b)
    return a.redexes == b.redexes
