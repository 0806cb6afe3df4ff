"""Independent reference implementations used only by the tests.

Nothing here calls into the code under test except where a test compares
against its exact syntax (the library's single substitution fixes binder
names, so syntactic comparisons of contracta must share it).
"""

from __future__ import annotations

import random
from functools import lru_cache

from lamstd.terms import App, Lam, Var, single_subst

# ---------------------------------------------------------------------------
# nameless form: ("b", i) bound index, ("f", x) free name, ("l", body), ("a", f, a)


def to_nameless(m, env=()):
    if isinstance(m, Var):
        for i, name in enumerate(env):
            if name == m.index:
                return ("b", i)
        return ("f", m.index)
    if isinstance(m, App):
        return ("a", to_nameless(m.fun, env), to_nameless(m.arg, env))
    return ("l", to_nameless(m.body, (m.binder,) + env))


def alpha_oracle(a, b) -> bool:
    return to_nameless(a) == to_nameless(b)


def naive_fv(m) -> set:
    if isinstance(m, Var):
        return {m.index}
    if isinstance(m, App):
        return naive_fv(m.fun) | naive_fv(m.arg)
    return naive_fv(m.body) - {m.binder}


def naive_count(m) -> int:
    if isinstance(m, Var):
        return 0
    if isinstance(m, App):
        return naive_count(m.fun) + naive_count(m.arg) + (1 if isinstance(m.fun, Lam) else 0)
    return naive_count(m.body)


def _all_names(m) -> set:
    if isinstance(m, Var):
        return {m.index}
    if isinstance(m, App):
        return _all_names(m.fun) | _all_names(m.arg)
    return {m.binder} | _all_names(m.body)


def naive_subst(m, x, n):
    """Textbook capture-avoiding substitution; renames a binder only on clash."""
    if isinstance(m, Var):
        return n if m.index == x else m
    if isinstance(m, App):
        return App(naive_subst(m.fun, x, n), naive_subst(m.arg, x, n))
    y, body = m.binder, m.body
    if y == x or x not in naive_fv(body):
        return m
    if y not in naive_fv(n):
        return Lam(y, naive_subst(body, x, n))
    z = max(_all_names(body) | _all_names(n) | {x, y}) + 1
    return Lam(z, naive_subst(naive_subst(body, y, Var(z)), x, n))


def naive_multi_subst(m, s: dict):
    """Simultaneous substitution via fresh intermediate names."""
    names = set().union(_all_names(m), *(_all_names(v) for v in s.values()), s.keys())
    base = max(names, default=0) + 1
    tmp = {x: base + i for i, x in enumerate(sorted(s))}
    out = m
    for x, t in tmp.items():
        out = naive_subst(out, x, Var(t))
    for x, t in tmp.items():
        out = naive_subst(out, t, s[x])
    return out


# ---------------------------------------------------------------------------
# relational reading of the positional contraction rules


def beta_at_derivations(m) -> list:
    """All ``(n, N)`` derivable for ``m beta N @ n``, one per derivation."""
    out = []
    if isinstance(m, App):
        f, a = m.fun, m.arg
        if isinstance(f, Lam):
            out.append((0, single_subst(f.body, f.binder, a)))
        for n, b in beta_at_derivations(f):
            out.append((n + 1 if isinstance(f, Lam) else n, App(b, a)))
        shift = naive_count(f) + (1 if isinstance(f, Lam) else 0)
        for n, b in beta_at_derivations(a):
            out.append((n + shift, App(f, b)))
    elif isinstance(m, Lam):
        out.extend((n, Lam(m.binder, b)) for n, b in beta_at_derivations(m.body))
    return out


def compatible_closure_successors(m) -> set:
    """One-step beta as the compatible closure of contraction, no positions."""
    out = set()
    if isinstance(m, App):
        if isinstance(m.fun, Lam):
            out.add(single_subst(m.fun.body, m.fun.binder, m.arg))
        out |= {App(f, m.arg) for f in compatible_closure_successors(m.fun)}
        out |= {App(m.fun, a) for a in compatible_closure_successors(m.arg)}
    elif isinstance(m, Lam):
        out |= {Lam(m.binder, b) for b in compatible_closure_successors(m.body)}
    return out


# ---------------------------------------------------------------------------
# nameless replay: an unrelated route from a start term and index list to an end term


def _shift(t, d, cutoff=0):
    tag = t[0]
    if tag == "b":
        return ("b", t[1] + d) if t[1] >= cutoff else t
    if tag == "f":
        return t
    if tag == "l":
        return ("l", _shift(t[1], d, cutoff + 1))
    return ("a", _shift(t[1], d, cutoff), _shift(t[2], d, cutoff))


def _nsubst(t, j, s):
    tag = t[0]
    if tag == "b":
        return s if t[1] == j else t
    if tag == "f":
        return t
    if tag == "l":
        return ("l", _nsubst(t[1], j + 1, _shift(s, 1)))
    return ("a", _nsubst(t[1], j, s), _nsubst(t[2], j, s))


def _redex_paths(t, path=()):
    if t[0] == "a":
        if t[1][0] == "l":
            yield path
        yield from _redex_paths(t[1], path + (1,))
        yield from _redex_paths(t[2], path + (2,))
    elif t[0] == "l":
        yield from _redex_paths(t[1], path + (1,))


def _contract_path(t, path):
    if not path:
        body, arg = t[1][1], t[2]
        return _shift(_nsubst(body, 0, _shift(arg, 1)), -1)
    k = path[0]
    parts = list(t)
    parts[k] = _contract_path(t[k], path[1:])
    return tuple(parts)


def nameless_replay(start, indices):
    """Replay positional contractions in nameless form; None if an index is invalid."""
    t = to_nameless(start)
    for n in indices:
        paths = list(_redex_paths(t))
        if not 0 <= n < len(paths):
            return None
        t = _contract_path(t, paths[n])
    return t


# ---------------------------------------------------------------------------
# term enumeration and random generation

POOL = (0, 1, 2)


@lru_cache(maxsize=None)
def terms_of_size(size: int, pool: tuple = POOL) -> tuple:
    """All terms with exactly ``size`` nodes over the variable names in ``pool``."""
    if size < 1:
        return ()
    out = []
    if size == 1:
        out.extend(Var(x) for x in pool)
    else:
        out.extend(Lam(x, b) for x in pool for b in terms_of_size(size - 1, pool))
        for left in range(1, size - 1):
            for f in terms_of_size(left, pool):
                for a in terms_of_size(size - 1 - left, pool):
                    out.append(App(f, a))
    return tuple(out)


def terms_up_to(size: int, pool: tuple = POOL):
    for k in range(1, size + 1):
        yield from terms_of_size(k, pool)


def random_term(rng: random.Random, size: int, pool=range(4)):
    """Random term with exactly ``size`` nodes."""
    pool = list(pool)
    if size <= 1:
        return Var(rng.choice(pool))
    if size == 2 or rng.random() < 0.35:
        return Lam(rng.choice(pool), random_term(rng, size - 1, pool))
    left = rng.randint(1, size - 2)
    return App(random_term(rng, left, pool), random_term(rng, size - 1 - left, pool))


def random_subst(rng: random.Random, max_size=4, pool=range(4)) -> dict:
    pool = list(pool)
    keys = rng.sample(pool, rng.randint(0, len(pool)))
    return {x: random_term(rng, rng.randint(1, max_size), pool) for x in keys}


def random_chain(rng: random.Random, max_depth=5, pool=range(4)):
    """Application chain ``h a1 ... ak`` whose head is often an abstraction."""
    depth = rng.randint(1, max_depth)
    if rng.random() < 0.8:
        head = Lam(rng.choice(list(pool)), random_term(rng, rng.randint(1, 5), pool))
    else:
        head = random_term(rng, rng.randint(1, 4), pool)
    for _ in range(depth):
        head = App(head, random_term(rng, rng.randint(1, 4), pool))
    return head


def _outer_refs(t, k, env, frees):
    tag = t[0]
    if tag == "b":
        j = t[1] - k
        if j >= 1:
            frees.add(env[j - 1])
    elif tag == "f":
        frees.add(t[1])
    elif tag == "l":
        _outer_refs(t[1], k + 1, env, frees)
    else:
        _outer_refs(t[1], k, env, frees)
        _outer_refs(t[2], k, env, frees)


def _name(t, env, rng, pool):
    tag = t[0]
    if tag == "b":
        return Var(env[t[1]])
    if tag == "f":
        return Var(t[1])
    if tag == "a":
        return App(_name(t[1], env, rng, pool), _name(t[2], env, rng, pool))
    forbidden = set()
    _outer_refs(t[1], 0, env, forbidden)
    choices = [y for y in pool if y not in forbidden]
    if not choices:
        choices = [max(forbidden) + 1]
    y = rng.choice(choices)
    return Lam(y, _name(t[1], (y,) + env, rng, pool))


def alpha_variant(m, rng: random.Random, pool=range(6)):
    """Random binder renaming of ``m`` that is alpha-equivalent by construction."""
    return _name(to_nameless(m), (), rng, list(pool))
