r"""Textual syntax for terms.

    Term ::= Lam | App
    Lam  ::= ("\" | "λ") VarTok "." Term
    App  ::= Atom { Atom }
    Atom ::= VarTok | "(" Term ")"
    VarTok ::= "x" digits

Application is left-associative and a lambda extends as far right as
possible.  The printer emits the fewest parentheses that parse back to the
same term, and always uses a backslash for lambda.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .terms import App, Lam, Term, Var

_TOKEN = re.compile(r"\s*(?:(?P<lam>\\|λ)|(?P<var>x\d+)|(?P<dot>\.)|(?P<lp>\()|(?P<rp>\))|(?P<end>\Z))")

_NAMES = {
    "lam": "lambda",
    "var": "variable",
    "dot": "'.'",
    "lp": "'('",
    "rp": "')'",
    "end": "end of input",
}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        if kind == "end":
            return tokens
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, *kinds: str, also: tuple[str, ...] = ()) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] not in kinds:
            expected = frozenset(_NAMES[k] for k in kinds + also)
            raise ParseError(f"unexpected {_NAMES[tok[0]]}", tok[2], expected)
        self.i += 1
        return tok

    def term(self) -> Term:
        if self.peek() == "lam":
            self.take("lam")
            binder = int(self.take("var")[1][1:])
            self.take("dot")
            return Lam(binder, self.term())
        m = self.atom()
        while self.peek() in ("var", "lp"):
            m = App(m, self.atom())
        return m

    def atom(self) -> Term:
        kind, text, _ = self.take("var", "lp")
        if kind == "var":
            return Var(int(text[1:]))
        m = self.term()
        # an application could also have continued here
        self.take("rp", also=("var", "lp"))
        return m


def parse_term(text: str) -> Term:
    p = _Parser(text)
    if p.peek() not in ("lam", "var", "lp"):
        kind, _, pos = p.tokens[p.i]
        raise ParseError(f"unexpected {_NAMES[kind]}", pos,
                         frozenset({_NAMES["lam"], _NAMES["var"], _NAMES["lp"]}))
    m = p.term()
    kind, _, pos = p.tokens[p.i]
    if kind != "end":
        expected = {_NAMES["end"], _NAMES["var"], _NAMES["lp"]}
        raise ParseError(f"unexpected {_NAMES[kind]}", pos, frozenset(expected))
    return m


def print_term(m: Term) -> str:
    match m:
        case Var(x):
            return f"x{x}"
        case Lam(x, body):
            return f"\\x{x}. {print_term(body)}"
        case App(f, a):
            left = print_term(f)
            if isinstance(f, Lam):
                left = f"({left})"
            right = print_term(a)
            if not isinstance(a, Var):
                right = f"({right})"
            return f"{left} {right}"
    raise TypeError(f"not a term: {m!r}")
