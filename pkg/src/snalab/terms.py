"""Terms over the signature ``^ v -> ~ 0 1`` plus ``box t := 1 -> t``.

Terms are built with Python operators (``x & y`` meet, ``x | y`` join,
``x >> y`` implication, ``~x`` negation) or parsed from text::

    box(x v y) = box(x) v box(y)
    ~(x -> y) -> (x ^ ~y)

In text, ``v`` is join when it follows an operand and the variable ``v``
otherwise.  Evaluation works on single elements and on numpy index grids
alike, which is how identities are checked exhaustively.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import TermSyntaxError, UnboundVariable
from .verdict import Law, Verdict, check_laws

VARIABLES = ("x", "y", "z", "w", "v")


@dataclass(frozen=True)
class Term:
    op: str
    args: tuple = ()
    name: str | None = None

    def __and__(self, other):
        return Term("meet", (self, other))

    def __or__(self, other):
        return Term("join", (self, other))

    def __rshift__(self, other):
        return Term("imp", (self, other))

    def __invert__(self):
        return Term("neg", (self,))

    def variables(self) -> list[str]:
        out: list[str] = []
        self._collect(out)
        return out

    def _collect(self, out):
        if self.op == "var":
            if self.name not in out:
                out.append(self.name)
        for a in self.args:
            a._collect(out)

    def __str__(self):
        if self.op == "var":
            return self.name
        if self.op in ("0", "1"):
            return self.op
        if self.op == "neg":
            return f"~{_wrap(self.args[0])}"
        if self.op == "box":
            return f"box({self.args[0]})"
        sym = {"meet": "^", "join": "v", "imp": "->"}[self.op]
        return f"{_wrap(self.args[0])} {sym} {_wrap(self.args[1])}"


def _wrap(t: Term) -> str:
    return str(t) if t.op in ("var", "0", "1", "neg", "box") else f"({t})"


def var(name: str) -> Term:
    return Term("var", name=name)


ZERO = Term("0")
ONE = Term("1")


def box(t: Term) -> Term:
    return Term("box", (t,))


x, y, z, w = (var(n) for n in "xyzw")


def s_term(a: Term, b: Term) -> Term:
    """``(a -> b) ^ (b -> a) ^ (~a -> ~b) ^ (~b -> ~a)``."""
    return (a >> b) & (b >> a) & (~a >> ~b) & (~b >> ~a)


def t_term(a: Term, b: Term) -> Term:
    """``((a -> b) ^ (~b -> ~a)) v ((b -> a) ^ (~a -> ~b))``."""
    return ((a >> b) & (~b >> ~a)) | ((b >> a) & (~a >> ~b))


# ---------------------------------------------------------------- evaluation


def evaluate(term: Term, ops, env: dict):
    """Evaluate over a :func:`snalab.verdict.tables` namespace; ``env`` values
    may be ints or broadcastable index arrays."""
    op = term.op
    if op == "var":
        try:
            return env[term.name]
        except KeyError:
            raise UnboundVariable(f"variable {term.name!r} is not assigned", witness=term.name) from None
    if op == "0":
        return ops.zero
    if op == "1":
        return ops.one
    if op == "neg":
        if ops.n is None:
            raise TermSyntaxError("negation ~ is not in this algebra's signature")
        return ops.n[evaluate(term.args[0], ops, env)]
    if op == "box":
        return ops.i[ops.one, evaluate(term.args[0], ops, env)]
    a = evaluate(term.args[0], ops, env)
    b = evaluate(term.args[1], ops, env)
    table = {"meet": ops.m, "join": ops.j, "imp": ops.i}[op]
    return table[a, b]


def eval_term(A, term: Term | str, assignment: dict) -> int:
    """Value of ``term`` in ``A`` under ``assignment`` (variable -> element)."""
    from .verdict import tables

    if isinstance(term, str):
        term = parse_term(term)
    env = {k: A.index(v) for k, v in assignment.items()}
    return int(evaluate(term, tables(A), env))


def satisfies_identity(A, lhs: Term | str, rhs: Term | str, full_report: bool = False,
                       label: str = "identity") -> Verdict:
    """Check ``lhs = rhs`` under every assignment; failures carry the least one."""
    if isinstance(lhs, str):
        lhs = parse_term(lhs)
    if isinstance(rhs, str):
        rhs = parse_term(rhs)
    names = lhs.variables()
    names += [v for v in rhs.variables() if v not in names]

    def holds(o, *grids):
        env = dict(zip(names, grids))
        return np.asarray(evaluate(lhs, o, env)) == np.asarray(evaluate(rhs, o, env))

    law = Law(label, f"{lhs} = {rhs}", tuple(names), holds)
    return check_laws(label, A, [law], full_report)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(->|→|[()\^∧∨~∼,=]|□|box|[A-Za-z_][A-Za-z0-9_]*|[01])")


def _tokens(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}", witness=pos)
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    # binding powers; -> is right associative
    INFIX = {"->": (1, 0), "→": (1, 0), "v": (3, 4), "∨": (3, 4), "^": (5, 6), "∧": (5, 6)}

    def __init__(self, text):
        self.toks = _tokens(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise TermSyntaxError(f"expected {expected or 'a token'}, found {tok!r}")
        self.pos += 1
        return tok

    def expr(self, min_bp=0):
        left = self.prefix()
        while True:
            tok = self.peek()
            if tok not in self.INFIX:
                break
            lbp, rbp = self.INFIX[tok]
            if lbp < min_bp:
                break
            self.take()
            right = self.expr(rbp + 1 if tok in ("v", "∨", "^", "∧") else rbp)
            op = {"->": "imp", "→": "imp", "v": "join", "∨": "join", "^": "meet", "∧": "meet"}[tok]
            left = Term(op, (left, right))
        return left

    def prefix(self):
        tok = self.take()
        if tok in ("~", "∼"):
            return Term("neg", (self.prefix(),))
        if tok in ("box", "□"):
            if self.peek() == "(":
                self.take("(")
                t = self.expr()
                self.take(")")
                return box(t)
            return box(self.prefix())
        if tok in ("s", "t") and self.peek() == "(":
            self.take("(")
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take(")")
            return s_term(a, b) if tok == "s" else t_term(a, b)
        if tok == "(":
            t = self.expr()
            self.take(")")
            return t
        if tok == "0":
            return ZERO
        if tok == "1":
            return ONE
        if tok in VARIABLES:
            return var(tok)
        raise TermSyntaxError(f"unexpected token {tok!r}")


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.expr()
    if p.peek() is not None:
        raise TermSyntaxError(f"trailing input at token {p.peek()!r}")
    return t


def parse_identity(text: str) -> tuple[Term, Term]:
    if text.count("=") != 1:
        raise TermSyntaxError("an identity needs exactly one '='")
    lhs, rhs = text.split("=")
    return parse_term(lhs), parse_term(rhs)
