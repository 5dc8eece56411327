"""Monoid and residual operations on twists.

On pairs over an sr-lattice put

    (a,b) * (c,d)  = (a ^ c, (a -> d) ^ (c -> b))
    (a,b) -> (c,d) = ((a -> c) ^ (d -> b), a ^ d)

Over a Heyting algebra these make the twist a Nelson lattice, and the weak
implication is recovered as ``x^2 -> y``.  Over a general sr-lattice this
module only measures which of those laws survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .errors import NotATwist, VerificationError
from .srl import Srl, verify_srl
from .twist import TwistAlgebra
from .verdict import Law, Verdict, check_laws


@dataclass
class ResiduatedView:
    base: TwistAlgebra
    star_table: np.ndarray
    rarrow_table: np.ndarray

    # enough of the algebra interface for exhaustive law checks
    n = property(lambda self: self.base.n)
    names = property(lambda self: self.base.names)
    meet_table = property(lambda self: self.base.meet_table)
    join_table = property(lambda self: self.base.join_table)
    order = property(lambda self: self.base.order)
    top = property(lambda self: self.base.top)
    bottom = property(lambda self: self.base.bottom)
    neg_table = property(lambda self: self.base.neg_table)

    @property
    def imp_table(self):
        return self.rarrow_table

    def index(self, x):
        return self.base.index(x)

    def star(self, x, y) -> int:
        return int(self.star_table[self.index(x), self.index(y)])

    def rarrow(self, x, y) -> int:
        return int(self.rarrow_table[self.index(x), self.index(y)])


def residuated_view(K: TwistAlgebra) -> ResiduatedView:
    if not isinstance(K, TwistAlgebra):
        raise NotATwist("the residuated view needs a twist algebra built from an sr-lattice")
    S = K.source
    m, i = np.asarray(S.meet_table), np.asarray(S.imp_table)
    A = np.array([p[0] for p in K.pairs])
    B = np.array([p[1] for p in K.pairs])
    a, c = A[:, None], A[None, :]
    b, d = B[:, None], B[None, :]

    def lookup(first, second, what):
        first, second = np.broadcast_arrays(first, second)
        out = np.empty(first.shape, dtype=np.int64)
        for idx in np.ndindex(first.shape):
            key = (int(first[idx]), int(second[idx]))
            if key not in K._pos:
                raise VerificationError(f"{what} leaves the carrier at {K.names[idx[0]]}, {K.names[idx[1]]}",
                                        witness=(K.names[idx[0]], K.names[idx[1]]))
            out[idx] = K._pos[key]
        return out

    star = lookup(m[a, c], m[i[a, d], i[c, b]], "*")
    rarrow = lookup(m[i[a, c], i[d, b]], m[a, d], "->")
    return ResiduatedView(K, star, rarrow)


def nelson_lattice_laws(V: ResiduatedView) -> list[Law]:
    s = np.asarray(V.star_table)

    def sq(x):
        return s[x, x]

    def neg(o, x):
        return o.i[x, o.zero]

    return [
        Law("star_commutative", "x * y = y * x", ("x", "y"), lambda o, x, y: s[x, y] == s[y, x]),
        Law("star_associative", "(x * y) * z = x * (y * z)", ("x", "y", "z"),
            lambda o, x, y, z: s[s[x, y], z] == s[x, s[y, z]]),
        Law("star_unit", "1 * x = x", ("x",), lambda o, x: s[o.one, x] == x),
        Law("residuation", "x * y <= z iff x <= y -> z", ("x", "y", "z"),
            lambda o, x, y, z: o.le[s[x, y], z] == o.le[x, o.i[y, z]]),
        Law("involutive", "not not x = x, not x := x -> 0", ("x",), lambda o, x: neg(o, neg(o, x)) == x),
        Law("nelson", "(x^2 -> y) ^ ((not y)^2 -> not x) <= x -> y", ("x", "y"),
            lambda o, x, y: o.le[o.m[o.i[sq(x), y], o.i[sq(neg(o, y)), neg(o, x)]], o.i[x, y]]),
    ]


def verify_nelson_lattice(V: ResiduatedView, full_report: bool = False) -> Verdict:
    """Which Nelson-lattice laws hold in the view; descriptive, never assumed."""
    return check_laws("nelson-lattice", V, nelson_lattice_laws(V), full_report)


def translation_laws(V: ResiduatedView) -> list[Law]:
    s = np.asarray(V.star_table)
    weak = np.asarray(V.base.imp_table)
    return [
        Law("negation_is_arrow_to_0", "~x = x -> 0", ("x",), lambda o, x: o.n[x] == o.i[x, o.zero]),
        Law("weak_from_square", "x => y = x^2 -> y", ("x", "y"), lambda o, x, y: weak[x, y] == o.i[s[x, x], y]),
    ]


def verify_translation(V: ResiduatedView, full_report: bool = False) -> Verdict:
    """Whether ``~`` and the weak implication are recovered from ``*`` and ``->``."""
    return check_laws("translation", V, translation_laws(V), full_report)


@dataclass
class GapResult:
    found: bool
    witness: dict | None = None
    count: int = 0

    def lines(self) -> list[str]:
        if not self.found:
            return ["translation gap: none"]
        w = self.witness
        return [
            f"translation gap: a={w['a']}, b={w['b']}, c={w['c']}, d={w['d']}",
            f"  a -> c = {w['a -> c']} is not below d -> (a -> b) = {w['d -> (a -> b)']}",
            f"  {self.count} gap tuples in total",
        ]


def gap_at(S: Srl, a, b, c, d) -> bool:
    a, b, c, d = (S.index(v) for v in (a, b, c, d))
    i, m = np.asarray(S.imp_table), np.asarray(S.meet_table)
    if m[a, b] != S.bottom or m[c, d] != S.bottom:
        return False
    return not bool(S.order[i[a, c], i[d, i[a, b]]])


def term_translation_gap(S: Srl) -> GapResult:
    """Least ``(a, b, c, d)`` with ``a ^ b = c ^ d = 0`` and
    ``a -> c`` not below ``d -> (a -> b)``."""
    v = verify_srl(S)
    if not v.ok:
        raise VerificationError(f"not an sr-lattice: {v.failures[0]}")
    hits = [t for t in iproduct(range(S.n), repeat=4) if gap_at(S, *t)]
    if not hits:
        return GapResult(False)
    a, b, c, d = hits[0]
    i = S.imp_table
    w = {"a": S.names[a], "b": S.names[b], "c": S.names[c], "d": S.names[d],
         "a -> c": S.names[int(i[a, c])], "d -> (a -> b)": S.names[int(i[d, i[a, b]])]}
    return GapResult(True, w, len(hits))
