"""Subresiduated lattices ``(A, D)``.

``D`` is a bounded sublattice of a finite distributive lattice ``A`` and
``a -> b`` is the largest ``d`` in ``D`` with ``a ^ d <= b``.  The derived
unary tables are ``box a = 1 -> a`` and ``not a = a -> 0``.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import NoMaximum, NotASublattice, VerificationError
from .lattice import FiniteLattice, _frozen, sublattice_violation
from .verdict import Law, Verdict, check_laws, implies


class Srl:
    """An sr-lattice.  The constructor does not validate; use :func:`make_srl`
    or :func:`srl_from_table`."""

    def __init__(self, lattice: FiniteLattice, d_set: Iterable[int], imp_table, name: str | None = None):
        self.lattice = lattice
        self.d_set = frozenset(int(d) for d in d_set)
        self.imp_table = _frozen(imp_table, lattice.meet_table.dtype)
        self.box_table = _frozen(self.imp_table[lattice.top, :])
        self.not_table = _frozen(self.imp_table[:, lattice.bottom])
        self.name = name

    # lattice passthrough
    @property
    def n(self):
        return self.lattice.n

    @property
    def names(self):
        return self.lattice.names

    @property
    def meet_table(self):
        return self.lattice.meet_table

    @property
    def join_table(self):
        return self.lattice.join_table

    @property
    def order(self):
        return self.lattice.order

    @property
    def top(self):
        return self.lattice.top

    @property
    def bottom(self):
        return self.lattice.bottom

    def index(self, x) -> int:
        return self.lattice.index(x)

    def meet(self, a, b) -> int:
        return self.lattice.meet(a, b)

    def join(self, a, b) -> int:
        return self.lattice.join(a, b)

    def leq(self, a, b) -> bool:
        return self.lattice.leq(a, b)

    def implies(self, a, b) -> int:
        return int(self.imp_table[self.index(a), self.index(b)])

    def box(self, a) -> int:
        return int(self.box_table[self.index(a)])

    def neg(self, a) -> int:
        return int(self.not_table[self.index(a)])

    def signature(self):
        return ([self.meet_table, self.join_table, self.imp_table], [], [self.bottom, self.top])

    @property
    def is_heyting(self) -> bool:
        return len(self.d_set) == self.n

    def __repr__(self):
        label = self.name or "Srl"
        return f"<{label}: {list(self.names)}, D={self.lattice.names_of(self.d_set)}>"


def make_srl(L: FiniteLattice, D: Iterable, name: str | None = None) -> Srl:
    """Synthesise the implication of ``(L, D)``."""
    D = L.subset(D)
    bad = sublattice_violation(L, D)
    if bad is not None:
        raise NotASublattice(f"D is not a bounded sublattice: {bad}", witness=bad)
    n = L.n
    dmask = np.zeros(n, dtype=bool)
    dmask[list(D)] = True
    a, b, d = np.ix_(range(n), range(n), range(n))
    # ok[a, b, d]: d in D and a ^ d <= b
    ok = dmask[d] & L.order[L.meet_table[a, d], b]
    size = L.order.sum(axis=0)
    best = np.where(ok, size[None, None, :], -1).argmax(axis=2)
    below = L.order.T[best]  # [a, b, d] = d <= best[a, b]
    is_max = ok.any(axis=2) & np.all(~ok | below, axis=2)
    if not is_max.all():
        x, y = np.argwhere(~is_max)[0]
        w = (L.names[x], L.names[y])
        raise NoMaximum(f"{{d in D : {w[0]} ^ d <= {w[1]}}} has no maximum", witness=w)
    S = Srl(L, D, best, name)
    _check_d_characterisations(S)
    return S


def srl_from_table(L: FiniteLattice, imp_table, name: str | None = None) -> Srl:
    """An Srl given by its implication table; ``D`` is read off as the
    fixed points of ``box`` and the table is checked against synthesis."""
    imp_table = np.asarray(imp_table)
    D = {a for a in range(L.n) if int(imp_table[L.top, a]) == a}
    S = make_srl(L, D, name)
    if not np.array_equal(S.imp_table, imp_table):
        a, b = np.argwhere(S.imp_table != imp_table)[0]
        raise VerificationError(
            f"table gives {L.names[a]}->{L.names[b]} = {L.names[imp_table[a, b]]}, "
            f"but the maximum over D is {L.names[S.imp_table[a, b]]}",
            witness=(L.names[a], L.names[b]),
        )
    return S


def _check_d_characterisations(S: Srl):
    fixed = {a for a in range(S.n) if int(S.box_table[a]) == a}
    image = {int(v) for v in S.box_table}
    if not (fixed == image == set(S.d_set)):
        raise VerificationError("D differs from the fixed points or the image of box")


# ---------------------------------------------------------------- axioms

SRL_LAWS = (
    Law("srl1", "(a v b) -> c = (a -> c) ^ (b -> c)", ("a", "b", "c"),
        lambda o, a, b, c: o.i[o.j[a, b], c] == o.m[o.i[a, c], o.i[b, c]]),
    Law("srl2", "c -> (a ^ b) = (c -> a) ^ (c -> b)", ("a", "b", "c"),
        lambda o, a, b, c: o.i[c, o.m[a, b]] == o.m[o.i[c, a], o.i[c, b]]),
    Law("srl3", "(a -> b) ^ (b -> c) <= a -> c", ("a", "b", "c"),
        lambda o, a, b, c: o.le[o.m[o.i[a, b], o.i[b, c]], o.i[a, c]]),
    Law("srl4", "a -> a = 1", ("a",),
        lambda o, a: o.i[a, a] == o.one),
    Law("srl5", "a ^ (a -> b) <= b", ("a", "b"),
        lambda o, a, b: o.le[o.m[a, o.i[a, b]], b]),
    Law("srl6", "a -> b <= c -> (a -> b)", ("a", "b", "c"),
        lambda o, a, b, c: o.le[o.i[a, b], o.i[c, o.i[a, b]]]),
    Law("quasi", "a <= b -> c implies a ^ b <= c", ("a", "b", "c"),
        lambda o, a, b, c: implies(o.le[a, o.i[b, c]], o.le[o.m[a, b], c])),
)


def _box(o, a):
    return o.i[o.one, a]


SRL_PROPERTY_LAWS = (
    Law("self_distrib", "a -> (b -> c) <= (a -> b) -> (a -> c)", ("a", "b", "c"),
        lambda o, a, b, c: o.le[o.i[a, o.i[b, c]], o.i[o.i[a, b], o.i[a, c]]]),
    Law("box_exchange", "box a -> (box b -> c) = box b -> (box a -> c)", ("a", "b", "c"),
        lambda o, a, b, c: o.i[_box(o, a), o.i[_box(o, b), c]] == o.i[_box(o, b), o.i[_box(o, a), c]]),
    Law("box_meet", "box b <= a -> (a ^ b)", ("a", "b"),
        lambda o, a, b: o.le[_box(o, b), o.i[a, o.m[a, b]]]),
    Law("monotone_right", "a <= b implies c -> a <= c -> b", ("a", "b", "c"),
        lambda o, a, b, c: implies(o.le[a, b], o.le[o.i[c, a], o.i[c, b]])),
    Law("antitone_left", "a <= b implies b -> c <= a -> c", ("a", "b", "c"),
        lambda o, a, b, c: implies(o.le[a, b], o.le[o.i[b, c], o.i[a, c]])),
    Law("box_deflationary", "box a <= a", ("a",), lambda o, a: o.le[_box(o, a), a]),
    Law("box_idempotent", "box box a = box a", ("a",), lambda o, a: _box(o, _box(o, a)) == _box(o, a)),
    Law("box_top", "box 1 = 1", (), lambda o: _box(o, o.one) == o.one),
)


def verify_srl(S: Srl, full_report: bool = False) -> Verdict:
    """Check the six defining conditions and the quasi-identity.

    Every failing law is listed with its least witness; ``full_report``
    also collects every failing tuple.
    """
    return check_laws("srl", S, SRL_LAWS, full_report)


def srl_properties(S: Srl, full_report: bool = False) -> Verdict:
    return check_laws("srl-properties", S, SRL_PROPERTY_LAWS, full_report)


# ---------------------------------------------------------------- dense elements, filters


def dense_elements(S: Srl) -> frozenset:
    """``{a : not a = 0}``, cross-checked against ``{a v not a}``."""
    dense = frozenset(a for a in range(S.n) if int(S.not_table[a]) == S.bottom)
    joins = frozenset(int(S.join_table[a, S.not_table[a]]) for a in range(S.n))
    if dense != joins:
        raise VerificationError(
            f"dense elements {S.lattice.names_of(dense)} differ from a v not a: {S.lattice.names_of(joins)}"
        )
    return dense


def upsets(L: FiniteLattice) -> list[frozenset]:
    """All up-closed subsets, one per antichain (the empty antichain gives {})."""
    n = L.n
    order = L.order.tolist()
    comparable = [[order[x][y] or order[y][x] for y in range(n)] for x in range(n)]
    up = [frozenset(y for y in range(n) if order[x][y]) for x in range(n)]
    out = []

    def rec(start, chosen):
        out.append(frozenset().union(*(up[c] for c in chosen)) if chosen else frozenset())
        for x in range(start, n):
            if not any(comparable[x][c] for c in chosen):
                rec(x + 1, chosen + [x])

    rec(0, [])
    return out


def is_filter(L: FiniteLattice, F: frozenset) -> bool:
    if L.top not in F:
        return False
    for x in F:
        if not L.upset(x) <= F:
            return False
        for y in F:
            if int(L.meet_table[x, y]) not in F:
                return False
    return True


def is_open_filter(S: Srl, F: frozenset) -> bool:
    return is_filter(S.lattice, F) and all(int(S.box_table[x]) in F for x in F)


def _sort_subsets(subsets):
    return sorted(subsets, key=lambda s: (len(s), sorted(s)))


def filters(L: FiniteLattice) -> list[frozenset]:
    return _sort_subsets(F for F in upsets(L) if is_filter(L, F))


def open_filters(S: Srl) -> list[frozenset]:
    return _sort_subsets(F for F in upsets(S.lattice) if is_open_filter(S, F))


def subresiduated_filters(S: Srl) -> list[frozenset]:
    dense = dense_elements(S)
    return [F for F in open_filters(S) if dense <= F]


# ---------------------------------------------------------------- homomorphisms


def is_srl_hom(A: Srl, B: Srl, f) -> bool:
    from .tables import is_homomorphism

    return is_homomorphism(A, B, f)
