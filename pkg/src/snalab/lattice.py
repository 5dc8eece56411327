"""Finite bounded distributive lattices.

Elements are dense indices ``0..n-1`` with display names.  The order,
meet and join tables are computed once at construction and stored as
read-only numpy arrays, so every operation afterwards is a table lookup.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import NotALattice, NotAPoset, NotBounded, NotDistributive, UnknownElement


def _frozen(a, dtype=None):
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


def _index_dtype(n):
    return np.int16 if n < 2**15 else np.int64


class FiniteLattice:
    """A finite bounded distributive lattice given by complete tables.

    Use :func:`build_lattice` (cover pairs) or :func:`lattice_from_order`
    (full order relation) rather than the constructor, which trusts its
    input.
    """

    def __init__(self, names, order, meet_table, join_table):
        self.names = tuple(str(x) for x in names)
        self.n = len(self.names)
        self.order = _frozen(order, bool)
        dt = _index_dtype(self.n)
        self.meet_table = _frozen(meet_table, dt)
        self.join_table = _frozen(join_table, dt)
        self._index = {name: i for i, name in enumerate(self.names)}
        if len(self._index) != self.n:
            raise ValueError("duplicate element names")
        # bottom is below everything, top above everything
        bots = np.flatnonzero(self.order.all(axis=1))
        tops = np.flatnonzero(self.order.all(axis=0))
        if len(bots) != 1 or len(tops) != 1:
            raise NotBounded("lattice has no bottom or no top")
        self.bottom = int(bots[0])
        self.top = int(tops[0])

    # -- element access -------------------------------------------------
    def index(self, x) -> int:
        """Resolve an element given by name (str) or index (int)."""
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if 0 <= x < self.n:
                return int(x)
            raise UnknownElement(f"no element with index {x}", witness=x)
        try:
            return self._index[str(x)]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}", witness=x) from None

    def name(self, x) -> str:
        return self.names[self.index(x)]

    def subset(self, xs: Iterable) -> frozenset:
        return frozenset(self.index(x) for x in xs)

    def names_of(self, xs: Iterable) -> list[str]:
        return [self.names[i] for i in sorted(xs)]

    # -- operations -----------------------------------------------------
    def meet(self, x, y) -> int:
        return int(self.meet_table[self.index(x), self.index(y)])

    def join(self, x, y) -> int:
        return int(self.join_table[self.index(x), self.index(y)])

    def leq(self, x, y) -> bool:
        return bool(self.order[self.index(x), self.index(y)])

    def meet_all(self, xs: Iterable) -> int:
        r = self.top
        for x in xs:
            r = int(self.meet_table[r, x])
        return r

    def join_all(self, xs: Iterable) -> int:
        r = self.bottom
        for x in xs:
            r = int(self.join_table[r, x])
        return r

    @property
    def is_trivial(self) -> bool:
        return self.n == 1

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        lt = self.order & ~np.eye(self.n, dtype=bool)
        ltv = lt.astype(np.int32)
        between = (ltv @ ltv) > 0
        return [tuple(map(int, p)) for p in np.argwhere(lt & ~between)]

    def heights(self) -> list[int]:
        """Length of the longest chain from the bottom to each element."""
        lower = [[] for _ in range(self.n)]
        for x, y in self.covers():
            lower[y].append(x)
        h = [0] * self.n
        # elements with fewer predecessors first: a linear extension
        for y in sorted(range(self.n), key=lambda e: int(self.order[:, e].sum())):
            h[y] = max((h[x] + 1 for x in lower[y]), default=0)
        return h

    def upset(self, x) -> frozenset:
        return frozenset(np.flatnonzero(self.order[self.index(x)]).tolist())

    def downset(self, x) -> frozenset:
        return frozenset(np.flatnonzero(self.order[:, self.index(x)]).tolist())

    def same_structure(self, other: "FiniteLattice") -> bool:
        return self.names == other.names and np.array_equal(self.order, other.order)

    def __repr__(self):
        return f"FiniteLattice({list(self.names)})"


def build_lattice(names: Sequence, covers: Iterable[tuple]) -> FiniteLattice:
    """Build a lattice from element names and Hasse-diagram cover pairs.

    ``covers`` holds pairs ``(lower, upper)``; the order is their
    reflexive-transitive closure.  Raises ``NotAPoset`` on a cycle,
    ``NotALattice`` when some pair lacks a meet or join and
    ``NotDistributive`` on a failing triple.
    """
    names = [str(x) for x in names]
    if not names:
        raise NotBounded("a lattice needs at least one element")
    index = {}
    for i, x in enumerate(names):
        if x in index:
            raise ValueError(f"duplicate element name {x!r}")
        index[x] = i
    n = len(names)
    rel = np.eye(n, dtype=bool)
    for pair in covers:
        a, b = (str(p) for p in pair)
        for x in (a, b):
            if x not in index:
                raise UnknownElement(f"cover ({a}, {b}) mentions unknown element {x!r}", witness=x)
        rel[index[a], index[b]] = True
        if a == b:
            raise NotAPoset(f"cover ({a}, {a}) is a loop", witness=(a, a))
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    return lattice_from_order(names, rel)


def lattice_from_order(names: Sequence, order) -> FiniteLattice:
    """Build a lattice from a full (already transitive) order relation."""
    names = [str(x) for x in names]
    order = np.asarray(order, dtype=bool)
    n = len(names)
    if order.shape != (n, n):
        raise ValueError("order relation has the wrong shape")
    if not order.diagonal().all():
        raise NotAPoset("order is not reflexive")
    both = order & order.T & ~np.eye(n, dtype=bool)
    if both.any():
        i, j = np.argwhere(both)[0]
        raise NotAPoset(f"{names[i]} and {names[j]} lie on a cycle", witness=(names[i], names[j]))
    trans = (order.astype(np.int32) @ order.astype(np.int32)) > 0
    if (trans & ~order).any():
        raise NotAPoset("order relation is not transitive")

    meet = _bound_table(order, names, "meet")
    join = _bound_table(order.T, names, "join")
    L = FiniteLattice(names, order, meet, join)
    _check_distributive(L)
    return L


def _bound_table(order, names, what):
    """Greatest lower bounds w.r.t. ``order`` (pass ``order.T`` for joins)."""
    # lb[x, y, c]: c is below both x and y
    lb = order.T[:, None, :] & order.T[None, :, :]
    size = order.sum(axis=0)  # number of elements below c
    cand = np.where(lb, size[None, None, :], -1).argmax(axis=2)
    below_cand = order.T[cand]  # [x, y, d] = order[d, cand[x, y]]
    ok = lb.any(axis=2) & np.all(~lb | below_cand, axis=2)
    if not ok.all():
        x, y = np.argwhere(~ok)[0]
        raise NotALattice(
            f"{names[x]} and {names[y]} have no {what}", witness=(names[x], names[y])
        )
    return cand


def _check_distributive(L: FiniteLattice):
    n = L.n
    x, y, z = np.ix_(range(n), range(n), range(n))
    m, j = L.meet_table, L.join_table
    bad = m[x, j[y, z]] != j[m[x, y], m[x, z]]
    if bad.any():
        w = tuple(L.names[i] for i in np.argwhere(bad)[0])
        raise NotDistributive(f"x^(y v z) != (x^y) v (x^z) at {w}", witness=w)


def meet(L: FiniteLattice, x, y) -> int:
    return L.meet(x, y)


def join(L: FiniteLattice, x, y) -> int:
    return L.join(x, y)


def leq(L: FiniteLattice, x, y) -> bool:
    return L.leq(x, y)


def is_chain(L: FiniteLattice) -> bool:
    return bool((L.order | L.order.T).all())


def is_sublattice(L: FiniteLattice, S: Iterable) -> bool:
    return sublattice_violation(L, S) is None


def sublattice_violation(L: FiniteLattice, S: Iterable):
    """First reason ``S`` is not a bounded sublattice, or None."""
    S = L.subset(S)
    if L.bottom not in S:
        return ("bottom", L.names[L.bottom])
    if L.top not in S:
        return ("top", L.names[L.top])
    for x in sorted(S):
        for y in sorted(S):
            if int(L.meet_table[x, y]) not in S:
                return ("meet", L.names[x], L.names[y])
            if int(L.join_table[x, y]) not in S:
                return ("join", L.names[x], L.names[y])
    return None


def chain(k: int, names: Sequence | None = None) -> FiniteLattice:
    """The ``k``-element chain; default names ``0, c1, ..., 1``."""
    if names is None:
        names = ["0"] + [f"c{i}" for i in range(1, k - 1)] + (["1"] if k > 1 else [])
    return build_lattice(names, [(names[i], names[i + 1]) for i in range(k - 1)])


def product_lattice(A: FiniteLattice, B: FiniteLattice, sep: str = "|") -> FiniteLattice:
    names = [f"<{a}{sep}{b}>" for a in A.names for b in B.names]
    order = np.kron(A.order.astype(np.int8), B.order.astype(np.int8)).astype(bool)
    return lattice_from_order(names, order)
