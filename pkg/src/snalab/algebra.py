"""Finite algebras ``(T, ^, v, ->, ~, 0, 1)`` given by operation tables.

:class:`SnaAlgebra` holds a distributive lattice plus implication and
negation tables.  The verification suites (Kleene, Nelson, SNA, derived
properties) are exhaustive over all assignments and report the least
failing tuple for every failing law.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import tables as tb
from .errors import MultipleFixedPoints, NotACongruence, NotASubalgebra, PreconditionFailed
from .lattice import FiniteLattice, _frozen, build_lattice, lattice_from_order
from .verdict import Law, Verdict, check_laws, implies


class SnaAlgebra:
    """An algebra of the Nelson signature.  Not validated on construction
    beyond table shapes; run the ``verify_*`` suites."""

    def __init__(self, lattice: FiniteLattice, imp_table, neg_table, name: str | None = None):
        n = lattice.n
        imp = np.asarray(imp_table)
        neg = np.asarray(neg_table)
        if imp.shape != (n, n) or neg.shape != (n,):
            raise ValueError("operation tables do not match the number of elements")
        if n and (imp.min() < 0 or imp.max() >= n or neg.min() < 0 or neg.max() >= n):
            raise ValueError("operation table value out of range")
        self.lattice = lattice
        self.imp_table = _frozen(imp, lattice.meet_table.dtype)
        self.neg_table = _frozen(neg, lattice.meet_table.dtype)
        self.name = name

    n = property(lambda self: self.lattice.n)
    names = property(lambda self: self.lattice.names)
    meet_table = property(lambda self: self.lattice.meet_table)
    join_table = property(lambda self: self.lattice.join_table)
    order = property(lambda self: self.lattice.order)
    top = property(lambda self: self.lattice.top)
    bottom = property(lambda self: self.lattice.bottom)

    def index(self, x) -> int:
        return self.lattice.index(x)

    def meet(self, x, y) -> int:
        return self.lattice.meet(x, y)

    def join(self, x, y) -> int:
        return self.lattice.join(x, y)

    def leq(self, x, y) -> bool:
        return self.lattice.leq(x, y)

    def implies(self, x, y) -> int:
        return int(self.imp_table[self.index(x), self.index(y)])

    def neg(self, x) -> int:
        return int(self.neg_table[self.index(x)])

    def box(self, x) -> int:
        return int(self.imp_table[self.top, self.index(x)])

    @cached_property
    def box_table(self):
        return _frozen(self.imp_table[self.top, :])

    def signature(self):
        return ([self.meet_table, self.join_table, self.imp_table], [self.neg_table], [self.bottom, self.top])

    @property
    def is_trivial(self) -> bool:
        return self.n == 1

    @cached_property
    def center(self) -> int | None:
        """The unique fixed point of ``~``, or None."""
        fixed = [x for x in range(self.n) if int(self.neg_table[x]) == x]
        if len(fixed) > 1:
            raise MultipleFixedPoints(
                f"~ fixes {[self.names[x] for x in fixed]}", witness=[self.names[x] for x in fixed]
            )
        return fixed[0] if fixed else None

    def __repr__(self):
        label = self.name or "SnaAlgebra"
        return f"<{label}: {self.n} elements>"


def sna_from_tables(names: Sequence, covers: Iterable, imp_rows, neg: Sequence, name=None) -> SnaAlgebra:
    """Build from names: ``imp_rows[i][j]`` is the name of ``names[i] -> names[j]``."""
    L = build_lattice(names, covers)
    imp = [[L.index(str(v)) for v in row] for row in imp_rows]
    if len(imp) != L.n or any(len(r) != L.n for r in imp):
        raise ValueError("implication table must be square over the elements")
    negt = [L.index(str(v)) for v in neg]
    return SnaAlgebra(L, imp, negt, name)


# ---------------------------------------------------------------- axiom suites

KLEENE_LAWS = (
    Law("Ne1", "~~x = x", ("x",), lambda o, x: o.n[o.n[x]] == x),
    Law("Ne2", "~(x ^ y) = ~x v ~y", ("x", "y"), lambda o, x, y: o.n[o.m[x, y]] == o.j[o.n[x], o.n[y]]),
    Law("Ne3", "(x ^ ~x) ^ (y v ~y) = x ^ ~x", ("x", "y"),
        lambda o, x, y: o.m[o.m[x, o.n[x]], o.j[y, o.n[y]]] == o.m[x, o.n[x]]),
)

NELSON_LAWS = (
    Law("Ne4", "x -> x = 1", ("x",), lambda o, x: o.i[x, x] == o.one),
    Law("Ne5", "x -> (y -> z) = (x ^ y) -> z", ("x", "y", "z"),
        lambda o, x, y, z: o.i[x, o.i[y, z]] == o.i[o.m[x, y], z]),
    Law("Ne6", "x ^ (x -> y) = x ^ (~x v y)", ("x", "y"),
        lambda o, x, y: o.m[x, o.i[x, y]] == o.m[x, o.j[o.n[x], y]]),
    Law("Ne7", "~x v y <= x -> y", ("x", "y"),
        lambda o, x, y: o.le[o.j[o.n[x], y], o.i[x, y]]),
    Law("Ne8", "x -> (y ^ z) = (x -> y) ^ (x -> z)", ("x", "y", "z"),
        lambda o, x, y, z: o.i[x, o.m[y, z]] == o.m[o.i[x, y], o.i[x, z]]),
)

SNA_LAWS = (
    Law("sna1", "(x v y) -> z = (x -> z) ^ (y -> z)", ("x", "y", "z"),
        lambda o, x, y, z: o.i[o.j[x, y], z] == o.m[o.i[x, z], o.i[y, z]]),
    Law("sna2", "z -> (x ^ y) = (z -> x) ^ (z -> y)", ("x", "y", "z"),
        lambda o, x, y, z: o.i[z, o.m[x, y]] == o.m[o.i[z, x], o.i[z, y]]),
    Law("sna3", "((x -> y) ^ (y -> z)) -> (x -> z) = 1", ("x", "y", "z"),
        lambda o, x, y, z: o.i[o.m[o.i[x, y], o.i[y, z]], o.i[x, z]] == o.one),
    Law("sna4", "x -> x = 1", ("x",), lambda o, x: o.i[x, x] == o.one),
    Law("sna5", "x ^ (x -> y) <= x ^ (~x v y)", ("x", "y"),
        lambda o, x, y: o.le[o.m[x, o.i[x, y]], o.m[x, o.j[o.n[x], y]]]),
    Law("sna6", "x -> y <= z -> (x -> y)", ("x", "y", "z"),
        lambda o, x, y, z: o.le[o.i[x, y], o.i[z, o.i[x, y]]]),
    Law("sna7", "~(x -> y) -> (x ^ ~y) = 1", ("x", "y"),
        lambda o, x, y: o.i[o.n[o.i[x, y]], o.m[x, o.n[y]]] == o.one),
    Law("sna8", "(x ^ ~y) -> ~(x -> y) = 1", ("x", "y"),
        lambda o, x, y: o.i[o.m[x, o.n[y]], o.n[o.i[x, y]]] == o.one),
)


def _bx(o, a):
    return o.i[o.one, a]


def _imp_image(o):
    return np.unique(o.i)


DERIVED_LAWS = (
    Law("box_deflationary", "1 -> x <= x", ("x",), lambda o, x: o.le[_bx(o, x), x]),
    Law("monotone", "x <= y implies z -> x <= z -> y and y -> z <= x -> z", ("x", "y", "z"),
        lambda o, x, y, z: implies(o.le[x, y], o.le[o.i[z, x], o.i[z, y]] & o.le[o.i[y, z], o.i[x, z]])),
    Law("order_to_top", "x <= y implies x -> y = 1", ("x", "y"),
        lambda o, x, y: implies(o.le[x, y], o.i[x, y] == o.one)),
    Law("modus_ponens", "(x ^ (x -> y)) -> y = 1", ("x", "y"),
        lambda o, x, y: o.i[o.m[x, o.i[x, y]], y] == o.one),
    Law("top_gives_meet", "x -> y = 1 implies x = x ^ (~x v y)", ("x", "y"),
        lambda o, x, y: implies(o.i[x, y] == o.one, x == o.m[x, o.j[o.n[x], y]])),
    Law("order_recovery", "x -> y = 1 and ~y -> ~x = 1 imply x <= y", ("x", "y"),
        lambda o, x, y: implies((o.i[x, y] == o.one) & (o.i[o.n[y], o.n[x]] == o.one), o.le[x, y])),
    Law("top_transitive", "x -> y = 1 and y -> z = 1 imply x -> z = 1", ("x", "y", "z"),
        lambda o, x, y, z: implies((o.i[x, y] == o.one) & (o.i[y, z] == o.one), o.i[x, z] == o.one)),
    Law("top_lattice_compat", "x -> y = 1 implies (x ^ z) -> (y ^ z) = 1 and (x v z) -> (y v z) = 1",
        ("x", "y", "z"),
        lambda o, x, y, z: implies(o.i[x, y] == o.one,
                                   (o.i[o.m[x, z], o.m[y, z]] == o.one) & (o.i[o.j[x, z], o.j[y, z]] == o.one))),
    Law("top_imp_compat", "x -> y = 1 implies (y -> z) -> (x -> z) = 1 and (z -> x) -> (z -> y) = 1",
        ("x", "y", "z"),
        lambda o, x, y, z: implies(o.i[x, y] == o.one,
                                   (o.i[o.i[y, z], o.i[x, z]] == o.one) & (o.i[o.i[z, x], o.i[z, y]] == o.one))),
    Law("self_distrib", "x -> (y -> z) <= (x -> y) -> (x -> z)", ("x", "y", "z"),
        lambda o, x, y, z: o.le[o.i[x, o.i[y, z]], o.i[o.i[x, y], o.i[x, z]]]),
    # (x -> v) and (y -> w) range exactly over the image of ->
    Law("imp_exchange", "(x -> v) -> ((y -> w) -> z) = (y -> w) -> ((x -> v) -> z)", ("p", "q", "z"),
        lambda o, p, q, z: o.i[p, o.i[q, z]] == o.i[q, o.i[p, z]],
        domains=lambda o: [_imp_image(o), _imp_image(o), np.arange(o.size)]),
    Law("box_fixes_imp", "box(x -> y) = x -> y", ("x", "y"),
        lambda o, x, y: _bx(o, o.i[x, y]) == o.i[x, y]),
    Law("box_meet", "box y <= x -> (x ^ y)", ("x", "y"),
        lambda o, x, y: o.le[_bx(o, y), o.i[x, o.m[x, y]]]),
    Law("box_neg", "box x <= ~x -> 0", ("x",), lambda o, x: o.le[_bx(o, x), o.i[o.n[x], o.zero]]),
)


def verify_kleene(T: SnaAlgebra, full_report: bool = False) -> Verdict:
    return check_laws("kleene", T, KLEENE_LAWS, full_report)


def verify_nelson(T: SnaAlgebra, full_report: bool = False) -> Verdict:
    return check_laws("nelson", T, KLEENE_LAWS + NELSON_LAWS, full_report)


def verify_sna(T: SnaAlgebra, full_report: bool = False) -> Verdict:
    return check_laws("sna", T, KLEENE_LAWS + SNA_LAWS, full_report)


def require_sna(T: SnaAlgebra, what: str = "this operation"):
    v = verify_sna(T)
    if not v.ok:
        raise PreconditionFailed(f"{what} needs an SNA; {v.failures[0]}", witness=v.failures[0].witness)


def derived_properties_suite(T: SnaAlgebra, full_report: bool = False) -> Verdict:
    """Consequences of the SNA axioms; refuses algebras that are not SNAs."""
    require_sna(T, "the derived-properties suite")
    return check_laws("sna-derived", T, DERIVED_LAWS, full_report)


# ---------------------------------------------------------------- homomorphisms


def homomorphisms(T, U) -> list[tuple[int, ...]]:
    return list(tb.homomorphisms(T, U))


def is_homomorphism(T, U, f) -> bool:
    return tb.is_homomorphism(T, U, f)


def is_isomorphic(T, U) -> bool:
    return tb.is_isomorphic(T, U)


def map_by_names(T, U, pairs: dict | None = None) -> tuple[int, ...]:
    """Map ``T -> U`` sending each element to the element of ``U`` with the
    same name (or as given in ``pairs``)."""
    pairs = pairs or {}
    return tuple(U.index(pairs.get(nm, nm)) for nm in T.names)


# ---------------------------------------------------------------- constructions


def subalgebra(T: SnaAlgebra, subset: Iterable, name: str | None = None) -> tuple[SnaAlgebra, tuple[int, ...]]:
    """The subalgebra on ``subset`` and its inclusion map (elements kept in
    the parent's order and with the parent's names)."""
    S = sorted(T.lattice.subset(subset))
    if not tb.is_subuniverse(T, S):
        missing = sorted(tb.subuniverse(T, S) - set(S))
        raise NotASubalgebra(
            f"not closed: generates {[T.names[x] for x in missing]}", witness=[T.names[x] for x in missing]
        )
    pos = {x: k for k, x in enumerate(S)}
    L = lattice_from_order([T.names[x] for x in S], T.order[np.ix_(S, S)])
    imp = [[pos[int(T.imp_table[a, b])] for b in S] for a in S]
    neg = [pos[int(T.neg_table[a])] for a in S]
    U = SnaAlgebra(L, imp, neg, name)
    return U, tuple(S)


def product(T: SnaAlgebra, U: SnaAlgebra, name: str | None = None) -> SnaAlgebra:
    """Direct product; element ``(t, u)`` has index ``t * |U| + u``."""
    names = [f"<{a}|{b}>" for a in T.names for b in U.names]
    order = np.kron(T.order.astype(np.int8), U.order.astype(np.int8)).astype(bool)
    L = lattice_from_order(names, order)
    m = U.n
    t = np.arange(T.n * m) // m
    u = np.arange(T.n * m) % m
    imp = T.imp_table[t[:, None], t[None, :]].astype(np.int64) * m + U.imp_table[u[:, None], u[None, :]]
    neg = T.neg_table[t].astype(np.int64) * m + U.neg_table[u]
    P = SnaAlgebra(L, imp, neg, name)
    # the lattice built from the product order must agree with the coordinatewise operations
    mt = T.meet_table[t[:, None], t[None, :]].astype(np.int64) * m + U.meet_table[u[:, None], u[None, :]]
    assert np.array_equal(P.meet_table, mt)
    return P


def projections(T: SnaAlgebra, U: SnaAlgebra) -> tuple[tuple[int, ...], tuple[int, ...]]:
    m = U.n
    return tuple(k // m for k in range(T.n * m)), tuple(k % m for k in range(T.n * m))


def quotient_algebra(T: SnaAlgebra, P: tb.Partition, name: str | None = None) -> tuple[SnaAlgebra, tuple[int, ...]]:
    """``T/P`` for a congruence ``P`` and the canonical projection.

    Classes are named ``[r]`` after their least member ``r``.
    """
    if not tb.is_congruence(T, P):
        raise NotACongruence("partition is not compatible with the operations",
                             witness=tb.compatibility_violation(T, P))
    reps = P.representatives()
    lab = P.labels
    k = len(reps)
    meet = [[lab[int(T.meet_table[a, b])] for b in reps] for a in reps]
    order = np.array([[meet[i][j] == i for j in range(k)] for i in range(k)], dtype=bool)
    L = lattice_from_order([f"[{T.names[r]}]" for r in reps], order)
    imp = [[lab[int(T.imp_table[a, b])] for b in reps] for a in reps]
    neg = [lab[int(T.neg_table[a])] for a in reps]
    return SnaAlgebra(L, imp, neg, name), tuple(lab)


def trivial_algebra() -> SnaAlgebra:
    L = build_lattice(["0"], [])
    return SnaAlgebra(L, [[0]], [0], "trivial")
