"""Twist algebras over sr-lattices and the quotient going back.

``K(A)`` consists of pairs ``(a, b)`` with ``a ^ b = 0``; the filtered
version ``K(A, F)`` keeps those with ``a v b`` in ``F``.  In the other
direction an SNA ``T`` is divided by ``x ~ y iff x -> y = 1 = y -> x``,
which forgets ``~`` and leaves an sr-lattice.  ``rho`` and ``alpha`` are
the comparison maps between the two constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import tables as tb
from .algebra import SnaAlgebra, require_sna
from .errors import NotAHomomorphism, NotSubresiduatedFilter, VerificationError
from .lattice import lattice_from_order
from .srl import Srl, srl_from_table, subresiduated_filters, verify_srl


class TwistAlgebra(SnaAlgebra):
    """An SNA whose elements are pairs over ``source``.  ``pairs[k]`` is the
    index pair of element ``k``; ``filter`` is None for the full twist."""

    def __init__(self, lattice, imp_table, neg_table, pairs, source: Srl, filter=None, name=None):
        super().__init__(lattice, imp_table, neg_table, name)
        self.pairs = tuple(pairs)
        self.source = source
        self.filter = None if filter is None else frozenset(filter)
        self._pos = {p: k for k, p in enumerate(self.pairs)}

    def element(self, a, b) -> int:
        """Index of the pair ``(a, b)`` (names or source indices)."""
        S = self.source
        return self._pos[(S.index(a), S.index(b))]


def _pair_name(S: Srl, a: int, b: int) -> str:
    return f"({S.names[a]},{S.names[b]})"


def _build_twist(S: Srl, keep, name) -> TwistAlgebra:
    m, j, i, le = (np.asarray(t) for t in (S.meet_table, S.join_table, S.imp_table, S.order))
    pairs = [(a, b) for a in range(S.n) for b in range(S.n) if m[a, b] == S.bottom and keep(a, b)]
    pos = {p: k for k, p in enumerate(pairs)}
    A = np.array([p[0] for p in pairs])
    B = np.array([p[1] for p in pairs])
    order = le[A[:, None], A[None, :]] & le[B[None, :], B[:, None]]
    L = lattice_from_order([_pair_name(S, a, b) for a, b in pairs], order)

    def lookup(first, second, what):
        out = np.empty(first.shape, dtype=np.int64)
        for idx in np.ndindex(first.shape):
            key = (int(first[idx]), int(second[idx]))
            if key not in pos:
                raise VerificationError(f"{what} leaves the carrier: {_pair_name(S, *key)}", witness=key)
            out[idx] = pos[key]
        return out

    a, c = A[:, None], A[None, :]
    b, d = B[:, None], B[None, :]
    meet = lookup(m[a, c], j[b, d], "meet")
    join = lookup(j[a, c], m[b, d], "join")
    imp = lookup(i[a, c], m[a, d], "implication")
    neg = lookup(B, A, "negation")
    # the lattice read off the pair order must use the coordinatewise operations
    if not (np.array_equal(L.meet_table, meet) and np.array_equal(L.join_table, join)):
        raise VerificationError("pair order does not induce the coordinatewise lattice operations")
    return TwistAlgebra(L, imp, neg, pairs, S, None, name)


def twist_full(S: Srl, name: str | None = None) -> TwistAlgebra:
    """``K(S)``, cached on ``S``."""
    cached = getattr(S, "_twist_full", None)
    if cached is None:
        cached = _build_twist(S, lambda a, b: True, name or (f"K({S.name})" if S.name else None))
        S._twist_full = cached
    return cached


def twist_filtered(S: Srl, F, name: str | None = None) -> TwistAlgebra:
    """``K(S, F)`` for a subresiduated filter ``F``.  Closure of the carrier
    under every operation is verified during construction."""
    F = S.lattice.subset(F)
    if F not in subresiduated_filters(S):
        raise NotSubresiduatedFilter(
            f"{S.lattice.names_of(sorted(F))} is not a subresiduated filter",
            witness=S.lattice.names_of(sorted(F)),
        )
    j = np.asarray(S.join_table)
    T = _build_twist(S, lambda a, b: int(j[a, b]) in F, name)
    T.filter = F
    return T


def twist_inclusion(T: TwistAlgebra, K: TwistAlgebra) -> tuple[int, ...]:
    """Inclusion of a filtered twist into the full twist of the same source."""
    return tuple(K._pos[p] for p in T.pairs)


def remark_top_law(T: TwistAlgebra) -> bool:
    """``(a,b) => (c,d)`` is the top exactly when ``a <= c``."""
    A = np.array([p[0] for p in T.pairs])
    lhs = np.asarray(T.imp_table) == T.top
    rhs = np.asarray(T.source.order)[A[:, None], A[None, :]]
    return bool(np.array_equal(lhs, rhs))


# ---------------------------------------------------------------- the quotient


class _NoNegation:
    """The ``^ v ->`` reduct of an algebra, for compatibility checks."""

    def __init__(self, T):
        self.n, self.names, self._T = T.n, T.names, T

    def signature(self):
        T = self._T
        return ([T.meet_table, T.join_table, T.imp_table], [], [T.bottom, T.top])


def theta(T: SnaAlgebra) -> tb.Partition:
    """``x ~ y iff x -> y = 1 = y -> x``; compatibility with the lattice
    operations and ``->`` is checked (not with ``~``)."""
    top = np.asarray(T.imp_table) == T.top
    rel = top & top.T
    first = rel.argmax(axis=1)
    P = tb.Partition(first)
    same = np.array(P.labels)[:, None] == np.array(P.labels)[None, :]
    if not np.array_equal(same, rel):
        raise VerificationError("relation is not an equivalence")
    bad = tb.compatibility_violation(_NoNegation(T), P)
    if bad is not None:
        raise VerificationError(f"relation is not compatible with ^, v, ->: {bad}", witness=bad)
    return P


@dataclass
class ThetaQuotient:
    source: SnaAlgebra
    partition: tb.Partition
    srl: Srl
    representatives: tuple[int, ...]
    projection: tuple[int, ...]

    def cls(self, x) -> int:
        return self.projection[self.source.index(x)]


def quotient_srl(T: SnaAlgebra, check: bool = True) -> ThetaQuotient:
    """The sr-lattice ``T/~``.  Its order is read off ``x -> y = 1``, the
    operations are induced from representatives, and ``D`` is the image of
    ``box``; all of these are cross-checked."""
    cached = getattr(T, "_quotient", None)
    if cached is not None:
        return cached
    if check:
        require_sna(T, "the quotient")
    P = theta(T)
    reps = P.representatives()
    lab = np.array(P.labels)
    R = np.array(reps)
    imp = lab[np.asarray(T.imp_table)[R[:, None], R[None, :]]]
    order = np.asarray(T.imp_table)[R[:, None], R[None, :]] == T.top
    names = [f"[{T.names[r]}]" for r in reps]
    L = lattice_from_order(names, order)
    meet = lab[np.asarray(T.meet_table)[R[:, None], R[None, :]]]
    join = lab[np.asarray(T.join_table)[R[:, None], R[None, :]]]
    if not (np.array_equal(L.meet_table, meet) and np.array_equal(L.join_table, join)):
        raise VerificationError("induced lattice operations disagree with the order x -> y = 1")
    # well defined on every member of each class, not only representatives
    full = lab[np.asarray(T.imp_table)]
    if not np.array_equal(full, imp[lab[:, None], lab[None, :]]):
        raise VerificationError("implication is not well defined on classes")
    S = srl_from_table(L, imp, name=f"{T.name}/theta" if T.name else None)
    boxes = {int(lab[int(b)]) for b in np.asarray(T.box_table)}
    if boxes != set(S.d_set):
        raise VerificationError("D differs from the classes of box-values")
    v = verify_srl(S)
    if not v.ok:
        raise VerificationError(f"quotient is not an sr-lattice: {v.failures[0]}")
    Q = ThetaQuotient(T, P, S, tuple(reps), tuple(int(c) for c in lab))
    T._quotient = Q
    return Q


# ---------------------------------------------------------------- rho, alpha


@dataclass
class Rho:
    target: TwistAlgebra
    map: tuple[int, ...]
    surjective: bool

    def image(self) -> list[int]:
        return sorted(set(self.map))


def rho(T: SnaAlgebra) -> Rho:
    """``x |-> (x/~, ~x/~)`` into ``K(T/~)``; verified to be an injective
    homomorphism, surjectivity reported."""
    Q = quotient_srl(T)
    K = twist_full(Q.srl)
    f = tuple(K._pos[(Q.projection[x], Q.projection[int(T.neg_table[x])])] for x in range(T.n))
    bad = tb.hom_violation(T, K, f)
    if bad is not None:
        raise NotAHomomorphism(f"rho fails at {bad}", witness=bad)
    if len(set(f)) != T.n:
        raise VerificationError("rho is not injective")
    return Rho(K, f, len(set(f)) == K.n)


def alpha(S: Srl) -> tuple[int, ...]:
    """``a |-> (a, not a)/~`` from ``S`` to the quotient of ``K(S)``;
    verified to be an isomorphism of sr-lattices."""
    K = twist_full(S)
    Q = quotient_srl(K)
    f = tuple(Q.projection[K._pos[(a, int(S.not_table[a]))]] for a in range(S.n))
    bad = tb.hom_violation(S, Q.srl, f)
    if bad is not None:
        raise NotAHomomorphism(f"alpha fails at {bad}", witness=bad)
    if sorted(f) != list(range(Q.srl.n)):
        raise VerificationError("alpha is not bijective")
    return f


# ---------------------------------------------------------------- morphisms


def lift_hom(A: Srl, B: Srl, f: Sequence[int]) -> tuple[int, ...]:
    """``K(f)(a, b) = (f(a), f(b))``, with the square through ``alpha``."""
    f = tuple(int(v) for v in f)
    bad = tb.hom_violation(A, B, f)
    if bad is not None:
        raise NotAHomomorphism(f"not an sr-lattice homomorphism: {bad}", witness=bad)
    KA, KB = twist_full(A), twist_full(B)
    g = tuple(KB._pos[(f[a], f[b])] for a, b in KA.pairs)
    bad = tb.hom_violation(KA, KB, g)
    if bad is not None:
        raise NotAHomomorphism(f"lifted map fails at {bad}", witness=bad)
    h = drop_hom(KA, KB, g, check_square=False)
    aA, aB = alpha(A), alpha(B)
    if tb.compose(h, aA) != tb.compose(aB, f):
        raise VerificationError("C(K(f)) o alpha_A differs from alpha_B o f")
    return g


def drop_hom(T: SnaAlgebra, U: SnaAlgebra, g: Sequence[int], check_square: bool = True) -> tuple[int, ...]:
    """``C(g)(x/~) = g(x)/~``, with the square through ``rho``."""
    g = tuple(int(v) for v in g)
    bad = tb.hom_violation(T, U, g)
    if bad is not None:
        raise NotAHomomorphism(f"not an SNA homomorphism: {bad}", witness=bad)
    QT, QU = quotient_srl(T), quotient_srl(U)
    h = tuple(QU.projection[g[r]] for r in QT.representatives)
    if any(QU.projection[g[x]] != h[QT.projection[x]] for x in range(T.n)):
        raise VerificationError("g does not respect the quotient")
    bad = tb.hom_violation(QT.srl, QU.srl, h)
    if bad is not None:
        raise NotAHomomorphism(f"induced map fails at {bad}", witness=bad)
    if check_square:
        rT, rU = rho(T), rho(U)
        Kh = tuple(rU.target._pos[(h[a], h[b])] for a, b in rT.target.pairs)
        if tb.compose(Kh, rT.map) != tb.compose(rU.map, g):
            raise VerificationError("K(C(g)) o rho_T differs from rho_U o g")
    return h
