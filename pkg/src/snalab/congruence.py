"""Congruences of SNAs through open implicative filters.

An implicative filter contains 1 and is closed under modus ponens for
``->``; it is open when it is also closed under ``box``.  Congruences
correspond to open implicative filters via ``s(x, y)``, the meet of the
four implications between ``x``, ``y`` and their negations:
``x ~ y`` iff ``s(x, y)`` is in the filter.  Principal congruences have
the equational description ``(z, w) in theta(x, y) iff s(x, y) -> s(z, w) = 1``.

The generic partition routines in :mod:`snalab.tables` serve as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from . import tables as tb
from .algebra import SnaAlgebra, subalgebra
from .errors import (
    EmptyGeneratorSet,
    NotACongruence,
    NotOpenImplicative,
    TooLarge,
    TrivialAlgebra,
    VerificationError,
)

ORACLE_LIMIT = 12


def s_table(T: SnaAlgebra) -> np.ndarray:
    i = np.asarray(T.imp_table)
    n = np.asarray(T.neg_table)
    m = np.asarray(T.meet_table)
    nn = i[n[:, None], n[None, :]]
    return m[m[i, i.T], m[nn, nn.T]]


def s_value(T: SnaAlgebra, x, y) -> int:
    x, y = T.index(x), T.index(y)
    return int(s_table(T)[x, y])


# ---------------------------------------------------------------- filters


@dataclass(frozen=True)
class ImplicativeFilter:
    algebra: SnaAlgebra
    members: frozenset
    open: bool = True
    prime: bool = False

    def __contains__(self, x) -> bool:
        return self.algebra.index(x) in self.members

    def __len__(self):
        return len(self.members)

    @property
    def proper(self) -> bool:
        return len(self.members) < self.algebra.n

    def names(self) -> list[str]:
        return [self.algebra.names[x] for x in sorted(self.members)]

    def __str__(self):
        return "{" + ",".join(self.names()) + "}"


def is_implicative_filter(T: SnaAlgebra, F: Iterable[int]) -> bool:
    F = frozenset(F)
    if T.top not in F:
        return False
    imp = np.asarray(T.imp_table)
    for x in F:
        for y in range(T.n):
            if y not in F and int(imp[x, y]) in F:
                return False
    return True


def is_open_implicative(T: SnaAlgebra, F: Iterable[int]) -> bool:
    F = frozenset(F)
    return is_implicative_filter(T, F) and all(int(T.box_table[x]) in F for x in F)


def is_prime(T: SnaAlgebra, F: Iterable[int]) -> bool:
    F = frozenset(F)
    if len(F) == T.n:
        return False
    j = np.asarray(T.join_table)
    return all(x in F or y in F for x in range(T.n) for y in range(T.n) if int(j[x, y]) in F)


def _make(T, F) -> ImplicativeFilter:
    F = frozenset(F)
    return ImplicativeFilter(T, F, True, is_prime(T, F))


def _by_size(fs):
    return sorted(fs, key=lambda F: (len(F), sorted(F)))


def open_implicative_filters(T: SnaAlgebra) -> list[ImplicativeFilter]:
    """Every open implicative filter, smallest first.

    Such a filter is a lattice filter, hence of the form ``up(x)`` in a
    finite lattice, so the candidates are the principal up-sets.
    """
    cached = getattr(T, "_oifs", None)
    if cached is None:
        cands = {T.lattice.upset(x) for x in range(T.n)}
        cached = [_make(T, F) for F in _by_size(cands) if is_open_implicative(T, F)]
        T._oifs = cached
    return cached


def open_implicative_filters_bruteforce(T: SnaAlgebra, max_size: int = 14) -> list[frozenset]:
    """Every subset containing 1 that passes the definition directly."""
    if T.n > max_size:
        raise TooLarge(f"{T.n} elements exceeds the subset-search limit {max_size}")
    rest = [x for x in range(T.n) if x != T.top]
    out = []
    for k in range(len(rest) + 1):
        for c in combinations(rest, k):
            F = frozenset(c) | {T.top}
            if is_open_implicative(T, F):
                out.append(F)
    return _by_size(out)


def _meet_closure(T: SnaAlgebra, X: Iterable[int]) -> set[int]:
    m = np.asarray(T.meet_table)
    M = set(X)
    frontier = list(M)
    while frontier:
        new = []
        for a in frontier:
            for b in list(M):
                c = int(m[a, b])
                if c not in M:
                    M.add(c)
                    new.append(c)
        frontier = new
    return M


def generate_oif(T: SnaAlgebra, X: Iterable) -> ImplicativeFilter:
    """``{x : box(x1 ^ ... ^ xn) -> x = 1 for some xi in X}``, checked against
    the intersection of all open implicative filters containing ``X``."""
    X = T.lattice.subset(X)
    if not X:
        raise EmptyGeneratorSet("cannot generate from an empty set")
    imp = np.asarray(T.imp_table)
    box = np.asarray(T.box_table)
    G = frozenset(y for m in _meet_closure(T, X) for y in range(T.n) if int(imp[box[m], y]) == T.top)
    oracle = frozenset(range(T.n))
    for F in open_implicative_filters(T):
        if X <= F.members:
            oracle &= F.members
    if G != oracle:
        raise VerificationError(
            f"generated set {sorted(G)} differs from the intersection {sorted(oracle)}"
        )
    return _make(T, G)


def extend_oif(T: SnaAlgebra, F: ImplicativeFilter | Iterable, x) -> ImplicativeFilter:
    """``{y : (f ^ box x) -> y = 1 for some f in F}``, checked against
    generating from ``F`` together with ``x``."""
    Fm = F.members if isinstance(F, ImplicativeFilter) else T.lattice.subset(F)
    if not is_open_implicative(T, Fm):
        raise NotOpenImplicative("not an open implicative filter", witness=sorted(Fm))
    x = T.index(x)
    imp, m, box = np.asarray(T.imp_table), np.asarray(T.meet_table), np.asarray(T.box_table)
    E = frozenset(y for f in Fm for y in range(T.n) if int(imp[m[f, box[x]], y]) == T.top)
    if E != generate_oif(T, Fm | {x}).members:
        raise VerificationError("extension formula disagrees with generation")
    return _make(T, E)


# ---------------------------------------------------------------- filters <-> congruences


def theta_of_filter(T: SnaAlgebra, F: ImplicativeFilter | Iterable) -> tb.Partition:
    """``x ~ y iff s(x, y) in F``."""
    Fm = F.members if isinstance(F, ImplicativeFilter) else T.lattice.subset(F)
    if not is_open_implicative(T, Fm):
        raise NotOpenImplicative("not an open implicative filter", witness=sorted(Fm))
    inF = np.zeros(T.n, dtype=bool)
    inF[list(Fm)] = True
    rel = inF[s_table(T)]
    P = tb.Partition(rel.argmax(axis=1))
    same = np.array(P.labels)[:, None] == np.array(P.labels)[None, :]
    if not np.array_equal(same, rel):
        raise VerificationError("s-relation of the filter is not an equivalence")
    if not tb.is_congruence(T, P):
        raise VerificationError("s-relation of the filter is not a congruence", witness=tb.compatibility_violation(T, P))
    return P


def filter_of_congruence(T: SnaAlgebra, P: tb.Partition) -> ImplicativeFilter:
    """The class of 1."""
    if not tb.is_congruence(T, P):
        raise NotACongruence("not a congruence", witness=tb.compatibility_violation(T, P))
    F = frozenset(P.block_of(T.top))
    if not is_open_implicative(T, F):
        raise VerificationError("class of 1 is not an open implicative filter")
    return _make(T, F)


def congruences_bruteforce(T: SnaAlgebra, max_size: int = ORACLE_LIMIT) -> list[tb.Partition]:
    """All congruences by enumerating set partitions (the oracle)."""
    if T.n > max_size:
        raise TooLarge(f"{T.n} elements exceeds the oracle limit {max_size}")
    return tb.congruences_by_partition_search(T, max_size=max_size)


def congruences(T: SnaAlgebra) -> list[tb.Partition]:
    """All congruences, as ``Theta(F)`` over the open implicative filters."""
    return [theta_of_filter(T, F) for F in open_implicative_filters(T)]


# ---------------------------------------------------------------- principal congruences


def in_principal(T: SnaAlgebra, x, y, z, w) -> bool:
    s = s_table(T)
    a = int(s[T.index(x), T.index(y)])
    b = int(s[T.index(z), T.index(w)])
    return int(T.imp_table[a, b]) == T.top


def principal_congruence(T: SnaAlgebra, x, y, check: bool = True) -> tb.Partition:
    x, y = T.index(x), T.index(y)
    s = s_table(T)
    rel = np.asarray(T.imp_table)[s[x, y], s] == T.top
    P = tb.Partition(rel.argmax(axis=1))
    if check:
        if P != tb.congruence_generated(T, [(x, y)]):
            raise VerificationError("principal congruence formula disagrees with generation")
    return P


# ---------------------------------------------------------------- simple and SI


def _oracle_congruences(T):
    return tb.all_congruences(T, max_size=ORACLE_LIMIT) if T.n <= ORACLE_LIMIT else None


def simple_criterion(T: SnaAlgebra) -> bool:
    """``box x -> 0 = 1`` for every ``x != 1``."""
    return all(int(T.imp_table[T.box_table[x], T.bottom]) == T.top for x in range(T.n) if x != T.top)


def si_criterion(T: SnaAlgebra) -> int | None:
    """An ``x != 1`` with ``box y -> x = 1`` for all ``y != 1``, or None."""
    imp = np.asarray(T.imp_table)
    box = np.asarray(T.box_table)
    others = [y for y in range(T.n) if y != T.top]
    for x in others:
        if all(int(imp[box[y], x]) == T.top for y in others):
            return x
    return None


def is_simple(T: SnaAlgebra) -> bool:
    if T.n == 1:
        raise TrivialAlgebra("the trivial algebra is neither simple nor subdirectly irreducible")
    verdict = simple_criterion(T)
    cons = _oracle_congruences(T)
    if cons is not None and verdict != (len(cons) == 2):
        raise VerificationError("simplicity criterion disagrees with the congruence count")
    return verdict


def monolith(cons: list[tb.Partition], n: int) -> tb.Partition | None:
    """Least non-identity congruence in ``cons``, or None."""
    nontrivial = [P for P in cons if not P.is_identity()]
    least = [P for P in nontrivial if all(P <= Q for Q in nontrivial)]
    return least[0] if least else None


def is_subdirectly_irreducible(T: SnaAlgebra) -> bool:
    if T.n == 1:
        raise TrivialAlgebra("the trivial algebra is neither simple nor subdirectly irreducible")
    verdict = si_criterion(T) is not None
    cons = _oracle_congruences(T)
    if cons is not None and verdict != (monolith(cons, T.n) is not None):
        raise VerificationError("SI criterion disagrees with the congruence lattice")
    return verdict


# ---------------------------------------------------------------- congruence extension


@dataclass
class CepResult:
    ok: bool
    extension: tb.Partition
    restriction: tb.Partition
    given: tb.Partition


def extend_congruence(T: SnaAlgebra, pairs: Iterable[tuple[int, int]]) -> tb.Partition:
    """Least congruence of ``T`` containing ``pairs``: a join of principal
    congruences given by the s-formula."""
    P = tb.Partition.identity(T.n)
    for x, y in pairs:
        if x != y:
            P = P.join(principal_congruence(T, x, y, check=False))
    return P


def check_cep(T: SnaAlgebra, subset: Iterable, P: tb.Partition) -> CepResult:
    """Extend a congruence ``P`` of the subalgebra on ``subset`` to ``T`` and
    compare the restriction with ``P``.  ``P`` is indexed by position in the
    sorted subset."""
    U, inc = subalgebra(T, subset)
    if not tb.is_congruence(U, P):
        raise NotACongruence("not a congruence of the subalgebra", witness=tb.compatibility_violation(U, P))
    pairs = [(inc[a], inc[b]) for a, b in P.pairs() if a < b]
    E = extend_congruence(T, pairs)
    if E != tb.congruence_generated(T, pairs):
        raise VerificationError("s-formula extension disagrees with generic generation")
    R = E.restrict(inc)
    return CepResult(R == P, E, R, P)

