"""Signature-agnostic machinery for finite algebras given by tables.

Anything with ``n``, ``names`` and ``signature()`` works here.
``signature()`` returns ``(binary_tables, unary_tables, constants)``, and
two algebras are compared operation by operation in that order.  This
module knows nothing about Nelson or subresiduated structure; the
congruence routines in it are the independent oracles the theory-driven
code is checked against.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import TooLarge


def _sig_lists(A):
    bins, uns, consts = A.signature()
    return (
        [np.asarray(t).tolist() for t in bins],
        [np.asarray(t).tolist() for t in uns],
        [int(c) for c in consts],
    )


# ---------------------------------------------------------------- partitions


class Partition:
    """An equivalence relation on ``range(n)``, stored as block labels.

    Labels are normalised so that blocks are numbered in order of their
    least element; two partitions are equal iff their labels are.
    """

    __slots__ = ("labels",)

    def __init__(self, labels: Sequence[int]):
        seen: dict[int, int] = {}
        self.labels = tuple(seen.setdefault(int(b), len(seen)) for b in labels)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels = list(range(n))
        for k, block in enumerate(blocks):
            for x in block:
                labels[x] = n + k
        return cls(labels)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(range(n))

    @classmethod
    def total(cls, n: int) -> "Partition":
        return cls([0] * n)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_blocks(self) -> int:
        return max(self.labels, default=-1) + 1

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.labels):
            out[b].append(x)
        return [tuple(b) for b in out]

    def block_of(self, x: int) -> tuple[int, ...]:
        b = self.labels[x]
        return tuple(y for y, c in enumerate(self.labels) if c == b)

    def representatives(self) -> list[int]:
        return [b[0] for b in self.blocks()]

    def same(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    def pairs(self) -> Iterator[tuple[int, int]]:
        for block in self.blocks():
            for x in block:
                for y in block:
                    yield x, y

    def is_identity(self) -> bool:
        return self.num_blocks == self.n

    def is_total(self) -> bool:
        return self.num_blocks <= 1

    def __le__(self, other: "Partition") -> bool:
        # refinement: every block of self sits inside a block of other
        img: dict[int, int] = {}
        for a, b in zip(self.labels, other.labels):
            if img.setdefault(a, b) != b:
                return False
        return True

    def __lt__(self, other):
        return self <= other and self != other

    def __ge__(self, other):
        return other <= self

    def join(self, other: "Partition") -> "Partition":
        uf = _UnionFind(self.n)
        for p in (self, other):
            first: dict[int, int] = {}
            for x, b in enumerate(p.labels):
                uf.union(first.setdefault(b, x), x)
        return uf.partition()

    def meet(self, other: "Partition") -> "Partition":
        return Partition([a * (other.num_blocks + 1) + b for a, b in zip(self.labels, other.labels)])

    def restrict(self, subset: Sequence[int]) -> "Partition":
        """The induced partition on ``subset`` (re-indexed by position)."""
        return Partition([self.labels[x] for x in subset])

    def __eq__(self, other):
        return isinstance(other, Partition) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Partition({self.blocks()})"

    def describe(self, names: Sequence[str]) -> str:
        return " ".join("{" + ",".join(names[x] for x in b) + "}" for b in self.blocks())


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def partition(self) -> Partition:
        return Partition([self.find(x) for x in range(len(self.parent))])


# ---------------------------------------------------------------- homomorphisms


def hom_violation(A, B, f: Sequence[int]):
    """First operation/argument tuple where ``f`` fails to commute, or None."""
    bA, uA, cA = _sig_lists(A)
    bB, uB, cB = _sig_lists(B)
    for k, (ca, cb) in enumerate(zip(cA, cB)):
        if f[ca] != cb:
            return ("constant", k, A.names[ca])
    for k, (ta, tb) in enumerate(zip(uA, uB)):
        for x in range(A.n):
            if f[ta[x]] != tb[f[x]]:
                return ("unary", k, A.names[x])
    for k, (ta, tb) in enumerate(zip(bA, bB)):
        for x in range(A.n):
            rowa, rowb = ta[x], tb[f[x]]
            for y in range(A.n):
                if f[rowa[y]] != rowb[f[y]]:
                    return ("binary", k, A.names[x], A.names[y])
    return None


def is_homomorphism(A, B, f: Sequence[int]) -> bool:
    return len(f) == A.n and all(0 <= v < B.n for v in f) and hom_violation(A, B, f) is None


def homomorphisms(A, B, injective: bool = False) -> Iterator[tuple[int, ...]]:
    """All homomorphisms ``A -> B`` (as image tuples), by backtracking.

    Assigning a value to one element immediately forces the images of
    everything it generates together with the already assigned elements;
    a clash prunes the branch.
    """
    bA, uA, cA = _sig_lists(A)
    bB, uB, cB = _sig_lists(B)
    n = A.n
    if injective and B.n < n:
        return

    def assign(f, used, x, v):
        stack = [(x, v)]
        while stack:
            x, v = stack.pop()
            if f[x] >= 0:
                if f[x] != v:
                    return False
                continue
            if injective and v in used:
                return False
            f[x] = v
            used.add(v)
            for ta, tb in zip(uA, uB):
                stack.append((ta[x], tb[v]))
            assigned = [z for z in range(n) if f[z] >= 0]
            for ta, tb in zip(bA, bB):
                for z in assigned:
                    stack.append((ta[x][z], tb[v][f[z]]))
                    stack.append((ta[z][x], tb[f[z]][v]))
        return True

    f0 = [-1] * n
    used0: set[int] = set()
    for ca, cb in zip(cA, cB):
        if not assign(f0, used0, ca, cb):
            return

    def search(f, used):
        try:
            x = f.index(-1)
        except ValueError:
            yield tuple(f)
            return
        for v in range(B.n):
            if injective and v in used:
                continue
            g, u = list(f), set(used)
            if assign(g, u, x, v):
                yield from search(g, u)

    yield from search(f0, used0)


def find_isomorphism(A, B) -> tuple[int, ...] | None:
    if A.n != B.n:
        return None
    return next(homomorphisms(A, B, injective=True), None)


def is_isomorphic(A, B) -> bool:
    return find_isomorphism(A, B) is not None


def compose(g: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    """``g o f``."""
    return tuple(g[x] for x in f)


# ---------------------------------------------------------------- subuniverses


def subuniverse(A, gens: Iterable[int]) -> frozenset:
    bins, uns, consts = _sig_lists(A)
    S = set(consts) | set(gens)
    frontier = list(S)
    while frontier:
        new = []
        for x in frontier:
            cand = [t[x] for t in uns]
            for t in bins:
                for y in list(S):
                    cand.append(t[x][y])
                    cand.append(t[y][x])
            for c in cand:
                if c not in S:
                    S.add(c)
                    new.append(c)
        frontier = new
    return frozenset(S)


def is_subuniverse(A, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return bool(S) and subuniverse(A, S) == S


def subuniverses(A) -> list[frozenset]:
    """Every subuniverse of ``A`` (non-empty; constants are always included)."""
    found = {subuniverse(A, ())}
    frontier = list(found)
    while frontier:
        new = []
        for S in frontier:
            for x in range(A.n):
                if x not in S:
                    T = subuniverse(A, S | {x})
                    if T not in found:
                        found.add(T)
                        new.append(T)
        frontier = new
    return sorted(found, key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------- congruences


def compatibility_violation(A, P: Partition):
    """First basic translation that ``P`` is not closed under, or None."""
    bins, uns, _ = _sig_lists(A)
    lab = P.labels
    reps = {}
    for x in range(A.n):
        r = reps.setdefault(lab[x], x)
        if r == x:
            continue
        for k, t in enumerate(uns):
            if lab[t[x]] != lab[t[r]]:
                return ("unary", k, x, r)
        for k, t in enumerate(bins):
            for z in range(A.n):
                if lab[t[x][z]] != lab[t[r][z]] or lab[t[z][x]] != lab[t[z][r]]:
                    return ("binary", k, x, r, z)
    return None


def is_congruence(A, P: Partition) -> bool:
    return P.n == A.n and compatibility_violation(A, P) is None


def congruence_generated(A, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Least congruence containing ``pairs``: close under basic translations."""
    bins, uns, _ = _sig_lists(A)
    uf = _UnionFind(A.n)
    work = [(x, y) for x, y in pairs if uf.union(x, y)]
    while work:
        x, y = work.pop()
        cand = [(t[x], t[y]) for t in uns]
        for t in bins:
            rx, ry = t[x], t[y]
            for z in range(A.n):
                cand.append((rx[z], ry[z]))
                cand.append((t[z][x], t[z][y]))
        for u, v in cand:
            if uf.union(u, v):
                work.append((u, v))
    return uf.partition()


def principal_congruences(A) -> dict[tuple[int, int], Partition]:
    return {(x, y): congruence_generated(A, [(x, y)]) for x, y in combinations(range(A.n), 2)}


def all_congruences(A, max_size: int = 12) -> list[Partition]:
    """Every congruence of ``A``, as joins of principal congruences."""
    if A.n > max_size:
        raise TooLarge(f"{A.n} elements exceeds the oracle limit {max_size}")
    principals = set(principal_congruences(A).values())
    found = {Partition.identity(A.n)}
    frontier = list(found)
    while frontier:
        new = []
        for P in frontier:
            for Q in principals:
                R = P.join(Q)
                if R not in found:
                    found.add(R)
                    new.append(R)
        frontier = new
    return sorted(found, key=lambda p: (-p.num_blocks, p.labels))


def congruences_by_partition_search(A, max_size: int = 10) -> list[Partition]:
    """Every congruence of ``A`` by enumerating set partitions directly.

    Restricted-growth backtracking; a branch is cut as soon as two
    already-placed elements in one block have translates that are both
    placed in different blocks.  Exponential, meant for small checks.
    """
    if A.n > max_size:
        raise TooLarge(f"{A.n} elements exceeds the partition-search limit {max_size}")
    bins, uns, _ = _sig_lists(A)
    n = A.n
    out = []
    lab = [-1] * n

    def consistent(k):
        # only constraints among elements 0..k
        for x in range(k + 1):
            for y in range(x + 1, k + 1):
                if lab[x] != lab[y]:
                    continue
                for t in uns:
                    a, b = t[x], t[y]
                    if a <= k and b <= k and lab[a] != lab[b]:
                        return False
                for t in bins:
                    for z in range(k + 1):
                        a, b = t[x][z], t[y][z]
                        if a <= k and b <= k and lab[a] != lab[b]:
                            return False
                        a, b = t[z][x], t[z][y]
                        if a <= k and b <= k and lab[a] != lab[b]:
                            return False
        return True

    def rec(k, nblocks):
        if k == n:
            out.append(Partition(lab))
            return
        for b in range(nblocks + 1):
            lab[k] = b
            if consistent(k):
                rec(k + 1, max(nblocks, b + 1))
        lab[k] = -1

    rec(0, 0)
    return sorted(out, key=lambda p: (-p.num_blocks, p.labels))


def kernel(f: Sequence[int]) -> Partition:
    return Partition(f)
