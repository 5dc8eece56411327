"""The variety generated by totally ordered SNAs.

Membership is decided by two identities, ``box(x v y) = box x v box y``
and ``t(x, y) = 1``.  For members, the prime open implicative filters give
chain quotients into which the algebra embeds subdirectly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import tables as tb
from .algebra import SnaAlgebra, quotient_algebra, require_sna
from .congruence import ImplicativeFilter, open_implicative_filters, theta_of_filter
from .errors import IdentityNotSatisfied, NotInVariety, TrivialAlgebra, VerificationError
from .lattice import is_chain
from .verdict import Law, check_laws


def t_table(T: SnaAlgebra) -> np.ndarray:
    i, n = np.asarray(T.imp_table), np.asarray(T.neg_table)
    m, j = np.asarray(T.meet_table), np.asarray(T.join_table)
    nn = i[n[:, None], n[None, :]]  # ~x -> ~y at [x, y]
    left = m[i, nn.T]  # (x -> y) ^ (~y -> ~x)
    return j[left, left.T]


def t_value(T: SnaAlgebra, x, y) -> int:
    return int(t_table(T)[T.index(x), T.index(y)])


BOX_JOIN = Law("box_join", "box(x v y) = box x v box y", ("x", "y"),
               lambda o, x, y: o.i[o.one, o.j[x, y]] == o.j[o.i[o.one, x], o.i[o.one, y]])
T_IDENTITY = Law("t_identity", "t(x, y) = 1", ("x", "y"), lambda o, x, y: _t(o, x, y) == o.one)


def _t(o, x, y):
    left = o.m[o.i[x, y], o.i[o.n[y], o.n[x]]]
    right = o.m[o.i[y, x], o.i[o.n[x], o.n[y]]]
    return o.j[left, right]


@dataclass
class ChainVarietyVerdict:
    satisfies_box_join: bool
    box_join_witness: dict | None
    satisfies_t_identity: bool
    t_witness: dict | None
    details: dict = field(default_factory=dict)

    @property
    def member(self) -> bool:
        return self.satisfies_box_join and self.satisfies_t_identity

    def lines(self) -> list[str]:
        out = [f"member: {'yes' if self.member else 'no'}"]
        for label, ok, w in (("box-join", self.satisfies_box_join, self.box_join_witness),
                             ("t-identity", self.satisfies_t_identity, self.t_witness)):
            if ok:
                out.append(f"{label}: holds")
            else:
                out.append(f"{label}: fails at " + ", ".join(f"{k}={v}" for k, v in w.items()))
        return out


def check_chain_variety(T: SnaAlgebra) -> ChainVarietyVerdict:
    """Evaluate both identities on all pairs; witnesses include the two sides."""
    require_sna(T, "the chain-variety check")
    v = check_laws("chain-variety", T, [BOX_JOIN, T_IDENTITY])
    bj, ti = v.failure("box_join"), v.failure("t_identity")
    bjw = tw = None
    if bj is not None:
        x, y = T.index(bj.witness["x"]), T.index(bj.witness["y"])
        box = np.asarray(T.box_table)
        bjw = dict(bj.witness)
        bjw["box x v box y"] = T.names[int(T.join_table[box[x], box[y]])]
        bjw["box(x v y)"] = T.names[int(box[T.join_table[x, y]])]
    if ti is not None:
        tw = dict(ti.witness)
        tw["t(x,y)"] = T.names[t_value(T, tw["x"], tw["y"])]
    return ChainVarietyVerdict(bj is None, bjw, ti is None, tw)


def prime_oifs(T: SnaAlgebra) -> list[ImplicativeFilter]:
    return [F for F in open_implicative_filters(T) if F.prime]


@dataclass
class ChainQuotient:
    filter: ImplicativeFilter
    algebra: SnaAlgebra
    projection: tuple[int, ...]


def chain_quotients(T: SnaAlgebra) -> list[ChainQuotient]:
    """``T/Theta(P)`` for every prime ``P``; each is checked to be a chain."""
    v = check_laws("t", T, [T_IDENTITY])
    if not v.ok:
        raise IdentityNotSatisfied(str(v.failures[0]), witness=v.failures[0].witness)
    out = []
    for P in prime_oifs(T):
        Q, proj = quotient_algebra(T, theta_of_filter(T, P))
        if not is_chain(Q.lattice):
            raise VerificationError(f"quotient by {P} is not a chain")
        out.append(ChainQuotient(P, Q, proj))
    return out


@dataclass
class SubdirectEmbedding:
    factors: list[ChainQuotient]
    map: tuple[tuple[int, ...], ...]
    injective: bool


def subdirect_embedding(T: SnaAlgebra) -> SubdirectEmbedding:
    """``x |-> (x/P)_P`` over the prime open implicative filters."""
    if T.n == 1:
        raise TrivialAlgebra("the trivial algebra has no prime filters")
    verdict = check_chain_variety(T)
    if not verdict.member:
        raise NotInVariety("not in the chain variety", witness=verdict.box_join_witness or verdict.t_witness)
    factors = chain_quotients(T)
    meet = frozenset(range(T.n))
    for F in factors:
        meet &= F.filter.members
    if meet != {T.top}:
        raise VerificationError(f"prime filters intersect in {sorted(meet)}, not {{1}}")
    for F in factors:
        if not tb.is_homomorphism(T, F.algebra, F.projection):
            raise VerificationError("projection onto a factor is not a homomorphism")
    f = tuple(tuple(F.projection[x] for F in factors) for x in range(T.n))
    injective = len(set(f)) == T.n
    if not injective:
        raise VerificationError("subdirect map is not injective")
    return SubdirectEmbedding(factors, f, injective)


def separating_prime(T: SnaAlgebra, F, ideal) -> ImplicativeFilter | None:
    """A prime open implicative filter containing ``F`` and missing ``ideal``."""
    F, ideal = frozenset(F), frozenset(ideal)
    for P in prime_oifs(T):
        if F <= P.members and not (P.members & ideal):
            return P
    return None
