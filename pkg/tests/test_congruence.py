import pytest

import oracles
from snalab import corpus
from snalab import tables as tb
from snalab.algebra import subalgebra
from snalab.congruence import (
    check_cep,
    congruences,
    congruences_bruteforce,
    extend_oif,
    filter_of_congruence,
    generate_oif,
    in_principal,
    is_open_implicative,
    is_simple,
    is_subdirectly_irreducible,
    open_implicative_filters,
    open_implicative_filters_bruteforce,
    principal_congruence,
    s_value,
    theta_of_filter,
)
from snalab.errors import EmptyGeneratorSet, NotACongruence, NotOpenImplicative, TooLarge, TrivialAlgebra

NAMES = [n for n in corpus.SNA_NAMES if n != "trivial"]


def naive(T):
    binary = [[[int(v) for v in row] for row in t] for t in (T.meet_table, T.join_table, T.imp_table)]
    unary = [[int(v) for v in T.neg_table]]
    return oracles.congruences_naive(T.n, binary, unary)


def as_blocks(P):
    return frozenset(frozenset(b) for b in P.blocks())


@pytest.mark.parametrize("name", NAMES)
def test_congruences_match_naive_partition_oracle(name):
    T = corpus.sna(name)
    expected = naive(T)
    assert {as_blocks(P) for P in congruences(T)} == expected
    assert {as_blocks(P) for P in congruences_bruteforce(T)} == expected
    assert {as_blocks(P) for P in tb.all_congruences(T)} == expected


@pytest.mark.parametrize("name", NAMES)
def test_filters_and_congruences_correspond(name):
    T = corpus.sna(name)
    oifs = open_implicative_filters(T)
    assert [F.members for F in oifs] == open_implicative_filters_bruteforce(T)
    for F in oifs:
        assert filter_of_congruence(T, theta_of_filter(T, F)).members == F.members
    for P in congruences(T):
        assert theta_of_filter(T, filter_of_congruence(T, P)) == P


@pytest.mark.parametrize("name,count,simple,si", [
    ("U", 2, True, True),
    ("K(C2)", 2, True, True),
    ("K(C3H)", 3, False, True),
    ("K(S2,upa)", 3, False, True),
    ("K(S1)", 2, True, True),
    ("T7", 2, True, True),
    ("K(S2)", 3, False, True),
    ("K(B4H)", 4, False, False),
    ("K(C2)xK(C2)", 4, False, False),
])
def test_simple_and_subdirectly_irreducible(name, count, simple, si):
    T = corpus.sna(name)
    assert len(congruences(T)) == count
    assert is_simple(T) == simple
    assert is_subdirectly_irreducible(T) == si


def test_trivial_algebra_is_neither():
    T = corpus.sna("trivial")
    with pytest.raises(TrivialAlgebra):
        is_simple(T)
    with pytest.raises(TrivialAlgebra):
        is_subdirectly_irreducible(T)


def test_s_term(k_s1):
    for x in k_s1.names:
        assert s_value(k_s1, x, x) == k_s1.top
        for y in k_s1.names:
            assert s_value(k_s1, x, y) == s_value(k_s1, y, x)


def test_generation(k_s1):
    assert generate_oif(k_s1, ["(a,0)"]).members == frozenset(range(k_s1.n))
    assert generate_oif(k_s1, ["(1,0)"]).names() == ["(1,0)"]
    K = corpus.sna("K(B4H)")
    assert generate_oif(K, ["(a,b)"]).names() == ["(a,0)", "(a,b)", "(1,0)"]
    with pytest.raises(EmptyGeneratorSet):
        generate_oif(k_s1, [])


def test_extension():
    K = corpus.sna("K(B4H)")
    F = generate_oif(K, ["(a,0)"])
    assert len(extend_oif(K, F, "(b,0)")) == K.n
    assert extend_oif(K, F, "(1,0)").members == F.members
    with pytest.raises(NotOpenImplicative):
        extend_oif(K, [K.index("(a,0)")], "(b,0)")


def test_non_filters_are_rejected():
    K = corpus.sna("K(B4H)")
    bad = K.lattice.subset(["(a,0)", "(1,0)"])
    assert not is_open_implicative(K, bad)
    with pytest.raises(NotOpenImplicative):
        theta_of_filter(K, bad)
    with pytest.raises(NotACongruence):
        filter_of_congruence(K, tb.Partition.from_blocks(K.n, [[0, 1]]))


@pytest.mark.parametrize("name", ["K(S1)", "K(B4H)", "T7", "K(S2,upa)"])
def test_principal_congruences(name):
    T = corpus.sna(name)
    zero, one = T.names[T.bottom], T.names[T.top]
    assert principal_congruence(T, zero, one).is_total()
    assert all(in_principal(T, zero, one, z, w) for z in T.names for w in T.names)
    for x in range(T.n):
        assert principal_congruence(T, x, x).is_identity()
        for y in range(T.n):
            P = principal_congruence(T, x, y)
            assert all(P.same(z, w) == in_principal(T, x, y, z, w) for z in range(T.n) for w in range(T.n))


@pytest.mark.parametrize("name", ["K(S1)", "K(B4H)", "K(C3H)", "K(C2)xU"])
def test_congruence_extension_over_all_subalgebras(name):
    T = corpus.sna(name)
    for S in tb.subuniverses(T):
        U_names = [T.names[x] for x in sorted(S)]
        U, _ = subalgebra(T, U_names)
        for P in tb.all_congruences(U):
            assert check_cep(T, U_names, P).ok


def test_cep_rejects_non_congruence(k_s1):
    with pytest.raises(NotACongruence):
        check_cep(k_s1, corpus.T7_ELEMENTS, tb.Partition.from_blocks(7, [[0, 1]]))


def test_oracle_size_limit():
    with pytest.raises(TooLarge):
        congruences_bruteforce(corpus.sna("K(S1)xK(S1)"))
    with pytest.raises(TooLarge):
        open_implicative_filters_bruteforce(corpus.sna("K(S1)xK(S1)"))


def test_large_square_congruences():
    T = corpus.sna("K(S1)xK(S1)")
    cons = congruences(T)
    assert len(cons) == 4
    assert all(tb.is_congruence(T, P) for P in cons)
