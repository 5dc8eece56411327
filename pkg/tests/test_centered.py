import numpy as np
import pytest

from snalab import corpus
from snalab import tables as tb
from snalab.algebra import SnaAlgebra, is_isomorphic
from snalab.centered import center_report, check_c, check_ck, find_center, representable_as_twist
from snalab.errors import NoCenter, PreconditionFailed

CENTERLESS = ("U", "K(B4H,up1)", "K(C2)xU", "K(S2,upa)")


@pytest.mark.parametrize("name", corpus.SNA_NAMES)
def test_center_exists_unless_listed(name):
    T = corpus.sna(name)
    c = find_center(T)
    assert (c is None) == (name in CENTERLESS)
    if c is not None:
        assert T.neg(c) == c
        # c -> x = 1 and x ^ ~x <= c <= x v ~x
        assert all(T.implies(c, x) == T.top for x in range(T.n))
        assert all(T.leq(T.meet(x, T.neg(x)), c) and T.leq(c, T.join(x, T.neg(x))) for x in range(T.n))


@pytest.mark.parametrize("name", [n for n in corpus.SNA_NAMES if n not in CENTERLESS])
def test_ck_c_and_rho_agree(name):
    T = corpus.sna(name)
    r = center_report(T)
    assert r.ck_holds == r.c_holds == r.rho_surjective
    assert r.ck_holds == (name != "T7")


def test_t7_report(t7):
    r = center_report(t7)
    assert r.lines() == ["center: (0,0)", "CK: fails at x=(a,0), y=(b,0)", "C: fails at x=(a,0), y=(b,0)",
                         "rho surjective: no"]
    assert check_c(t7) == (False, ("(a,0)", "(b,0)"))


def test_centerless_report():
    assert center_report(corpus.sna("U")).lines() == ["center: none", "rho surjective: no"]
    with pytest.raises(NoCenter):
        check_ck(corpus.sna("U"))


def test_find_center_needs_kleene():
    T = corpus.sna("K(C2)")
    bad = SnaAlgebra(T.lattice, T.imp_table, np.arange(T.n))
    with pytest.raises(PreconditionFailed):
        find_center(bad)


def test_homomorphisms_preserve_centers():
    small = [corpus.sna(n) for n in ("K(C2)", "K(C3)", "K(C3H)", "T7", "K(S1)", "K(B4H)")]
    for A in small:
        for B in small:
            for f in tb.homomorphisms(A, B):
                assert f[A.center] == B.center


def test_twist_representation(k_s1, t7):
    R = representable_as_twist(k_s1)
    assert R.representable and is_isomorphic(R.srl, corpus.srl("S1"))
    R = representable_as_twist(t7)
    assert not R.representable and R.reason == "(CK) fails at x=(a,0), y=(b,0)"
    R = representable_as_twist(corpus.sna("U"))
    assert not R.representable and R.reason == "no center"
    assert representable_as_twist(corpus.sna("K(C2)xK(C2)")).representable
