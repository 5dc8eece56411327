import pytest

import oracles
from snalab import corpus
from snalab.errors import NotATwist
from snalab.residuation import (
    gap_at,
    residuated_view,
    term_translation_gap,
    verify_nelson_lattice,
    verify_translation,
)

HEYTING = ("K(C2)", "K(C3H)", "K(B4H)", "K(B4H,up1)", "trivial")
NON_HEYTING = ("K(C3)", "K(S1)", "K(S2)", "K(S2,upa)")


def test_operations_on_pairs(k_s1):
    V = residuated_view(k_s1)
    assert k_s1.names[V.star("(a,0)", "(b,0)")] == "(0,0)"
    assert k_s1.names[V.rarrow("(a,b)", "(a,b)")] == "(1,0)"
    assert k_s1.names[V.rarrow("(1,0)", "(0,1)")] == "(0,1)"


@pytest.mark.parametrize("name", HEYTING)
def test_heyting_twists_are_nelson_lattices(name):
    V = residuated_view(corpus.sna(name))
    assert verify_nelson_lattice(V).ok
    assert verify_translation(V).ok


@pytest.mark.parametrize("name", NON_HEYTING)
def test_non_heyting_twists_lose_the_laws(name):
    V = residuated_view(corpus.sna(name))
    assert verify_nelson_lattice(V).failed_laws() == [
        "star_associative", "star_unit", "residuation", "involutive", "nelson"]
    assert "negation_is_arrow_to_0" in verify_translation(V).failed_laws()


def test_unit_fails_where_box_is_not_identity(k_s1):
    # 1 * (c,d) = (c, box d ^ not c) and box a = 0 in the base
    f = verify_nelson_lattice(residuated_view(k_s1)).failure("star_unit")
    assert f.witness == {"x": "(0,a)"}


@pytest.mark.parametrize("name", ["T7", "U", "K(C2)xK(C2)"])
def test_view_needs_a_twist(name):
    with pytest.raises(NotATwist):
        residuated_view(corpus.sna(name))


@pytest.mark.parametrize("name,oracle,least,count", [
    ("S1", oracles.s1, ("a", "0", "a", "b"), 4),
    ("S2", oracles.s2, ("a", "0", "a", "b"), 2),
    ("B4H", oracles.b4h, None, 0),
])
def test_translation_gap_against_oracle(name, oracle, least, count):
    S = corpus.srl(name)
    tuples = oracles.gap_tuples(oracle())
    g = term_translation_gap(S)
    assert g.count == len(tuples) == count
    assert g.found == bool(tuples)
    if tuples:
        assert tuples[0] == least
        assert (g.witness["a"], g.witness["b"], g.witness["c"], g.witness["d"]) == least
    for t in tuples:
        assert gap_at(S, *t)


def test_s2_gap_values():
    g = term_translation_gap(corpus.srl("S2"))
    assert g.witness["a -> c"] == "1" and g.witness["d -> (a -> b)"] == "a"
    assert gap_at(corpus.srl("S2"), "a", "b", "a", "b")


@pytest.mark.parametrize("name,oracle", [("S1", oracles.s1), ("S2", oracles.s2), ("B4H", oracles.b4h)])
def test_star_matches_pair_oracle(name, oracle):
    O = oracles.SetTwist(oracle())
    S = O.S
    V = residuated_view(corpus.sna(f"K({name})"))
    for x in O.pairs:
        for y in O.pairs:
            (a, b), (c, d) = x, y
            star = (S.meet(a, c), S.meet(S.imp(a, d), S.imp(c, b)))
            arrow = (S.meet(S.imp(a, c), S.imp(d, b)), S.meet(a, d))
            assert V.names[V.star(O.name(x), O.name(y))] == O.name(star)
            assert V.names[V.rarrow(O.name(x), O.name(y))] == O.name(arrow)
    unit_fails = [p for p in O.pairs if (S.meet("1", p[0]), S.meet(S.imp("1", p[1]), S.imp(p[0], "0"))) != p]
    assert (unit_fails == []) == (name == "B4H")
