import numpy as np
import pytest

import oracles
from snalab import corpus
from snalab.errors import NoMaximum, NotASublattice, VerificationError
from snalab.lattice import chain, product_lattice
from snalab.srl import (
    Srl,
    dense_elements,
    filters,
    make_srl,
    open_filters,
    srl_from_table,
    srl_properties,
    subresiduated_filters,
    verify_srl,
)


def names(S, subsets):
    return [sorted(S.lattice.names_of(F)) for F in subsets]


@pytest.mark.parametrize("name,oracle", [("S1", oracles.s1), ("S2", oracles.s2), ("B4H", oracles.b4h)])
def test_implication_matches_set_oracle(name, oracle):
    S, O = corpus.srl(name), oracle()
    for a in S.names:
        for b in S.names:
            assert S.names[S.implies(a, b)] == O.imp(a, b)


def test_box_and_negation_tables():
    S1, S2 = corpus.srl("S1"), corpus.srl("S2")
    assert [S1.names[v] for v in S1.box_table] == ["0", "0", "0", "1"]
    assert [S1.names[v] for v in S1.not_table] == ["1", "0", "0", "0"]
    assert [S2.names[v] for v in S2.box_table] == ["0", "a", "0", "1"]
    assert [S2.names[v] for v in S2.not_table] == ["1", "0", "a", "0"]


@pytest.mark.parametrize("name", corpus.SRL_NAMES)
def test_corpus_satisfies_axioms_and_properties(name):
    S = corpus.srl(name)
    assert verify_srl(S).ok
    assert srl_properties(S).ok
    assert {x for x in range(S.n) if S.box_table[x] == x} == set(S.d_set)


@pytest.mark.parametrize("name,dense,open_,sr", [
    ("S1", ["1", "a", "b"], [["1"], ["0", "1", "a", "b"]], [["0", "1", "a", "b"]]),
    ("S2", ["1", "a"], [["1"], ["1", "a"], ["0", "1", "a", "b"]], [["1", "a"], ["0", "1", "a", "b"]]),
    ("B4H", ["1"], [["1"], ["1", "a"], ["1", "b"], ["0", "1", "a", "b"]],
     [["1"], ["1", "a"], ["1", "b"], ["0", "1", "a", "b"]]),
    ("C3", ["1", "c"], [["1"], ["0", "1", "c"]], [["0", "1", "c"]]),
])
def test_dense_elements_and_filters(name, dense, open_, sr):
    S = corpus.srl(name)
    assert sorted(S.lattice.names_of(dense_elements(S))) == dense
    assert names(S, open_filters(S)) == open_
    assert names(S, subresiduated_filters(S)) == sr


def test_filters_of_b4():
    S = corpus.srl("S1")
    assert names(S, filters(S.lattice)) == [["1"], ["1", "a"], ["1", "b"], ["0", "1", "a", "b"]]


def test_d_must_be_a_bounded_sublattice():
    with pytest.raises(NotASublattice):
        make_srl(corpus.b4(), ["a", "1"])
    B8 = product_lattice(corpus.b4(), chain(2))
    with pytest.raises(NotASublattice) as e:
        make_srl(B8, ["<0|0>", "<a|0>", "<b|0>", "<1|1>"])
    assert e.value.witness[0] == "join"


def test_table_that_is_not_the_maximum_is_rejected():
    S = corpus.srl("S1")
    assert np.array_equal(srl_from_table(S.lattice, S.imp_table).imp_table, S.imp_table)
    H = corpus.srl("B4H")
    bad = np.array(H.imp_table)
    bad[H.index("a"), H.index("0")] = H.index("0")
    with pytest.raises(VerificationError) as e:
        srl_from_table(H.lattice, bad)
    assert e.value.witness == ("a", "0")


def test_verify_reports_failing_laws_with_least_witness():
    # a -> 0 = a breaks a ^ (a -> b) <= b
    S = corpus.srl("B4H")
    bad = np.array(S.imp_table)
    bad[S.index("a"), S.index("0")] = S.index("a")
    v = verify_srl(Srl(S.lattice, S.d_set, bad))
    assert not v.ok and "srl5" in v.failed_laws()
    assert v.failure("srl5").witness == {"a": "a", "b": "0"}
    full = verify_srl(Srl(S.lattice, S.d_set, bad), full_report=True)
    assert {"a": "a", "b": "0"} in full.failure("srl5").witnesses
    assert len(full.failure("srl5").witnesses) == full.failure("srl5").count


def test_heyting_flag_and_no_maximum_on_distributive_input():
    assert corpus.srl("B4H").is_heyting and not corpus.srl("S1").is_heyting
    # every bounded sublattice of a finite distributive lattice has the maxima
    for D in (["0", "1"], ["0", "a", "1"], ["0", "b", "1"]):
        try:
            make_srl(corpus.b4(), D)
        except NoMaximum:  # pragma: no cover
            pytest.fail(f"no maximum for D={D}")
