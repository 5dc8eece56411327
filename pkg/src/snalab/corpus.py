"""Named small algebras used by the tests, the report command and the
sample files.

Sr-lattices:

    trivial  one element
    C2       two-element chain (Boolean)
    C3       three-element chain 0 < c < 1 with D = {0, 1}
    C3H      the same chain with D = everything (Heyting)
    S1       four-element Boolean lattice {0, a, b, 1} with D = {0, 1}
    S2       the same lattice with D = {0, a, 1}
    B4H      the same lattice with D = everything (Heyting)

SNAs are twists of these, filtered twists, subalgebras of ``K(S1)`` and
small products.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import SnaAlgebra, product, subalgebra
from .lattice import build_lattice, chain
from .srl import Srl, make_srl
from .twist import twist_filtered, twist_full

B4_COVERS = [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]


def b4():
    return build_lattice(["0", "a", "b", "1"], B4_COVERS)


@lru_cache(maxsize=None)
def srl(name: str) -> Srl:
    if name == "trivial":
        return make_srl(build_lattice(["0"], []), ["0"], "trivial")
    if name == "C2":
        return make_srl(chain(2), ["0", "1"], "C2")
    if name == "C3":
        return make_srl(chain(3, ["0", "c", "1"]), ["0", "1"], "C3")
    if name == "C3H":
        return make_srl(chain(3, ["0", "c", "1"]), ["0", "c", "1"], "C3H")
    if name == "S1":
        return make_srl(b4(), ["0", "1"], "S1")
    if name == "S2":
        return make_srl(b4(), ["0", "a", "1"], "S2")
    if name == "B4H":
        return make_srl(b4(), ["0", "a", "b", "1"], "B4H")
    raise KeyError(name)


SRL_NAMES = ("trivial", "C2", "C3", "C3H", "S1", "S2", "B4H")

T7_ELEMENTS = ("(0,0)", "(0,a)", "(0,b)", "(0,1)", "(a,0)", "(b,0)", "(1,0)")
U_ELEMENTS = ("(0,1)", "(1,0)")


def k_s1() -> SnaAlgebra:
    return twist_full(srl("S1"))


@lru_cache(maxsize=None)
def t7() -> SnaAlgebra:
    """Pairs of ``K(S1)`` with a zero coordinate: centered, without (CK)."""
    T, _ = subalgebra(k_s1(), T7_ELEMENTS, "T7")
    return T


@lru_cache(maxsize=None)
def u_pair() -> SnaAlgebra:
    """``{(0,1), (1,0)}`` inside ``K(S1)``: no center."""
    T, _ = subalgebra(k_s1(), U_ELEMENTS, "U")
    return T


@lru_cache(maxsize=None)
def sna(name: str) -> SnaAlgebra:
    if name == "trivial":
        return twist_full(srl("trivial"), "K(trivial)")
    if name == "U":
        return u_pair()
    if name == "T7":
        return t7()
    if name.startswith("K(") and name[2:-1] in SRL_NAMES:
        return twist_full(srl(name[2:-1]))
    if name == "K(B4H,up1)":
        return twist_filtered(srl("B4H"), ["1"], name)
    if name == "K(S2,upa)":
        return twist_filtered(srl("S2"), ["a", "1"], name)
    if name == "K(C2)xU":
        return product(sna("K(C2)"), u_pair(), name)
    if name == "K(C2)xK(C2)":
        return product(sna("K(C2)"), sna("K(C2)"), name)
    if name == "K(S1)xK(S1)":
        return product(k_s1(), k_s1(), name)
    raise KeyError(name)


# every SNA up to 9 elements; the 81-element square is kept apart
SNA_NAMES = (
    "trivial", "U", "K(C2)", "K(B4H,up1)", "K(C3)", "K(C3H)", "K(C2)xU", "K(S2,upa)",
    "T7", "K(S1)", "K(S2)", "K(B4H)", "K(C2)xK(C2)",
)
LARGE_SNA_NAMES = ("K(S1)xK(S1)",)

# (sr-lattice, subresiduated filter) pairs for filtered twists
FILTER_PAIRS = (("B4H", ("1",)), ("B4H", ("a", "1")), ("S2", ("a", "1")), ("C3H", ("c", "1")), ("C2", ("1",)))


def srls() -> dict[str, Srl]:
    return {n: srl(n) for n in SRL_NAMES}


def snas(include_large: bool = False) -> dict[str, SnaAlgebra]:
    names = SNA_NAMES + (LARGE_SNA_NAMES if include_large else ())
    return {n: sna(n) for n in names}
