from math import gcd

import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from orbicover.covers import (EXPECTED_DEGREES, InvalidCover, MonodromyCover, abelian_cover, are_equivalent,
                              build_tower, centralizer, compose, composites_equivalent, is_regular,
                              quarter_turn_identification, ramification_orders, subgroup_presentation,
                              total_signature, validate)
from orbicover.orbifold import OrbifoldPresentation, expected_abelianization, riemann_hurwitz_check
from orbicover.permcore import FiniteAbelianType, Permutation


@pytest.fixture(scope="module")
def tower23():
    return build_tower(2, 3)


def test_signatures_frozen(tower23):
    # genera from 6mn - m - n + 1 and the quotient formulas
    assert {k: str(v) for k, v in tower23.signatures().items()} == {
        "S_g": "S(32;)",
        "Sigma5": "S(5; 2,2,3,3)",
        "Sigma2A": "S(2; 2,2,3,4,4)",
        "Sigma2B": "S(2; 2,2,2,6,6)",
        "T": "S(1; 2,2,4,6)",
    }


def test_degrees_and_validity(tower23):
    for key, c in tower23.covers().items():
        assert c.degree == EXPECTED_DEGREES[key](2, 3)
        assert validate(c) == []
        assert riemann_hurwitz_check(c.base_signature, total_signature(c), c.degree)


def test_ramification(tower23):
    assert ramification_orders(tower23.composites["Sg->S2A"]) == (2, 2, 3, 4, 4)
    assert ramification_orders(tower23.composites["Sg->S2B"]) == (2, 2, 2, 6, 6)


def test_regularity_depends_on_parity(tower23):
    # the 2mn composite over Sigma2A is regular iff m is odd; over Sigma2B iff n is odd
    assert not is_regular(tower23.composites["Sg->S2A"])
    assert centralizer(tower23.composites["Sg->S2A"]).order == 6
    assert is_regular(tower23.composites["Sg->S2B"])
    t35 = build_tower(3, 5)
    assert all(centralizer(t35.composites[k]).order == 30 for k in ("Sg->S2A", "Sg->S2B"))


def test_tower_checks(tower23):
    assert tower23.checks["klein_square_commutes"]
    assert tower23.checks["full_composites_agree"]
    assert tower23.checks["lifts_r2"] and not tower23.checks["lifts_r1"]


def test_non_equivalence(tower23):
    a, b = tower23.composites["Sg->S2A"], tower23.composites["Sg->S2B"]
    assert quarter_turn_identification(a, b) == [0, 1, 3, 4, 2]
    assert composites_equivalent(tower23) is False
    with pytest.raises(ValueError):
        are_equivalent(a, b)


def test_equivalence_same_base(tower23):
    c = tower23.arrows["Sg->S5"]
    g = Permutation.from_cycles(c.degree, [(0, 1)])
    conj = MonodromyCover(c.base, [g * p * ~g for p in c.images])
    assert are_equivalent(c, conj)


def test_compose_degree(tower23):
    top = compose(tower23.arrows["S2A->T"], tower23.arrows["S5->S2A"])
    assert top.degree == 4
    assert str(total_signature(top)) == "S(5; 2,2,3,3)"


def test_bad_cover_rejected():
    base = OrbifoldPresentation(0, (2, 2, 2, 2))
    with pytest.raises(InvalidCover):
        MonodromyCover(base, [Permutation.identity(2)] * 3)
    bad = MonodromyCover(base, [Permutation([1, 0]), Permutation([1, 0]), Permutation([1, 0]), Permutation([0, 1])])
    assert validate(bad)


def test_subgroup_h1_matches_signature(tower23):
    for key in ("S2A->T", "S2B->T", "S5->S2A"):
        c = tower23.arrows[key]
        assert subgroup_presentation(c).abelianization() == expected_abelianization(total_signature(c))


@st.composite
def cyclic_covers(draw):
    n = draw(st.integers(2, 6))
    genus = draw(st.integers(0, 1))
    k = draw(st.integers(2, 4))
    xs = draw(st.lists(st.integers(1, n - 1), min_size=k - 1, max_size=k - 1))
    xs.append((-sum(xs)) % n)
    handles = draw(st.lists(st.integers(0, n - 1), min_size=2 * genus, max_size=2 * genus))
    assume(xs[-1] != 0)
    g = n
    for v in handles + xs:
        g = gcd(g, v)
    assume(g == 1)
    orders = [n // gcd(n, v) for v in xs]
    base = OrbifoldPresentation(genus, orders)
    return abelian_cover(base, FiniteAbelianType((n,)), [(v,) for v in handles + xs])


@given(cyclic_covers())
def test_cyclic_covers_are_regular(c):
    assert validate(c) == []
    assert is_regular(c) and centralizer(c).order == c.degree
    assert riemann_hurwitz_check(c.base_signature, total_signature(c), c.degree)


@given(cyclic_covers())
def test_reidemeister_schreier_h1(c):
    assert subgroup_presentation(c).abelianization() == expected_abelianization(total_signature(c))
