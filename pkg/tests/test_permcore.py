import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from orbicover.permcore import (FiniteAbelianType, GroupTooLarge, Permutation, abelian_automorphisms, closure,
                                conjugate_tuples, cycle_type, is_transitive, orbits)

from conftest import perm_pairs, perms


def test_composition_is_left_to_right():
    p = Permutation.from_cycles(3, [(0, 1)])
    q = Permutation.from_cycles(3, [(1, 2)])
    # (p*q)(x) = q(p(x))
    assert [(p * q)(x) for x in range(3)] == [2, 0, 1]


def test_parse_and_cycles_roundtrip():
    p = Permutation.parse("(0 2 4)(1 3)", 6)
    assert p.cycles() == [(0, 2, 4), (1, 3)]
    assert cycle_type(p) == (3, 2, 1)
    assert p.order() == 6


def test_bad_images_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_symmetric_group_orders():
    s = Permutation.from_cycles(5, [(0, 1)])
    c = Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])
    g = closure([s, c])
    assert g.order == 120
    assert not g.is_abelian()
    assert g.exponent() == 60
    assert is_transitive(g)


def test_closure_cap():
    s = Permutation.from_cycles(9, [(0, 1)])
    c = Permutation.from_cycles(9, [tuple(range(9))])
    with pytest.raises(GroupTooLarge):
        closure([s, c], max_order=1000)


def test_orbits_of_disjoint_cycles():
    p = Permutation.from_cycles(6, [(0, 1), (3, 4, 5)])
    assert orbits([p], 6) == [[0, 1], [2], [3, 4, 5]]


def test_conjugate_tuples_none_when_cycle_types_differ():
    a = Permutation.from_cycles(4, [(0, 1)])
    b = Permutation.from_cycles(4, [(0, 1, 2)])
    assert conjugate_tuples([a], [b]) is None


def test_abelian_automorphisms_of_z2_squared():
    # |GL(2, F_2)| = 6
    assert len(abelian_automorphisms(FiniteAbelianType((2, 2)))) == 6


@given(perm_pairs())
def test_group_laws(pq):
    p, q = pq
    e = Permutation.identity(p.degree)
    assert p * ~p == e
    assert (p * q) * p == p * (q * p)
    assert ~(p * q) == ~q * ~p


@given(perms(), st.integers(-5, 12))
def test_power_agrees_with_repeated_product(p, k):
    expect = Permutation.identity(p.degree)
    step = p if k >= 0 else ~p
    for _ in range(abs(k)):
        expect = expect * step
    assert p ** k == expect
    assert (p ** p.order()).is_identity()


@given(perms(max_degree=6), perms(max_degree=6))
def test_conjugate_tuples_finds_witness(p, c):
    if p.degree != c.degree:
        return
    q = c * p * ~c
    w = conjugate_tuples([p], [q])
    assert w is not None and w * p * ~w == q


def test_conjugate_tuples_brute_force_oracle():
    # pairs in S4: compare against exhaustive search over all 24 candidates
    s4 = [Permutation(x) for x in itertools.permutations(range(4))]
    t1 = (Permutation.from_cycles(4, [(0, 1)]), Permutation.from_cycles(4, [(1, 2, 3)]))
    for c in s4:
        t2 = tuple(c * x * ~c for x in t1)
        w = conjugate_tuples(t1, t2)
        assert w is not None and all(w * x * ~w == y for x, y in zip(t1, t2))
    t2 = (t1[0], Permutation.from_cycles(4, [(0, 2, 3)]))
    brute = [c for c in s4 if all(c * x * ~c == y for x, y in zip(t1, t2))]
    assert (conjugate_tuples(t1, t2) is None) == (not brute)
