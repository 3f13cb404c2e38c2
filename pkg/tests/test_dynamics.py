from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from orbicover.dynamics import (SingularError, TorusMap, TorusPoint, find_power, involution_classify, is_anosov,
                                periodic_points)

from oracles import brute_fixed_points

CAT = TorusMap.parse("2,1,1,1")


def test_parse_and_validate():
    assert CAT.trace == 3 and CAT.det == 1
    with pytest.raises(ValueError):
        TorusMap.parse("2,1,1,2")
    with pytest.raises(ValueError):
        TorusMap.parse("1,2,3")
    assert not is_anosov(TorusMap.parse("1,1,0,1"))
    assert is_anosov(TorusMap.parse("-3,1,-1,0"))


def test_cat_map_counts_frozen():
    assert [periodic_points(CAT, k)[0] for k in range(1, 6)] == [1, 5, 16, 45, 121]


def test_find_power_cat_map():
    k, pairs = find_power(CAT, 8, 4)
    assert k == 3
    assert [[str(p) for p in pr] for pr in pairs] == [["0,1/4", "0,3/4"], ["1/4,0", "3/4,0"]]


def test_two_torsion_of_cat_cube():
    fixed, pairs = involution_classify(periodic_points(CAT, 3)[1])
    assert [str(p) for p in fixed] == ["0,0", "0,1/2", "1/2,0", "1/2,1/2"]
    assert len(pairs) == 6


def test_singular_power():
    with pytest.raises(SingularError):
        periodic_points(TorusMap.parse("1,1,0,1"), 2)
    with pytest.raises(ValueError):
        find_power(TorusMap.parse("0,-1,1,0"), 8, 4)


def test_point_reduction_and_order():
    p = TorusPoint(Fraction(5, 4), Fraction(-1, 3))
    assert str(p) == "1/4,2/3"
    assert str(-p) == "3/4,1/3"
    assert TorusPoint(0, Fraction(1, 2)).is_two_torsion()
    assert TorusPoint(0, 0) < TorusPoint(Fraction(1, 2), 0)


@pytest.mark.parametrize("spec", ["2,1,1,1", "3,2,1,1"])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_counts_match_trace_and_brute_force(spec, k):
    t = TorusMap.parse(spec)
    count, pts = periodic_points(t, k)
    assert count == abs(2 - t.power(k).trace)
    assert set(pts) == brute_fixed_points(t, k)


hyperbolic = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)).filter(
    lambda v: v[1] != 0 and (v[0] * v[2] - 1) % v[1] == 0).map(
    lambda v: TorusMap(((v[0], v[1]), ((v[0] * v[2] - 1) // v[1], v[2])))).filter(is_anosov)


@given(hyperbolic, st.integers(1, 3))
def test_fixed_points_are_fixed_and_negation_closed(t, k):
    count, pts = periodic_points(t, k)
    tk = t.power(k)
    assert all(tk(p) == p for p in pts)
    assert set(pts) == {-p for p in pts}
    assert len(set(pts)) == count


@given(hyperbolic, st.integers(1, 3), st.integers(1, 3))
def test_power_law(t, i, j):
    assert t.power(i).compose(t.power(j)) == t.power(i + j)
    assert t.power(-i).compose(t.power(i)) == TorusMap(((1, 0), (0, 1)))
