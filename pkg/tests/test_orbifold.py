from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from orbicover.orbifold import (OrbifoldSignature, euler_characteristic, genus_from_chi, presentation,
                                punctured_presentation, riemann_hurwitz_check)

signatures = st.builds(OrbifoldSignature, st.integers(0, 6), st.lists(st.integers(2, 12), max_size=6).map(tuple))


def test_parse_and_print():
    s = OrbifoldSignature.parse("S(2; 4,2,2)")
    assert s.cone_orders == (2, 2, 4)
    assert str(s) == "S(2; 2,2,4)"
    assert str(OrbifoldSignature(3)) == "S(3;)"
    with pytest.raises(ValueError):
        OrbifoldSignature.parse("S(1, 2)")
    with pytest.raises(ValueError):
        OrbifoldSignature(0, (1,))


def test_euler_characteristics():
    assert euler_characteristic(OrbifoldSignature(0, (2, 2, 2, 2))) == 0
    assert euler_characteristic(OrbifoldSignature(0, (2, 3, 7))) == Fraction(-1, 42)
    assert euler_characteristic(OrbifoldSignature(32)) == -62


def test_riemann_hurwitz_tower_values():
    # S_g over T at (m, n) = (2, 3): degree 24
    t = OrbifoldSignature(1, (2, 2, 4, 6))
    assert riemann_hurwitz_check(t, OrbifoldSignature(32), 24)
    assert not riemann_hurwitz_check(t, OrbifoldSignature(31), 24)
    with pytest.raises(ValueError):
        riemann_hurwitz_check(t, t, 0)


def test_presentation_shape():
    p = presentation(OrbifoldSignature(1, (2, 3)))
    assert p.generators == ("a1", "b1", "x1", "x2")
    assert p.relations == ((3, 3), (4, 4, 4), (1, 2, -1, -2, 3, 4))
    q = punctured_presentation(1, 2)
    assert q.is_punctured and q.relations == ((1, 2, -1, -2, 3, 4),)
    with pytest.raises(ValueError):
        q.signature


@given(signatures)
def test_genus_recovered_from_chi(s):
    assert genus_from_chi(euler_characteristic(s), s.cone_orders) == s.genus


@given(signatures, st.integers(1, 10))
def test_unbranched_cover_multiplicative(s, d):
    if s.cone_orders or s.genus == 0:
        return
    g = d * (s.genus - 1) + 1
    assert riemann_hurwitz_check(s, OrbifoldSignature(g), d)
