from functools import reduce

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from orbicover import words as W
from orbicover.dynamics import TorusMap, TorusPoint, find_power
from orbicover.lifting import GroupAutomorphism, punctured_torus_automorphism
from orbicover.orbifold import punctured_presentation
from orbicover.torusgroup import check_fixed, in_relator_closure, marked_torus_action, translate_to_origin

CAT = TorusMap.parse("2,1,1,1")
HALF = [TorusPoint.parse(s) for s in ("1/2,0", "0,1/2", "1/2,1/2")]

# generators of the level-2 congruence subgroup: they fix every 2-torsion point
LEVEL2 = [TorusMap.parse(s) for s in ("1,2,0,1", "1,0,2,1", "1,-2,0,1", "1,0,-2,1", "-1,0,0,-1")]


def level2_words(max_size):
    return st.lists(st.sampled_from(LEVEL2), min_size=1, max_size=max_size).map(
        lambda ms: reduce(TorusMap.compose, ms))


level2 = level2_words(3)


def same_in_group(u, v, k):
    return in_relator_closure(W.concat(u, W.inverse(v)), k)


@pytest.fixture(scope="module")
def cat_cube():
    k, pairs = find_power(CAT, 8, 4)
    marked = [p for pr in pairs for p in pr]
    return CAT.power(k), marked


def test_cat_cube_frozen(cat_cube):
    t, marked = cat_cube
    aut = punctured_torus_automorphism(t, marked)
    assert [W.exponent_vector(w, 6)[:2] for w in aut.images[:2]] == [[13, 8], [8, 5]]
    for j in range(4):
        assert W.is_conjugate(aut.images[2 + j], W.gen(2 + j))


def test_identity_map(cat_cube):
    _, marked = cat_cube
    aut = punctured_torus_automorphism(TorusMap(((1, 0), (0, 1))), marked)
    assert aut.is_identity()


def test_parabolic_frozen():
    aut = punctured_torus_automorphism(TorusMap.parse("1,1,0,1"), [TorusPoint.parse("1/2,0")])
    assert aut.images == ((1,), (-3, 2, 1), (-3, 2, 1, -2, 3, 2, -1, -2, 3))


def test_inverse_composes_to_identity(cat_cube):
    t, marked = cat_cube
    fwd = punctured_torus_automorphism(t, marked)
    back = punctured_torus_automorphism(t.power(-1), marked)
    assert all(same_in_group(w, W.gen(i), 4) for i, w in enumerate(fwd.then(back).images))


def test_rejects_unfixed_points():
    with pytest.raises(ValueError):
        punctured_torus_automorphism(CAT, [TorusPoint.parse("1/3,0")])
    with pytest.raises(ValueError):
        punctured_torus_automorphism(CAT.power(3), [TorusPoint.parse("0,0")])
    assert check_fixed(CAT, [TorusPoint(0, 0)]) == []


def test_relator_closure():
    k = 2
    rel = W.concat(W.commutator((1,), (2,)), (3, 4))
    assert in_relator_closure(rel, k)
    assert in_relator_closure(W.concat((5,) * 0, (2,), rel, (-2,)), k)
    assert not in_relator_closure((3,), k)
    assert in_relator_closure((1, 2, -1, -2), 0)


def test_translate():
    assert [str(p) for p in translate_to_origin(HALF, HALF[0])] == ["0,0", "1/2,1/2", "0,1/2"]


@settings(max_examples=30)
@given(level2, st.integers(0, 3))
def test_action_is_valid(t, k):
    marked = HALF[:k]
    act = marked_torus_action(t.matrix, marked)
    assert in_relator_closure(act.relator_image, k)
    (a, b), (c, d) = t.matrix
    assert [W.exponent_vector(w, k + 2)[:2] for w in act.images[:2]] == [[a, c], [b, d]]


@settings(max_examples=15)
@given(level2_words(2), level2_words(2))
def test_composition_law(s, t):
    # (t s)_* = t_* o s_*  in the marked torus group
    marked = HALF[:2]
    ps, pt = punctured_torus_automorphism(s, marked), punctured_torus_automorphism(t, marked)
    pts = punctured_torus_automorphism(t.compose(s), marked)
    comp = ps.then(pt)
    assert all(same_in_group(u, v, 2) for u, v in zip(comp.images, pts.images))


def test_abelian_matrix_layout():
    dom = punctured_presentation(1, 1)
    aut = GroupAutomorphism(dom, [(1, 2), (2,), (3,)])
    assert aut.abelian_matrix() == [[1, 0, 0], [1, 1, 0], [0, 0, 1]]
    assert aut.relations_hold_abelian()
    assert aut.power(3).abelian_matrix() == [[1, 0, 0], [3, 1, 0], [0, 0, 1]]
    with pytest.raises(ValueError):
        GroupAutomorphism(dom, [(1,)])


sl2 = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)).filter(
    lambda v: v[1] != 0 and (v[0] * v[2] - 1) % v[1] == 0).map(
    lambda v: TorusMap(((v[0], v[1]), ((v[0] * v[2] - 1) // v[1], v[2]))))


@given(sl2)
def test_unmarked_action_is_the_matrix(t):
    # regression: an entry 2 once mapped every approach path onto a cut
    aut = punctured_torus_automorphism(t, [])
    (a, b), (c, d) = t.matrix
    assert [W.exponent_vector(w, 2) for w in aut.images] == [[a, c], [b, d]]


def test_entry_two_regression():
    aut = punctured_torus_automorphism(TorusMap.parse("1,1,1,2"), [])
    assert [W.exponent_vector(w, 2) for w in aut.images] == [[1, 1], [1, 2]]
