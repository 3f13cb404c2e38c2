import json
from math import gcd, prod

import pytest
import sympy
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from orbicover.abelian import AbelianInvariants, mat_pow
from orbicover.covers import abelian_cover, subgroup_presentation
from orbicover.dynamics import TorusMap, is_anosov
from orbicover.lifting import (LiftingError, determinant, free_part_action, gl2_order, lift_automorphism,
                               lifted_abelian_action, lifts_through, mapping_torus_h1, minimal_lifting_power,
                               mod2_subcase, pointwise_fiber_power, punctured_torus_automorphism, trace,
                               verify_lemma)
from orbicover.orbifold import OrbifoldPresentation
from orbicover.permcore import FiniteAbelianType

from oracles import torus_bundle_h1_normal_form

CAT = TorusMap.parse("2,1,1,1")
TORUS = OrbifoldPresentation(1, ())

sl2 = st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)).filter(
    lambda v: v[1] != 0 and (v[0] * v[2] - 1) % v[1] == 0).map(
    lambda v: TorusMap(((v[0], v[1]), ((v[0] * v[2] - 1) // v[1], v[2]))))


def closed_torus_aut(t):
    return punctured_torus_automorphism(t, [], domain=TORUS)


def test_gl2_orders():
    assert [gl2_order(n) for n in (2, 3, 4, 6)] == [6, 48, 96, 288]


def test_mod2_subcase():
    r = mod2_subcase(CAT)
    assert r["lifts_at_1"] is False
    assert r["k"] == 3 and r["k_pointwise"] == 3


def test_mod2_lift_action():
    cover = abelian_cover(TORUS, FiniteAbelianType((2,)), [(1,), (0,)])
    psi = closed_torus_aut(CAT)
    assert lifts_through(psi, cover) is None
    phi = lifted_abelian_action(psi, cover, 3)
    act = free_part_action(subgroup_presentation(cover), phi)
    # the double cover is a torus and the lift of A^3 is conjugate to A^3 over Q
    assert (trace(act), determinant(act)) == (18, 1)
    lifted = lift_automorphism(closed_torus_aut(CAT.power(3)), cover)
    assert lifted.relations_hold_abelian()


def test_cap_exceeded_is_an_error():
    cover = abelian_cover(TORUS, FiniteAbelianType((2,)), [(1,), (0,)])
    with pytest.raises(LiftingError):
        minimal_lifting_power(closed_torus_aut(CAT), cover, cap=2)
    with pytest.raises(LiftingError):
        pointwise_fiber_power(closed_torus_aut(CAT), cover, cap=2)


@st.composite
def cyclic_torus_covers(draw):
    n = draw(st.integers(2, 5))
    u, v = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
    assume(gcd(gcd(u, v), n) == 1)
    return n, (u, v)


def brute_powers(t, n, rho):
    """Least k with rho A^k = c rho for a unit c, and least k with c = 1."""
    first = pointwise = None
    for k in range(1, gl2_order(n) + 1):
        (a, b), (c, d) = mat_pow(t.matrix, k)
        row = ((rho[0] * a + rho[1] * c) % n, (rho[0] * b + rho[1] * d) % n)
        units = [s for s in range(1, n) if gcd(s, n) == 1]
        if first is None and any(row == ((s * rho[0]) % n, (s * rho[1]) % n) for s in units):
            first = k
        if row == rho:
            pointwise = k
            break
    return first, pointwise


@settings(max_examples=30)
@given(st.sampled_from(["2,1,1,1", "3,2,1,1", "1,1,1,2", "3,1,2,1"]), cyclic_torus_covers())
def test_lifting_powers_match_kernel_criterion(spec, cov):
    # a regular Z/n cover of the torus: psi^k lifts iff it preserves ker(rho)
    t = TorusMap.parse(spec)
    n, rho = cov
    cover = abelian_cover(TORUS, FiniteAbelianType((n,)), [(rho[0],), (rho[1],)])
    psi = closed_torus_aut(t)
    first, pointwise = brute_powers(t, n, rho)
    assert minimal_lifting_power(psi, cover)[0] == first
    assert pointwise_fiber_power(psi, cover) == pointwise


@pytest.mark.parametrize("spec, expected", [
    ("2,1,1,1", AbelianInvariants(1)),
    ("1,0,0,1", AbelianInvariants(3)),
    ("1,1,0,1", AbelianInvariants(2)),
    ("-1,0,0,-1", AbelianInvariants(1, (2, 2))),
])
def test_torus_bundle_h1_frozen(spec, expected):
    t = TorusMap.parse(spec)
    assert mapping_torus_h1(TORUS, t.matrix) == expected


@given(sl2)
def test_torus_bundle_h1_normal_form(t):
    h = mapping_torus_h1(TORUS, [list(r) for r in t.matrix])
    assert (h.free_rank, h.torsion) == torus_bundle_h1_normal_form(t.matrix)
    if is_anosov(t):
        assert h.free_rank == 1
        assert prod(h.torsion) == abs(int((sympy.Matrix(t.matrix) - sympy.eye(2)).det()))


@pytest.fixture(scope="module")
def lemma23():
    return verify_lemma(2, 3, CAT)


def test_lemma_2_3(lemma23):
    assert lemma23.passed
    assert lemma23.base_power == 3 and lemma23.psi_power == 72 and lemma23.total_power == 216
    powers = {a.arrow: (a.lift_power, a.pointwise_power, a.cone_fibre_power) for a in lemma23.arrows}
    assert powers == {"S2A->T": (2, 2, 4), "S2B->T": (2, 2, 4), "S5->S2A": (2, 2, 4), "S5->S2B": (2, 2, 4),
                      "Sg->S5": (12, 12, 72)}
    assert all(a.alpha_identity and a.holds_at_final for a in lemma23.arrows)


def test_lemma_homology_evidence(lemma23):
    h = lemma23.as_dict()["h1"]
    assert h["Sigma2A"]["manifold"] == h["Sigma2B"]["manifold"]
    assert h["Sigma2A"]["link_complement"] == h["Sigma2B"]["link_complement"]
    assert h["Sigma2A"]["link_components"] == 5
    assert h["Sigma2A"]["orbifold"] != h["Sigma2B"]["orbifold"]


def test_lemma_json_roundtrip(lemma23):
    d = lemma23.as_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["marked_points"] == {"a1": "0,1/4", "a2": "0,3/4", "b1": "1/4,0", "b2": "3/4,0"}


def test_lemma_cap_failure():
    r = verify_lemma(2, 3, CAT, power_cap=1)
    assert not r.passed
    assert r.failures and all("no power up to 1" in f for f in r.failures)
