from math import lcm, prod

import pytest
import sympy
from hypothesis import given
import hypothesis.strategies as st
from sympy.matrices.normalforms import smith_normal_form

from orbicover.abelian import (AbelianInvariants, cokernel_invariants, int_det, kernel_basis, mat_mul, mat_pow,
                               smith_invariants, solve_integer, solve_mod)
from orbicover.orbifold import OrbifoldSignature, expected_abelianization

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def sympy_invariants(rows):
    snf = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [d for d in diag if d]
    return len(nonzero), sorted(d for d in nonzero if d > 1)


@given(matrices)
def test_smith_matches_sympy(rows):
    rank, factors = smith_invariants(rows, len(rows[0]))
    assert (rank, sorted(factors)) == sympy_invariants(rows)


@given(matrices)
def test_kernel_basis(rows):
    ncols = len(rows[0])
    kern, left = kernel_basis(rows, ncols)
    r = len(kern[0]) if kern and kern[0] else 0
    assert r == ncols - sympy.Matrix(rows).rank()
    if r:
        assert all(v == 0 for row in mat_mul(rows, kern) for v in row)
        assert mat_mul(left, kern) == [[int(i == j) for j in range(r)] for i in range(r)]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_sympy(m):
    assert int_det(m) == int(sympy.Matrix(m).det())


@given(st.lists(st.lists(st.integers(-5, 5), min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(st.integers(-9, 9), min_size=2, max_size=2))
def test_solve_integer(a, x):
    b = [sum(r[j] * x[j] for j in range(2)) for r in a]
    sol = solve_integer(a, b)
    assert sol is not None
    assert [sum(r[j] * sol[j] for j in range(2)) for r in a] == b


def test_solve_mod_and_unsolvable():
    assert solve_integer([[2, 0], [0, 2]], [1, 0]) is None
    x = solve_mod([[2, 0], [0, 3]], [1, 2], 5)
    assert (2 * x[0]) % 5 == 1 and (3 * x[1]) % 5 == 2


def test_mat_pow_fibonacci():
    assert mat_pow([[1, 1], [1, 0]], 10) == [[89, 55], [55, 34]]


def test_cokernel_examples():
    assert cokernel_invariants([[2, 0], [0, 3]], 2) == AbelianInvariants(0, (6,))
    assert cokernel_invariants([], 3) == AbelianInvariants(3)
    assert str(AbelianInvariants(1, (2, 4))) == "Z^1 + Z/2 + Z/4"
    with pytest.raises(ValueError):
        AbelianInvariants(0, (2, 3))


@pytest.mark.parametrize("sig, expected", [
    ("S(0; 2,2,3,3)", AbelianInvariants(0, (6,))),
    ("S(0; 2,3,7)", AbelianInvariants(0)),
    ("S(1; 2,2)", AbelianInvariants(2, (2,))),
    ("S(2;)", AbelianInvariants(4)),
])
def test_orbifold_h1_frozen(sig, expected):
    assert expected_abelianization(OrbifoldSignature.parse(sig)) == expected


@given(st.integers(0, 2), st.lists(st.integers(2, 9), min_size=1, max_size=5))
def test_orbifold_h1_order(g, cones):
    # torsion order of Z^k / <c_j e_j, sum e_j> is prod(c) / lcm(c)
    inv = expected_abelianization(OrbifoldSignature(g, tuple(cones)))
    assert inv.free_rank == 2 * g
    assert prod(inv.torsion) == prod(cones) // lcm(*cones)
