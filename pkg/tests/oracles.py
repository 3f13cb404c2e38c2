"""Independent reference computations used by several test modules."""

from fractions import Fraction

from orbicover.dynamics import TorusMap, TorusPoint


def brute_fixed_points(t: TorusMap, k: int) -> set[TorusPoint]:
    """Scan the grid ``(1/N) Z^2`` with ``N = |det(A^k - I)|``; every fixed
    point has coordinates in it by Cramer's rule."""
    (a, b), (c, d) = t.power(k).matrix
    n = abs((a - 1) * (d - 1) - b * c)
    out = set()
    for i in range(n):
        for j in range(n):
            if ((a - 1) * i + b * j) % n == 0 and (c * i + (d - 1) * j) % n == 0:
                out.add(TorusPoint(Fraction(i, n), Fraction(j, n)))
    return out


def torus_bundle_h1_normal_form(matrix) -> tuple[int, tuple[int, ...]]:
    """``Z + coker(A - I)`` for a 2x2 integer matrix, by hand: the gcd of
    the entries and the determinant give the invariant factors."""
    from math import gcd

    (a, b), (c, d) = matrix
    m = [a - 1, b, c, d - 1]
    g = 0
    for v in m:
        g = gcd(g, v)
    det = abs(m[0] * m[3] - m[1] * m[2])
    if g == 0:
        return 3, ()
    if det == 0:
        return 2, tuple(x for x in (g,) if x > 1)
    return 1, tuple(x for x in (g, det // g) if x > 1)
