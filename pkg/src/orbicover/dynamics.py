"""Linear torus maps: periodic points and the elliptic involution ``x -> -x``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .abelian import column_echelon, mat_mul, mat_pow


@dataclass(frozen=True)
class TorusMap:
    """Automorphism of ``R^2/Z^2`` induced by an integer matrix of determinant 1."""

    matrix: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(m) != 2 or any(len(r) != 2 for r in m):
            raise ValueError("expected a 2x2 matrix")
        object.__setattr__(self, "matrix", m)
        if self.det != 1:
            raise ValueError(f"determinant must be 1, got {self.det}")

    @classmethod
    def parse(cls, text: str) -> "TorusMap":
        """Row-major ``"a,b,c,d"``."""
        parts = [int(t) for t in text.replace(" ", "").split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four integers, got {text!r}")
        return cls(((parts[0], parts[1]), (parts[2], parts[3])))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    @property
    def trace(self) -> int:
        return self.matrix[0][0] + self.matrix[1][1]

    def power(self, k: int) -> "TorusMap":
        if k < 0:
            (a, b), (c, d) = self.matrix
            return TorusMap(((d, -b), (-c, a))).power(-k)
        m = mat_pow(self.matrix, k)
        return TorusMap(tuple(tuple(r) for r in m))

    def compose(self, other: "TorusMap") -> "TorusMap":
        """``self`` after ``other``."""
        return TorusMap(tuple(tuple(r) for r in mat_mul(self.matrix, other.matrix)))

    def __call__(self, p: "TorusPoint") -> "TorusPoint":
        (a, b), (c, d) = self.matrix
        return TorusPoint(a * p.x + b * p.y, c * p.x + d * p.y)

    def __str__(self) -> str:
        (a, b), (c, d) = self.matrix
        return f"{a},{b},{c},{d}"


@dataclass(frozen=True)
class TorusPoint:
    """Rational point of the torus, coordinates reduced into ``[0, 1)``."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x) % 1)
        object.__setattr__(self, "y", Fraction(self.y) % 1)

    @classmethod
    def parse(cls, text: str) -> "TorusPoint":
        a, b = text.replace(" ", "").split(",")
        return cls(Fraction(a), Fraction(b))

    @property
    def denominator(self) -> int:
        return lcm(self.x.denominator, self.y.denominator)

    def sort_key(self) -> tuple[int, int, int]:
        q = self.denominator
        return (q, int(self.x * q), int(self.y * q))

    def __neg__(self) -> "TorusPoint":
        return TorusPoint(-self.x, -self.y)

    def is_two_torsion(self) -> bool:
        return (2 * self.x) % 1 == 0 and (2 * self.y) % 1 == 0

    def __lt__(self, other: "TorusPoint") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


def is_anosov(t: TorusMap) -> bool:
    return abs(t.trace) > 2


class SingularError(ValueError):
    pass


def periodic_points(t: TorusMap, k: int) -> tuple[int, list[TorusPoint]]:
    """Fixed points of ``t^k``: the solutions of ``(A^k - I) x`` integral.

    Coset representatives of ``Z^2 / (A^k - I) Z^2`` come from the column
    Hermite form of ``A^k - I``; each is pulled back through the inverse.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    (a, b), (c, d) = t.power(k).matrix
    m = [[a - 1, b], [c, d - 1]]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if det == 0:
        raise SingularError(f"A^{k} - I is singular")
    h, _, _, pivots = column_echelon(m, 2)
    h11, h22 = abs(h[0][0]), abs(h[1][1])
    assert h11 * h22 == abs(det)
    adj = [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
    pts = set()
    for i in range(h11):
        for j in range(h22):
            x = Fraction(adj[0][0] * i + adj[0][1] * j, det)
            y = Fraction(adj[1][0] * i + adj[1][1] * j, det)
            pts.add(TorusPoint(x, y))
    out = sorted(pts)
    if len(out) != abs(det):
        raise AssertionError("periodic point enumeration lost points")
    return abs(det), out


def involution_classify(pts: Sequence[TorusPoint]) -> tuple[list[TorusPoint], list[tuple[TorusPoint, TorusPoint]]]:
    """Split a negation-closed set into 2-torsion points and pairs ``{p, -p}``.

    Pairs are ``(p, -p)`` with ``p`` the smaller point, listed in order of ``p``.
    """
    s = set(pts)
    if any(-p not in s for p in s):
        raise ValueError("point set is not closed under x -> -x")
    fixed = sorted(p for p in s if p.is_two_torsion())
    pairs = sorted({tuple(sorted((p, -p))) for p in s if not p.is_two_torsion()})
    return fixed, pairs  # type: ignore[return-value]


def find_power(t: TorusMap, min_fixed: int, min_paired: int, max_k: int = 64
               ) -> tuple[int, list[tuple[TorusPoint, TorusPoint]]]:
    """Least ``k`` with ``|Fix(t^k)| >= min_fixed`` and at least ``min_paired``
    fixed points in ``-I``-pairs.

    Returns ``k`` and the first two pairs in canonical order (fewer if fewer
    exist); the first is used for the order-2 cone points, the second for
    the order ``2m``/``2n`` ones.
    """
    if not is_anosov(t):
        raise ValueError("map is not Anosov")
    for k in range(1, max_k + 1):
        count, pts = periodic_points(t, k)
        if count < min_fixed:
            continue
        _, pairs = involution_classify(pts)
        if 2 * len(pairs) >= min_paired:
            return k, pairs[:2]
    raise RuntimeError(f"no power up to {max_k} meets the fixed-point requirements")
