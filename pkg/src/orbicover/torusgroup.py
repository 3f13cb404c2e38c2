"""Action of a linear torus map on pi_1 of the marked torus.

The marked torus ``T^2 - P`` is cut along a vertical circle ``V``
(``x = eps``), a horizontal circle ``H`` (``y = eps'``) and one nearly
vertical tail from each marked point down to ``H``.  The complement is a
disc containing the basepoint, so any based loop is determined by the
sequence of arcs it crosses.  Crossing generators are

* ``a``  -- crossing ``V`` rightwards,
* ``B0`` -- crossing the leftmost piece of ``H`` upwards,
* ``X_p`` -- crossing the tail of ``p`` from left to right (a positive loop
  around ``p``).

Crossing the ``j``-th piece of ``H`` is ``B0 X_{f1} ... X_{fj}`` where ``f1, f2, ...``
are the tails meeting ``H`` from the left.  Loops are polylines in the
plane with exact rational vertices; the map acts on them linearly and the
image is read back as a word.  The small offsets ``eps``, tail tilt, loop
radii are rationals chosen far below the spacing of the marked points;
any exact coincidence is detected and the computation retried with
different offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Sequence

from . import words as W
from .dynamics import TorusMap, TorusPoint

Point = tuple[Fraction, Fraction]

# (eps, eps', tilt, radius, approach height / eps'); the last ratio must
# not be 1/d for a matrix entry d, or (0, eta) lands on H
_OFFSET_CHOICES = [
    (Fraction(7, 11), Fraction(5, 13), Fraction(3, 7), Fraction(2, 9), Fraction(5, 11)),
    (Fraction(8, 17), Fraction(9, 19), Fraction(4, 11), Fraction(3, 13), Fraction(7, 13)),
    (Fraction(13, 23), Fraction(11, 29), Fraction(5, 17), Fraction(4, 19), Fraction(6, 17)),
    (Fraction(19, 31), Fraction(16, 37), Fraction(7, 23), Fraction(5, 29), Fraction(9, 19)),
]


class Degenerate(Exception):
    """A path met a vertex of the cut system; retry with other offsets."""


@dataclass
class CutSystem:
    marked: list[Point]  # cell representatives, each coordinate in (-1, 0]
    eps: Fraction
    eps_h: Fraction
    tilt: Fraction
    radius: Fraction
    eta: Fraction  # height of the approach paths, in (0, eps')

    def __post_init__(self):
        bottom = self.eps_h - 1
        self.tails = []  # (tip, foot) in the base cell
        for px, py in self.marked:
            foot = (px - self.tilt * (py - bottom), bottom)
            self.tails.append(((px, py), foot))
        order = sorted(range(len(self.marked)), key=lambda i: self.tails[i][1][0])
        self.feet_order = order  # puncture index of the j-th foot from the left
        self.feet_x = [self.tails[i][1][0] for i in order]
        if len(set(self.feet_x)) != len(self.feet_x):
            raise Degenerate("two tails share a foot")

    # generator numbering in the crossing group: 0 = a, 1 = B0, 2 + p = X_p
    @property
    def ngens(self) -> int:
        return 2 + len(self.marked)

    def h_piece_word(self, j: int) -> W.Word:
        return (2,) + tuple(3 + self.feet_order[i] for i in range(j))

    def read(self, path: Sequence[Point]) -> W.Word:
        """Crossing word of a polyline (closed up to a lattice translation)."""
        letters: list[tuple[Fraction, int, W.Word]] = []
        for s in range(len(path) - 1):
            p, q = path[s], path[s + 1]
            hits = self._segment_hits(p, q)
            for t, word in hits:
                if (t == 0 and s > 0) or (t == 1 and s < len(path) - 2):
                    raise Degenerate("path vertex on a cut arc")
                if t == 0 or t == 1:
                    raise Degenerate("path endpoint on a cut arc")
            hits.sort(key=lambda h: h[0])
            for (t1, _), (t2, _) in zip(hits, hits[1:]):
                if t1 == t2:
                    raise Degenerate("simultaneous crossings")
            letters.extend((Fraction(s) + t, 0, w) for t, w in hits)
        return W.reduce(x for _, _, w in letters for x in w)

    def _segment_hits(self, p: Point, q: Point) -> list[tuple[Fraction, W.Word]]:
        (px, py), (qx, qy) = p, q
        dx, dy = qx - px, qy - py
        hits: list[tuple[Fraction, W.Word]] = []
        lo_x, hi_x = min(px, qx), max(px, qx)
        lo_y, hi_y = min(py, qy), max(py, qy)
        if dx:
            for i in range(ceil(lo_x - self.eps), floor(hi_x - self.eps) + 1):
                t = (self.eps + i - px) / dx
                if 0 <= t <= 1:
                    hits.append((t, (1,) if dx > 0 else (-1,)))
        elif (px - self.eps).denominator == 1:
            raise Degenerate("segment runs along V")
        if dy:
            for j in range(ceil(lo_y - self.eps_h), floor(hi_y - self.eps_h) + 1):
                t = (self.eps_h + j - py) / dy
                if not 0 <= t <= 1:
                    continue
                x = px + t * dx
                xc = x - floor(x - (self.eps - 1))
                if xc == self.eps - 1:
                    raise Degenerate("segment through a corner")
                idx = 0
                for fx in self.feet_x:
                    if fx == xc:
                        raise Degenerate("segment through a tail foot")
                    if fx < xc:
                        idx += 1
                word = self.h_piece_word(idx)
                hits.append((t, word if dy > 0 else W.inverse(word)))
        elif (py - self.eps_h).denominator == 1:
            raise Degenerate("segment runs along H")
        for k, ((tx, ty), (fx, fy)) in enumerate(self.tails):
            ex, ey = fx - tx, fy - ty
            denom = dx * ey - dy * ex
            for i in range(floor(lo_x - tx) - 1, ceil(hi_x - fx) + 2):
                for j in range(floor(lo_y - ty) - 1, ceil(hi_y - fy) + 2):
                    ox, oy = tx + i - px, ty + j - py
                    if denom == 0:
                        if ox * dy - oy * dx == 0 and (dx or dy):
                            # collinear; overlap only matters if the ranges meet
                            if min(tx + i, fx + i) <= hi_x and max(tx + i, fx + i) >= lo_x and \
                               min(ty + j, fy + j) <= hi_y and max(ty + j, fy + j) >= lo_y:
                                raise Degenerate("segment along a tail")
                        continue
                    t = (ox * ey - oy * ex) / denom
                    u = (ox * dy - oy * dx) / denom
                    if 0 <= t <= 1 and 0 <= u <= 1:
                        if u == 0:
                            raise Degenerate("path through a marked point")
                        if u == 1:
                            raise Degenerate("segment through a tail foot")
                        # tail points down: crossing it left to right is X, else X^-1
                        sign = ex * dy - ey * dx
                        hits.append((t, (3 + k,) if sign > 0 else (-(3 + k),)))
        return hits

    # loops realising the crossing generators, based at the origin

    def loop_a(self) -> list[Point]:
        eta = self.eta
        return [(Fraction(0), Fraction(0)), (Fraction(0), eta), (Fraction(1), eta), (Fraction(1), Fraction(0))]

    def loop_b(self) -> list[Point]:
        eta = self.eta
        x0 = 2 * self.eps - 1
        return [(Fraction(0), Fraction(0)), (Fraction(0), eta), (x0, eta), (x0, 1 + eta),
                (Fraction(0), 1 + eta), (Fraction(0), Fraction(1))]

    def loop_x(self, k: int) -> list[Point]:
        eta = self.eta
        px, py = self.marked[k]
        r = self.radius
        r2 = r * Fraction(3, 5)
        o = (Fraction(0), Fraction(0))
        approach = [o, (Fraction(0), eta), (px + r2, eta), (px + r2, py)]
        circle = [(px + r2, py + r), (px - r, py + r), (px - r, py - r), (px + r2, py - r), (px + r2, py)]
        return approach + circle + approach[-2::-1]

    def corner_loop(self) -> list[Point]:
        """Small loop around the corner of the cut system, for self-checks."""
        eta = self.eta
        r = self.radius
        cx, cy = self.eps, self.eps_h
        start = (Fraction(0), Fraction(0))
        return [start, (Fraction(0), eta), (cx - r, eta), (cx - r, cy - r), (cx + r, cy - r),
                (cx + r, cy + r), (cx - r, cy + r), (cx - r, cy - r), (cx - r, eta), (Fraction(0), eta), start]


def _cell_rep(v: Fraction) -> Fraction:
    v = v % 1
    return v - 1 if v else v


def _make_cut_system(marked: Sequence[TorusPoint], matrix, choice) -> CutSystem:
    s1, s2, s3, s4, s5 = choice
    q = lcm(1, *(p.denominator for p in marked))
    scale = max([1] + [abs(x) for row in matrix for x in row])
    unit = Fraction(1, 1000 * q * scale)
    eps, eps_h = unit * s1, unit * s2
    tilt = unit * s3 / 1000
    radius = tilt * unit * s4
    pts = [(_cell_rep(p.x), _cell_rep(p.y)) for p in marked]
    return CutSystem(pts, eps, eps_h, tilt, radius, eps_h * s5)


def _apply(matrix, path: Sequence[Point]) -> list[Point]:
    (a, b), (c, d) = matrix
    return [(a * x + b * y, c * x + d * y) for x, y in path]


@dataclass
class MarkedTorusAction:
    """Images of ``a1, b1, x1..xk`` under the map, as words in those generators."""

    images: list[W.Word]
    crossing_images: list[W.Word]
    relator_image: W.Word
    cut: CutSystem


def _hurwitz_sort(items: list[tuple[int, W.Word]], target: Sequence[int]):
    """Reorder a product of loops with Hurwitz moves ``(u, v) -> (v, v^-1 u v)``.

    Returns the sorted items and the list of swap positions applied.
    """
    items = list(items)
    moves = []
    rank = {p: i for i, p in enumerate(target)}
    n = len(items)
    for i in range(n):
        for j in range(n - 1 - i):
            if rank[items[j][0]] > rank[items[j + 1][0]]:
                (pu, u), (pv, v) = items[j], items[j + 1]
                items[j], items[j + 1] = (pv, v), (pu, W.concat(W.inverse(v), u, v))
                moves.append(j)
    return items, moves


def marked_torus_action(matrix, marked: Sequence[TorusPoint]) -> MarkedTorusAction:
    """Words for the action of ``matrix`` on ``<a1,b1,x1..xk | [a1,b1] x1...xk>``.

    ``marked`` are already translated so that the basepoint is the origin.
    Generator ``x_j`` is a loop around ``marked[j]``.
    """
    last = None
    for choice in _OFFSET_CHOICES:
        try:
            return _marked_torus_action(matrix, marked, choice)
        except Degenerate as exc:
            last = exc
    raise RuntimeError(f"could not find generic cut offsets: {last}")


def _marked_torus_action(matrix, marked, choice) -> MarkedTorusAction:
    k = len(marked)
    cut = _make_cut_system(marked, matrix, choice)
    loops = [cut.loop_a(), cut.loop_b()] + [cut.loop_x(i) for i in range(k)]
    for g, loop in enumerate(loops):
        if cut.read(loop) != (g + 1,):
            raise AssertionError(f"loop for crossing generator {g} reads {cut.read(loop)}")
    # crossing relation:  a B0 a^-1 B_k^-1 = 1
    ident = tuple(tuple(int(i == j) for j in range(2)) for i in range(2))
    corner = cut.read(_apply(ident, cut.corner_loop()))
    relator = W.concat((1, 2, -1), W.inverse(cut.h_piece_word(k)))
    if not (W.is_conjugate(corner, relator) or W.is_conjugate(corner, W.inverse(relator))):
        raise AssertionError("corner loop does not read as the crossing relator")

    # standard generators (a1, b1, x1..xk) as crossing words:  the relator
    # equals [a, B0] * prod_i Y_i with Y_i = B0 X_{f(k+1-i)}^-1 B0^-1.
    ys = [(cut.feet_order[k - 1 - i], W.concat((2,), (-(3 + cut.feet_order[k - 1 - i]),), (-2,)))
          for i in range(k)]
    zs, moves = _hurwitz_sort(ys, list(range(k)))
    std_to_cross = [(1,), (2,)] + [w for _, w in zs]
    # inverse moves express the Y_i in standard letters (letters 3.. = x_j)
    sym = [(3 + j,) for j in range(k)]
    for pos in reversed(moves):
        p, q = sym[pos], sym[pos + 1]
        sym[pos], sym[pos + 1] = W.concat(p, q, W.inverse(p)), p
    cross_to_std: list[W.Word] = [(1,), (2,)] + [()] * k
    for i, (p, _) in enumerate(ys):
        # X_p = B0^-1 Y_i^-1 B0
        cross_to_std[2 + p] = W.concat((-2,), W.inverse(sym[i]), (2,))
    for g in range(k + 2):
        back = W.substitute(std_to_cross[g], cross_to_std)
        if back != (g + 1,):
            raise AssertionError("generator conversion is not invertible")

    crossing_images = [cut.read(_apply(matrix, loop)) for loop in loops]
    images = [W.substitute(W.substitute(std_to_cross[g], crossing_images), cross_to_std) for g in range(k + 2)]
    std_relator = W.concat(W.commutator((1,), (2,)), tuple(3 + j for j in range(k)))
    relator_image = W.substitute(std_relator, images)
    return MarkedTorusAction(images, crossing_images, relator_image, cut)


def in_relator_closure(word: Sequence[int], k: int) -> bool:
    """Whether ``word`` dies in ``<a,b,x1..xk | [a,b] x1...xk>``.

    With ``k >= 1`` the quotient is free on ``a, b, x1..x_{k-1}`` after
    solving the relator for ``x_k``; with ``k == 0`` it is ``Z^2``.
    """
    if k == 0:
        return W.exponent_vector(word, 2) == [0, 0]
    elim = W.inverse(W.concat(W.commutator((1,), (2,)), tuple(3 + j for j in range(k - 1))))
    images = [(i + 1,) for i in range(k + 1)] + [elim]
    return W.substitute(word, images) == ()


def translate_to_origin(points: Sequence[TorusPoint], basepoint: TorusPoint) -> list[TorusPoint]:
    return [TorusPoint(p.x - basepoint.x, p.y - basepoint.y) for p in points]


def check_fixed(t: TorusMap, points: Sequence[TorusPoint]) -> list[TorusPoint]:
    return [p for p in points if t(p) != p]
