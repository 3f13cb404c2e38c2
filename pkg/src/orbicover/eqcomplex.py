"""Equivariant piece decompositions of surfaces and their quotient orbifolds.

A surface is a union of pieces (holed spheres, annuli, genus-``h`` pieces
with two holes) glued along circles.  Group elements are permutations of
*atoms*: pieces, gluing circles and special points.  Special points are
the only points with non-trivial stabilizers (rotation centres on fixed
pieces), so fixed-point data and quotient signatures are read off atoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .orbifold import OrbifoldSignature, riemann_hurwitz_check
from .permcore import Permutation, PermGroup, closure


@dataclass(frozen=True)
class Piece:
    name: str
    kind: str  # "sphere", "annulus" or "handle"
    holes: int
    genus: int = 0

    @property
    def euler(self) -> int:
        if self.kind == "handle":
            return -2 * self.genus
        return 2 - self.holes


@dataclass(frozen=True)
class Circle:
    name: str
    pieces: tuple[int, int]


@dataclass(frozen=True)
class SpecialPoint:
    name: str
    piece: int
    label: str = ""  # marking symbol, e.g. "m" or "n"


@dataclass
class SymmetryGroupLabel:
    kind: str
    generators: dict[str, Permutation]
    relations: list[tuple[str, ...]] = field(default_factory=list)

    def element(self, word: str | Sequence[str]) -> Permutation:
        """Product of named generators; ``"q r1"`` or ``["q", "r1"]``, ``x'`` for inverses."""
        names = word.split() if isinstance(word, str) else list(word)
        degree = next(iter(self.generators.values())).degree
        out = Permutation.identity(degree)
        for name in names:
            inv = name.endswith("'")
            p = self.generators[name.rstrip("'")]
            out = out * (~p if inv else p)
        return out

    def relations_hold(self) -> bool:
        return all(self.element(r).is_identity() for r in self.relations)


class PieceSurface:
    def __init__(self, pieces: Sequence[Piece], circles: Sequence[Circle], points: Sequence[SpecialPoint],
                 group: SymmetryGroupLabel):
        self.pieces = list(pieces)
        self.circles = list(circles)
        self.points = list(points)
        self.group = group
        self._check()

    @property
    def natoms(self) -> int:
        return len(self.pieces) + len(self.circles) + len(self.points)

    def piece_atom(self, i: int) -> int:
        return i

    def circle_atom(self, i: int) -> int:
        return len(self.pieces) + i

    def point_atom(self, i: int) -> int:
        return len(self.pieces) + len(self.circles) + i

    def _check(self) -> None:
        holes = [0] * len(self.pieces)
        for c in self.circles:
            for p in c.pieces:
                holes[p] += 1
        for piece, h in zip(self.pieces, holes):
            if piece.holes != h:
                raise ValueError(f"piece {piece.name} has {h} glued holes, expected {piece.holes}")
        if (2 - self.euler) % 2:
            raise ValueError("odd Euler characteristic")
        if not self.group.relations_hold():
            raise ValueError(f"relations of {self.group.kind} fail in the piece action")
        if not self.is_equivariant():
            raise ValueError("action does not respect the gluings")

    def is_equivariant(self) -> bool:
        """Every element sends pieces, circles and points to atoms of the same type,
        a circle's pieces to the image circle's pieces and a point's piece along."""
        np_, nc = len(self.pieces), len(self.circles)
        for g in self.group.generators.values():
            if g.degree != self.natoms:
                return False
            for i in range(np_):
                j = g(i)
                if j >= np_ or self.pieces[j].euler != self.pieces[i].euler:
                    return False
            for i, c in enumerate(self.circles):
                j = g(self.circle_atom(i)) - np_
                if not 0 <= j < nc:
                    return False
                if sorted(g(p) for p in c.pieces) != sorted(self.circles[j].pieces):
                    return False
            for i, pt in enumerate(self.points):
                j = g(self.point_atom(i)) - np_ - nc
                if not 0 <= j < len(self.points):
                    return False
                if self.points[j].piece != g(pt.piece):
                    return False
        return True

    @property
    def euler(self) -> int:
        return sum(p.euler for p in self.pieces)

    @property
    def genus(self) -> int:
        return (2 - self.euler) // 2

    def action_group(self, generators: Sequence[Permutation] | None = None) -> PermGroup:
        gens = list(self.group.generators.values()) if generators is None else list(generators)
        return closure(gens, self.natoms)

    def to_dict(self) -> dict:
        np_ = len(self.pieces)
        nc = len(self.circles)
        action = {}
        for name, g in self.group.generators.items():
            rot = []
            for i, pt in enumerate(self.points):
                if g(self.point_atom(i)) == self.point_atom(i):
                    rot.append({"piece": self.pieces[pt.piece].name, "point": pt.name, "order": g.order()})
            action[name] = {
                "pieces": [self.pieces[g(i)].name for i in range(np_)],
                "circles": [self.circles[g(self.circle_atom(i)) - np_].name for i in range(nc)],
                "rotation": rot,
            }
        return {
            "genus": self.genus,
            "euler": self.euler,
            "group": self.group.kind,
            "pieces": [{"name": p.name, "kind": p.kind, "holes": p.holes, "genus": p.genus} for p in self.pieces],
            "gluings": [{"circle": c.name, "pieces": [self.pieces[i].name for i in c.pieces]} for c in self.circles],
            "points": [{"name": p.name, "piece": self.pieces[p.piece].name, "label": p.label} for p in self.points],
            "action": action,
        }


def fixed_point_data(s: PieceSurface, g: Permutation | str) -> list[tuple[str, int]]:
    """Special points fixed by ``g`` with the local rotation order (the order of ``g``)."""
    if isinstance(g, str):
        g = s.group.element(g)
    if g not in s.action_group():
        raise ValueError("element is not in the action group")
    if g.is_identity():
        return []
    order = g.order()
    return [(pt.name, order) for i, pt in enumerate(s.points) if g(s.point_atom(i)) == s.point_atom(i)]


def quotient_signature(s: PieceSurface, subgroup: Sequence[Permutation | str] | None = None,
                       markings: dict[str, int] | None = None) -> OrbifoldSignature:
    """Signature of ``s / H`` with marked points turned into cone points.

    Riemann-Hurwitz on atoms: ``chi(S) = |H| chi(S/H) - sum_p (|Stab_p| - 1)``
    over special points.  A marked point with label ``l`` and stabilizer of
    order ``k`` gives a cone of order ``k * markings[l]``.
    """
    markings = markings or {}
    gens = [s.group.element(x) if isinstance(x, str) else x for x in (subgroup or s.group.generators.values())]
    h = s.action_group(gens)
    order = h.order
    if markings:
        for g in h:
            for i, pt in enumerate(s.points):
                j = g(s.point_atom(i)) - s.point_atom(0)
                if markings.get(pt.label, 1) != markings.get(s.points[j].label, 1):
                    raise ValueError("subgroup does not preserve the cone markings")
    stabs = []
    for i in range(len(s.points)):
        atom = s.point_atom(i)
        stabs.append(sum(1 for g in h if g(atom) == atom))
    total = s.euler + sum(k - 1 for k in stabs)
    if total % order:
        raise ValueError(f"non-integral quotient Euler characteristic {Fraction(total, order)}")
    chi_q = total // order
    if (2 - chi_q) % 2:
        raise ValueError("quotient has odd Euler characteristic")
    cones = []
    seen = set()
    for i, pt in enumerate(s.points):
        atom = s.point_atom(i)
        if atom in seen:
            continue
        seen.update(g(atom) for g in h)
        c = stabs[i] * (markings.get(pt.label, 1) if pt.label else 1)
        if c > 1:
            cones.append(c)
    sig = OrbifoldSignature((2 - chi_q) // 2, tuple(cones))
    marked = tuple(markings.get(pt.label, 1) for pt in s.points if pt.label and markings.get(pt.label, 1) > 1)
    upstairs = OrbifoldSignature(s.genus, marked)
    if not riemann_hurwitz_check(sig, upstairs, order):
        raise AssertionError(f"Riemann-Hurwitz fails: {upstairs} -> {sig} of degree {order}")
    return sig


# --------------------------------------------------------------------------
# Step one: the complete bipartite graph on the Hopf link


def bipartite_surface(m: int, n: int, h: int = 0) -> PieceSurface:
    """Boundary of a neighbourhood of the complete bipartite graph ``K(A, B)``.

    ``|A| = m`` vertices carry ``n``-holed spheres, ``|B| = n`` vertices carry
    ``m``-holed spheres, and each edge a tube (``h = 0``) or a genus-``h`` piece.
    ``Z/m`` (generator ``s``) rotates ``A`` and fixes each ``B`` vertex;
    ``Z/n`` (generator ``t``) does the opposite.  Each sphere carries two
    rotation centres.
    """
    if not (isinstance(m, int) and isinstance(n, int) and isinstance(h, int)):
        raise TypeError("m, n, h must be integers")
    if not n > m >= 2 or h < 0:
        raise ValueError(f"need n > m >= 2 and h >= 0, got m={m}, n={n}, h={h}")
    pieces = [Piece(f"A{i}", "sphere", n) for i in range(m)]
    pieces += [Piece(f"B{j}", "sphere", m) for j in range(n)]
    edge = "annulus" if h == 0 else "handle"
    pieces += [Piece(f"E{i},{j}", edge, 2, h) for i in range(m) for j in range(n)]

    def a(i):
        return i % m

    def b(j):
        return m + j % n

    def e(i, j):
        return m + n + (i % m) * n + (j % n)

    circles, cindex = [], {}
    for i in range(m):
        for j in range(n):
            cindex[("A", i, j)] = len(circles)
            circles.append(Circle(f"A{i}|E{i},{j}", (a(i), e(i, j))))
            cindex[("B", i, j)] = len(circles)
            circles.append(Circle(f"B{j}|E{i},{j}", (b(j), e(i, j))))
    points, pindex = [], {}
    for i in range(m):
        for k in range(2):
            pindex[("A", i, k)] = len(points)
            points.append(SpecialPoint(f"A{i}.{k}", a(i)))
    for j in range(n):
        for k in range(2):
            pindex[("B", j, k)] = len(points)
            points.append(SpecialPoint(f"B{j}.{k}", b(j)))
    npc = len(pieces) + len(circles)

    def translation(u, v):
        img = [0] * (npc + len(points))
        for i in range(m):
            img[a(i)] = a(i + u)
            for j in range(n):
                img[e(i, j)] = e(i + u, j + v)
                for side in "AB":
                    img[len(pieces) + cindex[(side, i, j)]] = len(pieces) + cindex[(side, (i + u) % m, (j + v) % n)]
            for k in range(2):
                img[npc + pindex[("A", i, k)]] = npc + pindex[("A", (i + u) % m, k)]
        for j in range(n):
            img[b(j)] = b(j + v)
            for k in range(2):
                img[npc + pindex[("B", j, k)]] = npc + pindex[("B", (j + v) % n, k)]
        return Permutation(img)

    group = SymmetryGroupLabel(
        f"Z/{m} x Z/{n}",
        {"s": translation(1, 0), "t": translation(0, 1)},
        [("s",) * m, ("t",) * n, ("s", "t", "s'", "t'")],
    )
    return PieceSurface(pieces, circles, points, group)


# --------------------------------------------------------------------------
# Step two: the planar circle pattern C0, ..., C4

_Q = tuple[Fraction, Fraction]


def _orbit(p: _Q) -> list[_Q]:
    """Images of ``p`` under the eight signed permutations of the coordinates."""
    x, y = p
    out = []
    for a, b in ((x, y), (y, x)):
        for sa in (1, -1):
            for sb in (1, -1):
                q = (sa * a, sb * b)
                if q not in out:
                    out.append(q)
    return out


def _quadrant(p: _Q) -> int:
    """Index of the tangency vertex ``V_k`` in the quadrant of ``p`` (counterclockwise from ``(+,+)``)."""
    x, y = p
    return {(1, 1): 0, (-1, 1): 1, (-1, -1): 2, (1, -1): 3}[(1 if x > 0 else -1, 1 if y > 0 else -1)]


def _axis_arc(p: _Q) -> int:
    """Index of the arc ``e_k`` of ``C0`` crossing the half-axis nearest to ``p``."""
    x, y = p
    if abs(x) >= abs(y):
        return 3 if x > 0 else 1
    return 0 if y > 0 else 2


def circle_pattern_surface() -> PieceSurface:
    """Boundary of a neighbourhood of ``C0 u C1 u ... u C4``.

    Pieces: four 4-holed spheres ``V_k`` at the tangency points, four tubes
    ``e_k`` along the arcs of ``C0`` (``e_k`` crosses the half-axis at angle
    ``90(k+1)`` degrees), four tubes ``c_k`` along the loops ``C_{k+1}``.
    The group is generated by the pi-rotations ``r1``, ``r2`` about the
    ``x1``, ``x2`` axes and the quarter turn ``q`` about ``x3``; in the plane
    they are signed permutation matrices, so atoms carry rational plane
    coordinates and the action is computed exactly.  Special points are the
    intersections of the surface with the in-plane symmetry axes.  The
    outermost points on the ``x1`` axis are marked ``m``, on the ``x2`` axis ``n``.
    """
    F = Fraction
    pieces: list[Piece] = []
    coords: list[_Q] = []
    for k, p in enumerate([(F(7, 10), F(7, 10)), (F(-7, 10), F(7, 10)), (F(-7, 10), F(-7, 10)), (F(7, 10), F(-7, 10))]):
        pieces.append(Piece(f"V{k}", "sphere", 4))
        coords.append(p)
    arc_centres = [(F(0), F(1)), (F(-1), F(0)), (F(0), F(-1)), (F(1), F(0))]
    for k, p in enumerate(arc_centres):
        pieces.append(Piece(f"e{k}", "annulus", 2))
        coords.append(p)
    for k in range(4):
        pieces.append(Piece(f"c{k}", "annulus", 2))
        sx, sy = [(1, 1), (-1, 1), (-1, -1), (1, -1)][k]
        coords.append((F(13, 10) * sx, F(13, 10) * sy))

    circles: list[Circle] = []
    for p in _orbit((F(9, 10), F(4, 10))):
        v, e = _quadrant(p), 4 + _axis_arc(p)
        circles.append(Circle(f"{pieces[v].name}|{pieces[e].name}@{p[0]},{p[1]}", (v, e)))
        coords.append(p)
    for p in _orbit((F(8, 10), F(6, 10))):
        v = _quadrant(p)
        circles.append(Circle(f"{pieces[v].name}|c{v}@{p[0]},{p[1]}", (v, 8 + v)))
        coords.append(p)

    points: list[SpecialPoint] = []
    for r, label in ((F(19, 20), ""), (F(21, 20), "axis")):
        for p in _orbit((r, F(0))):
            arc = _axis_arc(p)
            mark = "" if not label else ("m" if p[1] == 0 else "n")
            points.append(SpecialPoint(f"{'outer' if label else 'inner'}-{pieces[4 + arc].name}", 4 + arc, mark))
            coords.append(p)
    for r, where in ((F(6, 10), "V"), (F(3, 4), "V"), (F(5, 4), "c"), (F(27, 20), "c")):
        for p in _orbit((r, r)):
            k = _quadrant(p)
            piece = k if where == "V" else 8 + k
            points.append(SpecialPoint(f"{pieces[piece].name}@{p[0]},{p[1]}", piece))
            coords.append(p)

    index = {}
    for i, p in enumerate(coords):
        kind = 0 if i < len(pieces) else (1 if i < len(pieces) + len(circles) else 2)
        index[(kind, p)] = i

    def linear(a, b, c, d) -> Permutation:
        img = []
        for i, (x, y) in enumerate(coords):
            kind = 0 if i < len(pieces) else (1 if i < len(pieces) + len(circles) else 2)
            img.append(index[(kind, (a * x + b * y, c * x + d * y))])
        return Permutation(img)

    group = SymmetryGroupLabel(
        "dihedral of order 8",
        {"r1": linear(1, 0, 0, -1), "r2": linear(-1, 0, 0, 1), "q": linear(0, -1, 1, 0)},
        [("r1", "r1"), ("r2", "r2"), ("r1", "r2", "r1", "r2"), ("q",) * 4,
         ("q", "r1", "q'", "r2")],
    )
    return PieceSurface(pieces, circles, points, group)


def klein_subgroup(s: PieceSurface) -> list[Permutation]:
    return [s.group.generators["r1"], s.group.generators["r2"]]


def symmetry_datum(s: PieceSurface | None = None) -> dict:
    """The quarter turn: conjugates ``r1`` to ``r2`` and swaps the ``m``/``n`` markings."""
    s = s or circle_pattern_surface()
    q, r1, r2 = (s.group.generators[k] for k in ("q", "r1", "r2"))
    conj = ~q * r1 * q
    label_map = []
    for i, pt in enumerate(s.points):
        if pt.label:
            j = q(s.point_atom(i)) - s.point_atom(0)
            label_map.append({"from": pt.name, "to": s.points[j].name, "labels": [pt.label, s.points[j].label]})
    swaps = all({d["labels"][0], d["labels"][1]} == {"m", "n"} for d in label_map)
    return {
        "element": "q",
        "order": q.order(),
        "conjugates_r1_to_r2": conj == r2 or q * r1 * ~q == r2,
        "swaps_markings": swaps,
        "group_order": s.action_group().order,
        "marked_points": label_map,
    }


def surface_dump(s: PieceSurface) -> dict:
    return s.to_dict()
