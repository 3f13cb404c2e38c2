"""Lifting torus automorphisms through covers, and mapping-torus homology.

Automorphisms act on words.  Powers are never expanded into words: the
criterion for ``psi^k`` only needs ``rho o psi^k`` on generators, and
``rho o psi^j (g) = (rho o psi^(j-1))(psi(g))`` is evaluated letter by letter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

import numpy as np
from typing import Sequence

from . import words as W
from .abelian import (AbelianInvariants, cokernel_invariants, int_det, kernel_basis,
                      mat_mul, mat_pow, solve_integer)
from .covers import MonodromyCover, SubgroupPresentation, subgroup_presentation
from .dynamics import TorusMap, TorusPoint
from .orbifold import OrbifoldPresentation, punctured_presentation
from .permcore import Permutation
from .torusgroup import check_fixed, in_relator_closure, marked_torus_action, translate_to_origin


class LiftingError(RuntimeError):
    pass


class GroupAutomorphism:
    """Endomorphism of a presented group given by generator images."""

    def __init__(self, domain, images: Sequence[W.Word], name: str = ""):
        if len(images) != len(domain.generators):
            raise ValueError(f"{len(images)} images for {len(domain.generators)} generators")
        self.domain = domain
        self.images = tuple(W.reduce(w) for w in images)
        self.name = name

    @classmethod
    def identity(cls, domain) -> "GroupAutomorphism":
        return cls(domain, [W.gen(i) for i in range(len(domain.generators))], name="id")

    @property
    def ngens(self) -> int:
        return len(self.images)

    def apply(self, word: Sequence[int]) -> W.Word:
        return W.substitute(word, self.images)

    def then(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """``other o self``: apply ``self`` first."""
        return GroupAutomorphism(self.domain, [other.apply(w) for w in self.images])

    def power(self, k: int) -> "GroupAutomorphism":
        if k < 1:
            raise ValueError("only positive powers are expanded")
        out = self
        for _ in range(k - 1):
            out = out.then(self)
        return out

    def is_identity(self) -> bool:
        return all(w == W.gen(i) for i, w in enumerate(self.images))

    def abelian_matrix(self) -> list[list[int]]:
        """Column ``s`` is the exponent vector of the image of generator ``s``."""
        cols = [W.exponent_vector(w, self.ngens) for w in self.images]
        return [[cols[s][i] for s in range(self.ngens)] for i in range(self.ngens)]

    def relations_hold_abelian(self) -> bool:
        rows = [W.exponent_vector(r, self.ngens) for r in self.domain.relations]
        if not rows:
            return True
        at = [[rows[r][i] for r in range(len(rows))] for i in range(self.ngens)]
        return all(solve_integer(at, W.exponent_vector(self.apply(r), self.ngens)) is not None
                   for r in self.domain.relations)

    def relations_hold_in(self, cover: MonodromyCover) -> bool:
        """Relator images act trivially in the cover's monodromy (a finite quotient)."""
        return all(cover.image_of(self.apply(r)).is_identity() for r in self.domain.relations)

    def __repr__(self) -> str:
        lengths = [len(w) for w in self.images]
        return f"GroupAutomorphism({self.name or '?'}, image lengths {lengths})"


def punctured_torus_automorphism(t: TorusMap, marked: Sequence[TorusPoint], basepoint: TorusPoint | None = None,
                                 domain: OrbifoldPresentation | None = None) -> GroupAutomorphism:
    """``psi_*`` on the torus group with loops ``x_j`` around ``marked[j]``.

    ``domain`` may be a closed orbifold presentation of genus one with one
    cone point per marked point; by default the punctured presentation is
    used.  The three postconditions are checked before returning.
    """
    basepoint = basepoint or TorusPoint(0, 0)
    moved = check_fixed(t, list(marked) + [basepoint])
    if moved:
        raise ValueError(f"points not fixed by {t}: {', '.join(map(str, moved))}")
    if basepoint in set(marked):
        raise ValueError("basepoint is marked")
    if len(set(marked)) != len(marked):
        raise ValueError("marked points repeat")
    k = len(marked)
    if domain is None:
        domain = punctured_presentation(1, k)
    elif domain.genus != 1 or len(domain.cone_orders) != k:
        raise ValueError("domain must be a genus-one presentation with one cone per marked point")
    action = marked_torus_action(t.matrix, translate_to_origin(marked, basepoint))
    aut = GroupAutomorphism(domain, action.images, name=f"psi[{t}]")
    (a, b), (c, d) = t.matrix
    if W.exponent_vector(aut.images[0], k + 2)[:2] != [a, c] or W.exponent_vector(aut.images[1], k + 2)[:2] != [b, d]:
        raise LiftingError("handle images do not abelianize to the matrix")
    for j in range(k):
        if not W.is_conjugate(aut.images[2 + j], W.gen(2 + j)):
            raise LiftingError(f"x{j + 1} is not sent to a conjugate of itself")
    if not in_relator_closure(action.relator_image, k):
        raise LiftingError("long relation is not preserved")
    return aut


def cone_conjugator(aut: GroupAutomorphism, j: int) -> W.Word:
    """``u`` with ``psi(x_j) = u x_j u^-1`` for the ``j``-th cone generator."""
    g = aut.domain.cone_words[j].word
    if len(g) != 1:
        raise ValueError("cone word is not a generator")
    w = aut.images[abs(g[0]) - 1]
    h = len(w) // 2
    if len(w) % 2 != 1 or w[h] != g[0] or W.inverse(w[:h]) != w[h + 1:]:
        raise LiftingError(f"image of cone generator {j} is not a conjugate of it")
    return w[:h]


class PowerTracker:
    """``rho o psi^j`` on generators for ``j = 0, 1, 2, ...``.

    ``cones[j]`` tracks ``rho(U)`` where ``psi^j(x) = U x U^-1`` for each cone
    generator ``x``.
    """

    def __init__(self, aut: GroupAutomorphism, cover: MonodromyCover):
        if cover.base is not aut.domain and cover.base.generators != aut.domain.generators:
            raise ValueError("automorphism and cover live on different presentations")
        self.aut = aut
        self.cover = cover
        self.power = 0
        self.images = list(cover.images)
        self.conjugators = [W.reduce(())] * len(aut.domain.cone_words)
        self._cone_u = [cone_conjugator(aut, j) for j in range(len(aut.domain.cone_words))]
        self.cone_images = [Permutation.identity(cover.degree)] * len(self._cone_u)
        self._schreier = None

    def _eval(self, word: Sequence[int], images, inverses) -> Permutation:
        pts = list(range(self.cover.degree))
        for x in word:
            img = (images[x - 1] if x > 0 else inverses[-x - 1]).images
            pts = [img[i] for i in pts]
        return Permutation(pts)

    def step(self) -> None:
        inverses = [~p for p in self.images]
        # U_{j+1} = psi^j(u) U_j
        self.cone_images = [self._eval(u, self.images, inverses) * c
                            for u, c in zip(self._cone_u, self.cone_images)]
        self.images = [self._eval(w, self.images, inverses) for w in self.aut.images]
        self.power += 1

    def advance_to(self, k: int) -> None:
        if k < self.power:
            raise ValueError("cannot step backwards")
        while self.power < k:
            self.step()

    def schreier_words(self) -> list[W.Word]:
        if self._schreier is None:
            sub = subgroup_presentation(self.cover)
            self._schreier = [sub.parent_word(k) for k in range(sub.ngens)]
        return self._schreier

    def lifts(self) -> bool:
        """``psi^j`` preserves the stabilizer of fibre point 0."""
        images, inverses = self.images, [~p for p in self.images]
        for w in self.schreier_words():
            x = 0
            for letter in w:
                x = images[letter - 1](x) if letter > 0 else inverses[-letter - 1](x)
            if x != 0:
                return False
        return True

    def fibre_map(self) -> Permutation:
        """Action of the lift fixing point 0 on the fibre over the basepoint.

        For a regular cover this is the automorphism ``alpha`` of the deck
        group, transported to the fibre through ``g -> 0.g``.
        """
        sub = subgroup_presentation(self.cover)
        images = self.images
        inverses = [~p for p in images]
        out = []
        for t in sub.transversal:
            x = 0
            for letter in t:
                x = images[letter - 1](x) if letter > 0 else inverses[-letter - 1](x)
            out.append(x)
        return Permutation(out)

    def is_identity_on_fibre(self) -> bool:
        return list(self.images) == list(self.cover.images)

    def cone_fibres_fixed(self) -> bool:
        """The lift fixes every preimage of every cone point.

        Requires ``rho o psi^j = rho``; the preimage reached through fibre
        point ``y`` is then sent to the one reached through ``y.rho(U)``.
        """
        if not self.is_identity_on_fibre():
            return False
        for cw, u in zip(self.aut.domain.cone_words, self.cone_images):
            g = self.cover.image_of(cw.word)
            cycle_of = {}
            for i, cyc in enumerate(g.cycles(include_fixed=True)):
                for y in cyc:
                    cycle_of[y] = i
            if any(cycle_of[y] != cycle_of[u(y)] for y in range(self.cover.degree)):
                return False
        return True


def lifts_through(aut: GroupAutomorphism, cover: MonodromyCover) -> Permutation | None:
    """``alpha`` (as a fibre permutation) if ``psi`` lifts to ``cover``, else ``None``."""
    tr = PowerTracker(aut, cover)
    tr.step()
    return tr.fibre_map() if tr.lifts() else None


def default_power_cap(cover: MonodromyCover) -> int:
    """``|GL(2, Z/N)|`` with ``N`` the exponent of the monodromy group."""
    n = cover.monodromy_group().exponent()
    return gl2_order(max(n, 2))


def gl2_order(n: int) -> int:
    order = n ** 4
    p, m = 2, n
    primes = []
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        primes.append(m)
    for p in primes:
        order = order * (p * p - 1) * (p * p - p) // p ** 4
    return order


def minimal_lifting_power(aut: GroupAutomorphism, cover: MonodromyCover, cap: int | None = None
                          ) -> tuple[int, Permutation]:
    cap = cap or default_power_cap(cover)
    tr = PowerTracker(aut, cover)
    for _ in range(cap):
        tr.step()
        if tr.lifts():
            return tr.power, tr.fibre_map()
    raise LiftingError(f"no lifting power up to {cap} for {cover.name or 'cover'}")


def pointwise_fiber_power(aut: GroupAutomorphism, cover: MonodromyCover, cap: int | None = None,
                          cone_fibres: bool = False) -> int:
    """Least ``k`` with ``rho o psi^k = rho`` (and, optionally, cone fibres fixed)."""
    cap = cap or default_power_cap(cover)
    tr = PowerTracker(aut, cover)
    for _ in range(cap):
        tr.step()
        if tr.is_identity_on_fibre() and (not cone_fibres or tr.cone_fibres_fixed()):
            return tr.power
    raise LiftingError(f"no pointwise power up to {cap} for {cover.name or 'cover'}")


def lift_automorphism(aut: GroupAutomorphism, cover: MonodromyCover) -> GroupAutomorphism:
    """``psi`` on the Schreier presentation of the cover, by coset rewriting."""
    tr = PowerTracker(aut, cover)
    tr.step()
    if not tr.is_identity_on_fibre():
        raise LiftingError("automorphism does not lift with alpha = identity")
    sub = subgroup_presentation(cover)
    images = [sub.rewrite_member(aut.apply(sub.parent_word(k))) for k in range(sub.ngens)]
    lifted = GroupAutomorphism(sub, images, name=f"lift({aut.name})")
    if not lifted.relations_hold_abelian():
        raise LiftingError("lifted images do not preserve the relations in homology")
    return lifted


def lifted_abelian_action(aut: GroupAutomorphism, cover: MonodromyCover, power: int,
                          base_power: int | None = None) -> list[list[int]]:
    """Abelianised action of the lift of ``psi^power`` on the Schreier generators.

    Tracks, for every generator ``g`` and fibre point ``x``, the endpoint and
    the exponent vector of the rewritten path ``psi^j(g)`` from ``x``; no word
    is ever expanded.  Column ``s`` is the image of Schreier generator ``s``.
    When ``base_power`` divides ``power`` and already lifts with trivial
    ``alpha``, the result is the matrix power of the action at ``base_power``
    (lifts fixing the basepoint compose).
    """
    if base_power and power % base_power == 0 and power != base_power:
        return mat_pow(lifted_abelian_action(aut, cover, base_power), power // base_power)
    sub = subgroup_presentation(cover)
    d, ns = cover.degree, sub.ngens
    rows = np.arange(d)

    def unit(gi):
        v = np.zeros((d, ns), dtype=object)
        for x in range(d):
            k = sub.schreier_index(x, gi)
            if k is not None:
                v[x, k] = 1
        return v

    # an element is (endpoint array, exponent vectors per starting point)
    state = [(np.array(p.images), unit(gi)) for gi, p in enumerate(cover.images)]

    def inv(el):
        img, vecs = el
        pre = np.empty(d, dtype=int)
        pre[img] = rows
        return pre, -vecs[pre]

    def evaluate(word, els, invs):
        img = rows.copy()
        vecs = np.zeros((d, ns), dtype=object)
        for letter in word:
            gimg, gvecs = els[letter - 1] if letter > 0 else invs[-letter - 1]
            vecs += gvecs[img]
            img = gimg[img]
        return img, vecs

    for _ in range(power):
        invs = [inv(el) for el in state]
        state = [evaluate(w, state, invs) for w in aut.images]
    if [tuple(int(v) for v in img) for img, _ in state] != [p.images for p in cover.images]:
        raise LiftingError(f"psi^{power} does not lift with alpha = identity")
    invs = [inv(el) for el in state]
    cols = []
    for k in range(ns):
        img, vecs = evaluate(sub.parent_word(k), state, invs)
        if img[0] != 0:
            raise LiftingError("lift does not fix the basepoint")
        cols.append([int(v) for v in vecs[0]])
    return [[cols[s][i] for s in range(ns)] for i in range(ns)]


def mapping_torus_h1_from_matrix(relation_rows: Sequence, ngens: int, phi: Sequence[Sequence[int]]
                                 ) -> AbelianInvariants:
    """``Z + coker(phi - I)`` on ``H_1`` of the fibre."""
    rows = [dict(r) if isinstance(r, dict) else {i: v for i, v in enumerate(r) if v} for r in relation_rows]
    for s in range(ngens):
        row = {i: phi[i][s] for i in range(ngens) if phi[i][s]}
        row[s] = row.get(s, 0) - 1
        rows.append({i: v for i, v in row.items() if v})
    inv = cokernel_invariants(rows, ngens)
    return AbelianInvariants(inv.free_rank + 1, inv.torsion)


def _relation_rows(presentation) -> list:
    if isinstance(presentation, SubgroupPresentation):
        return presentation.relation_rows()
    return [W.exponent_vector(r, len(presentation.generators)) for r in presentation.relations]


def mapping_torus_h1(presentation, aut: GroupAutomorphism | Sequence[Sequence[int]]) -> AbelianInvariants:
    """``H_1`` of the mapping torus of ``aut`` with fibre ``presentation``."""
    phi = aut.abelian_matrix() if isinstance(aut, GroupAutomorphism) else aut
    return mapping_torus_h1_from_matrix(_relation_rows(presentation), len(presentation.generators), phi)


def free_part_action(presentation, phi: Sequence[Sequence[int]]) -> list[list[int]]:
    """Matrix of the action on ``H_1 / torsion`` in some basis.

    Computed on cohomology: the cocycles form the kernel lattice ``K`` of the
    relation matrix, ``phi^T`` preserves it, and ``L phi^T K`` (with
    ``L K = I``) is the dual action; its transpose is returned.
    """
    n = len(presentation.generators)
    rows = _relation_rows(presentation)
    dense = [[r.get(i, 0) for i in range(n)] if isinstance(r, dict) else list(r) for r in rows]
    kern, left = kernel_basis(dense, n)
    phit = [[phi[j][i] for j in range(n)] for i in range(n)]
    img = mat_mul(phit, kern)
    if any(any(v for v in row) for row in mat_mul(dense, img)):
        raise LiftingError("action does not preserve the cocycle lattice")
    x = mat_mul(left, img)
    if mat_mul(kern, x) != img:
        raise LiftingError("action leaves the cocycle lattice")
    r = len(x)
    return [[x[j][i] for j in range(r)] for i in range(r)]


def determinant(m: Sequence[Sequence[int]]) -> int:
    return int_det(m) if m else 1


def trace(m: Sequence[Sequence[int]]) -> int:
    return sum(m[i][i] for i in range(len(m)))


# --------------------------------------------------------------------------
# The Lemma, checked on the tower


ARROW_TOPS = {
    "S2A->T": "Sigma2A",
    "S2B->T": "Sigma2B",
    "S5->S2A": "Sigma5",
    "S5->S2B": "Sigma5",
    "Sg->S5": "S_g",
}


@dataclass
class ArrowLift:
    arrow: str
    top: str
    degree: int
    lift_power: int
    alpha: str
    alpha_identity: bool
    pointwise_power: int
    cone_fibre_power: int
    holds_at_final: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class LemmaReport:
    m: int
    n: int
    matrix: str
    base_power: int
    marked: dict[str, str]
    power_cap: int
    arrows: list[ArrowLift] = field(default_factory=list)
    psi_power: int = 0
    h1: dict[str, dict] = field(default_factory=dict)
    symmetry: dict = field(default_factory=dict)
    cone_points: dict = field(default_factory=dict)
    conditions: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def total_power(self) -> int:
        """Power of the input map whose lifts satisfy every condition."""
        return self.base_power * self.psi_power

    @property
    def passed(self) -> bool:
        return bool(self.conditions) and all(self.conditions.values())

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "matrix": self.matrix,
            "base_power": self.base_power,
            "marked_points": self.marked,
            "power_cap": self.power_cap,
            "psi_power": self.psi_power,
            "total_power": self.total_power,
            "arrows": [a.as_dict() for a in self.arrows],
            "h1": self.h1,
            "symmetry": self.symmetry,
            "cone_points": self.cone_points,
            "conditions": self.conditions,
            "failures": self.failures,
            "passed": self.passed,
        }


def _punctured_copy(cover: MonodromyCover) -> MonodromyCover:
    base = punctured_presentation(cover.base.genus, len(cover.base.cone_orders))
    return MonodromyCover(base, cover.images, name=cover.name)


def fibre_homology(aut: GroupAutomorphism, cover: MonodromyCover, power: int, base_power: int) -> dict:
    """Mapping-torus ``H_1`` for the lift of ``psi^power`` to ``cover``.

    Three fibres over the same Schreier generators: the orbifold, the
    underlying closed surface (cone loops killed) and the surface with the
    cone points removed (the link complement).
    """
    punct = _punctured_copy(cover)
    phi = lifted_abelian_action(aut, punct, power, base_power=base_power)
    sub_p = subgroup_presentation(punct)
    sub_o = subgroup_presentation(cover)
    n = sub_p.ngens
    # orbifold orders of the punctures, in the order of sub_p.cone_words
    orders = [cw.order // len(cyc) for cw in cover.base.cone_words
              for cyc in cover.image_of(cw.word).cycles(include_fixed=True)]
    link_rows = sub_p.relation_rows()
    cone_rows = []
    for cw in sub_p.cone_words:
        row: dict[int, int] = {}
        for x in cw.word:
            row[abs(x) - 1] = row.get(abs(x) - 1, 0) + (1 if x > 0 else -1)
        cone_rows.append(row)
    # regular points upstairs are filled in; only cone points are removed
    link_rows = link_rows + [r for r, o in zip(cone_rows, orders) if o < 2]
    return {
        "orbifold": mapping_torus_h1_from_matrix(sub_o.relation_rows(), n, phi).as_dict(),
        "manifold": mapping_torus_h1_from_matrix(link_rows + cone_rows, n, phi).as_dict(),
        "link_complement": mapping_torus_h1_from_matrix(link_rows, n, phi).as_dict(),
        "link_components": sum(1 for o in orders if o >= 2),
    }


def lemma_setup(m: int, n: int, t: TorusMap):
    """Tower, base power, marked points and ``psi`` on ``pi_1^orb(T)``."""
    from .covers import build_tower
    from .dynamics import find_power, is_anosov

    if not (isinstance(m, int) and isinstance(n, int)) or not n > m >= 2:
        raise ValueError(f"need integers n > m >= 2, got m={m}, n={n}")
    if not is_anosov(t):
        raise ValueError(f"{t} is not Anosov")
    tower = build_tower(m, n)
    k0, pairs = find_power(t, 8, 4)
    marked = [pairs[0][0], pairs[0][1], pairs[1][0], pairs[1][1]]
    psi = punctured_torus_automorphism(t.power(k0), marked, domain=tower.base)
    return tower, k0, marked, psi


def verify_lemma(m: int, n: int, t: TorusMap, power_cap: int | None = None) -> LemmaReport:
    """Check the three Lemma conditions for the tower over ``T(2,2,2m,2n)``.

    ``psi`` is ``t^k0`` with ``k0`` the least power fixing the 2-torsion and two
    ``-I``-pairs; its lifts are tested on each arrow through the cover of
    ``T`` by the arrow's top space.
    """
    from .covers import T_LABELS, total_signature
    from .eqcomplex import circle_pattern_surface, symmetry_datum

    tower, k0, marked, psi = lemma_setup(m, n, t)
    tops = {
        "Sigma2A": tower.arrows["S2A->T"],
        "Sigma2B": tower.arrows["S2B->T"],
        "Sigma5": tower.klein,
        "S_g": tower.composites["Sg->T"],
    }
    cap = power_cap or gl2_order(2 * m * n)
    report = LemmaReport(m, n, str(t), k0, {lab: str(p) for lab, p in zip(T_LABELS, marked)}, cap)
    for name, cover in tops.items():
        if not psi.relations_hold_in(cover):
            report.failures.append(f"psi does not preserve the relations in the {name} quotient")

    # condition 1: powers per arrow
    data = {}
    for name, cover in tops.items():
        tr = PowerTracker(psi, cover)
        first = alpha = pointwise = cone = None
        while tr.power < cap and cone is None:
            tr.step()
            if first is None and tr.lifts():
                first, alpha = tr.power, tr.fibre_map()
            if pointwise is None and tr.is_identity_on_fibre():
                pointwise = tr.power
            if tr.cone_fibres_fixed():
                cone = tr.power
        data[name] = (first, alpha, pointwise, cone)
    missing = [name for name, d in data.items() if d[3] is None]
    if missing:
        for name in missing:
            report.failures.append(f"no power up to {cap} lifts to {name} with cone fibres fixed")
        report.conditions = {"1": False, "2": False, "3": False}
        return report
    j = lcm(*(d[3] for d in data.values()))
    report.psi_power = j
    final = {}
    for name, cover in tops.items():
        tr = PowerTracker(psi, cover)
        tr.advance_to(j)
        final[name] = tr.cone_fibres_fixed()
    for arrow, top in ARROW_TOPS.items():
        first, alpha, pointwise, cone = data[top]
        report.arrows.append(ArrowLift(arrow, top, tops[top].degree, first, str(alpha), alpha.is_identity(),
                                       pointwise, cone, final[top]))
        if not final[top]:
            report.failures.append(f"arrow {arrow}: psi^{j} does not fix the fibres over {top}")
    report.conditions["1"] = all(final.values())

    # condition 2: conjugating symmetry and mapping-torus homology
    surface = circle_pattern_surface()
    report.symmetry = symmetry_datum(surface)
    for name in ("Sigma2A", "Sigma2B"):
        report.h1[name] = fibre_homology(psi, tops[name], j, data[name][2])
    same = all(report.h1["Sigma2A"][k] == report.h1["Sigma2B"][k] for k in ("manifold", "link_complement"))
    if not same:
        report.failures.append("mapping tori over Sigma2A and Sigma2B have different H_1")
    sym_ok = report.symmetry["conjugates_r1_to_r2"] and report.symmetry["swaps_markings"]
    if not sym_ok:
        report.failures.append("order-4 symmetry datum fails")
    report.conditions["2"] = same and sym_ok

    # condition 3: five fixed cone points with the expected orders
    expect = {"Sigma2A": sorted((2, 2, 2 * m, 2 * m, n)), "Sigma2B": sorted((2, 2, 2 * n, 2 * n, m))}
    ok3 = True
    for name in ("Sigma2A", "Sigma2B"):
        orders = list(total_signature(tops[name]).cone_orders)
        fixed = final[name]
        good = orders == expect[name] and fixed
        report.cone_points[name] = {"orders": orders, "expected": expect[name], "components": len(orders),
                                    "fixed": fixed}
        if not good:
            report.failures.append(f"{name}: cone data {orders} (fixed={fixed}) do not match {expect[name]}")
        ok3 = ok3 and good
    report.conditions["3"] = ok3
    return report


def mod2_subcase(t: TorusMap) -> dict:
    """The double cover of the torus with ``rho(a) = 1``, ``rho(b) = 0``."""
    from .covers import abelian_cover
    from .permcore import FiniteAbelianType

    base = OrbifoldPresentation(1, ())
    psi = punctured_torus_automorphism(t, [], domain=base)
    cover = abelian_cover(base, FiniteAbelianType((2,)), [(1,), (0,)], name="torus mod 2")
    k, alpha = minimal_lifting_power(psi, cover)
    kp = pointwise_fiber_power(psi, cover)
    return {"lifts_at_1": lifts_through(psi, cover) is not None, "k": k, "alpha": str(alpha), "k_pointwise": kp}
