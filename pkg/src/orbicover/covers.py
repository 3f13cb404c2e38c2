"""Branched covers of 2-orbifolds as permutation representations.

A cover of degree ``d`` over a presentation is one permutation of
``range(d)`` per generator.  A word acts on fibre points left to right
(see :mod:`orbicover.permcore`), so point ``x`` is carried by the loop ``w``
to ``image_of(w)(x)``.

Presentations are either standard :class:`~orbicover.orbifold.OrbifoldPresentation`
objects or :class:`SubgroupPresentation` objects produced by
Reidemeister-Schreier rewriting; both expose ``generators``, ``relations``,
``cone_words``, ``signature``, ``root`` and ``expand``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import words as W
from .abelian import AbelianInvariants, cokernel_invariants, solve_mod
from .orbifold import (
    ConeWord,
    OrbifoldPresentation,
    OrbifoldSignature,
    euler_characteristic,
    genus_from_chi,
    presentation,
    riemann_hurwitz_check,
)
from .permcore import (
    FiniteAbelianType,
    Permutation,
    PermGroup,
    closure,
    conjugate_tuples,
    cycle_type,
    is_transitive,
)


class InvalidCover(ValueError):
    pass


def evaluate(word: Sequence[int], images: Sequence[Permutation], inverses: Sequence[Permutation] | None = None,
             degree: int | None = None) -> Permutation:
    if degree is None:
        degree = images[0].degree
    if inverses is None:
        inverses = [~p for p in images]
    pts = list(range(degree))
    for x in word:
        p = images[x - 1] if x > 0 else inverses[-x - 1]
        img = p.images
        pts = [img[i] for i in pts]
    return Permutation(pts)


class MonodromyCover:
    """A branched cover given by generator images."""

    def __init__(self, base, images: Sequence[Permutation], name: str = ""):
        self.base = base
        self.images = tuple(images)
        self.name = name
        if len(self.images) != len(base.generators):
            raise InvalidCover(
                f"{len(self.images)} images for {len(base.generators)} generators"
            )
        if not self.images:
            raise InvalidCover("base presentation has no generators")
        self.degree = self.images[0].degree
        if any(p.degree != self.degree for p in self.images):
            raise InvalidCover("generator images have different degrees")
        self._inverses = tuple(~p for p in self.images)

    @classmethod
    def trivial(cls, base) -> "MonodromyCover":
        return cls(base, [Permutation.identity(1)] * len(base.generators), name="trivial")

    def image_of(self, word: Sequence[int]) -> Permutation:
        return evaluate(word, self.images, self._inverses, self.degree)

    def act(self, point: int, word: Sequence[int]) -> int:
        for x in word:
            point = self.images[x - 1](point) if x > 0 else self._inverses[-x - 1](point)
        return point

    @cached_property
    def base_signature(self) -> OrbifoldSignature:
        return self.base.signature

    def monodromy_group(self, max_order: int = 200_000) -> PermGroup:
        return closure(self.images, self.degree, max_order=max_order)

    def cycle_data(self) -> list[tuple[ConeWord, tuple[int, ...]]]:
        return [(cw, cycle_type(self.image_of(cw.word))) for cw in self.base.cone_words]

    def __repr__(self) -> str:
        return f"MonodromyCover({self.name or '?'}, degree={self.degree})"


def validate(c: MonodromyCover) -> list[str]:
    """Violated cover invariants; an empty list means valid."""
    problems = []
    for i, rel in enumerate(c.base.relations):
        p = c.image_of(rel)
        if not p.is_identity():
            problems.append(
                f"relation {i} ({W.format_word(rel, c.base.generators)}) maps to {p}, not the identity"
            )
    if not is_transitive(c.images, c.degree):
        problems.append("monodromy group is not transitive")
    for cw in c.base.cone_words:
        if cw.order == 0:
            continue
        for length in cycle_type(c.image_of(cw.word)):
            if cw.order % length:
                problems.append(f"cone {cw.label} of order {cw.order} has a cycle of length {length}")
    return problems


def total_signature(c: MonodromyCover) -> OrbifoldSignature:
    cones = []
    for cw, lengths in c.cycle_data():
        if cw.order == 0:
            raise InvalidCover("punctured base has no closed total space")
        for ell in lengths:
            if cw.order % ell:
                raise InvalidCover(f"cycle length {ell} does not divide cone order {cw.order}")
            if cw.order // ell >= 2:
                cones.append(cw.order // ell)
    chi = c.degree * euler_characteristic(c.base_signature)
    g = genus_from_chi(chi, cones)
    if g.denominator != 1 or g < 0:
        raise InvalidCover(f"non-integral or negative genus {g}: cover data inconsistent")
    return OrbifoldSignature(int(g), tuple(cones))


def ramification_orders(c: MonodromyCover) -> tuple[int, ...]:
    """Local degree over each cone point of the base (largest cycle), sorted."""
    return tuple(sorted(max(lengths) for _, lengths in c.cycle_data()))


def centralizer(c: MonodromyCover) -> PermGroup:
    """Centralizer of a transitive monodromy group in ``Sym(d)``.

    A centralizing permutation is determined by the image of point 0, which
    is propagated along a spanning tree of the generator action.
    """
    d = c.degree
    tree: list[tuple[int, int, int]] = []  # (parent point, generator, child point)
    seen = [False] * d
    seen[0] = True
    queue = [0]
    for x in queue:
        for gi, g in enumerate(c.images):
            y = g(x)
            if not seen[y]:
                seen[y] = True
                tree.append((x, gi, y))
                queue.append(y)
    if not all(seen):
        raise InvalidCover("centralizer requested for an intransitive cover")
    found = []
    for target in range(d):
        img = [-1] * d
        img[0] = target
        for x, gi, y in tree:
            img[y] = c.images[gi](img[x])
        if sorted(img) != list(range(d)):
            continue
        cand = Permutation(img)
        if all(cand * g == g * cand for g in c.images):
            found.append(cand)
    return PermGroup(d, found)


def is_regular(c: MonodromyCover) -> bool:
    return centralizer(c).order == c.degree


def deck_group(c: MonodromyCover) -> PermGroup:
    group = centralizer(c)
    if group.order != c.degree:
        raise InvalidCover(f"cover is not regular: centralizer has order {group.order}, degree {c.degree}")
    return group


class SubgroupPresentation:
    """Reidemeister-Schreier presentation of a point stabilizer.

    Generators are the non-tree Schreier generators ``T(x) g T(x.g)^-1``;
    ``schreier[k] == (x, g)`` records the coset and parent generator of the
    ``k``-th one.  Relations are the parent relators rewritten from every
    coset.
    """

    def __init__(self, cover: MonodromyCover, basepoint: int = 0):
        if not 0 <= basepoint < cover.degree:
            raise ValueError(f"basepoint {basepoint} out of range for degree {cover.degree}")
        self.cover = cover
        self.parent = cover.base
        self.basepoint = basepoint
        d = cover.degree
        parent_gens = self.parent.generators
        transversal: list[W.Word | None] = [None] * d
        transversal[basepoint] = ()
        tree_edges = set()
        queue = [basepoint]
        for x in queue:
            for gi, g in enumerate(cover.images):
                y = g(x)
                if transversal[y] is None:
                    transversal[y] = transversal[x] + (gi + 1,)
                    tree_edges.add((x, gi))
                    queue.append(y)
        if any(t is None for t in transversal):
            raise InvalidCover("cover is not transitive")
        self.transversal: tuple[W.Word, ...] = tuple(transversal)  # type: ignore[arg-type]
        self.schreier: list[tuple[int, int]] = []
        self._index: dict[tuple[int, int], int] = {}
        for x in range(d):
            for gi in range(len(parent_gens)):
                if (x, gi) not in tree_edges:
                    self._index[(x, gi)] = len(self.schreier)
                    self.schreier.append((x, gi))
        self.generators = tuple(f"{parent_gens[gi]}[{x}]" for x, gi in self.schreier)
        rels = []
        for r in self.parent.relations:
            for x in range(d):
                w, end = self.rewrite(r, x)
                if end != x:
                    raise InvalidCover("relator does not fix coset; cover invalid")
                rels.append(w)
        self.relations = tuple(rels)
        cones = []
        for cw in self.parent.cone_words:
            p = cover.image_of(cw.word)
            for cyc in p.cycles(include_fixed=True):
                ell = len(cyc)
                order = 0 if cw.order == 0 else cw.order // ell
                if cw.order and order < 2:
                    continue
                start = cyc[0]
                w, end = self.rewrite(W.power(cw.word, ell), start)
                cones.append(ConeWord(w, order, f"{cw.label}[{start}]"))
        self.cone_words = tuple(cones)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def degree(self) -> int:
        return self.cover.degree

    @property
    def root(self):
        return self.parent.root

    def schreier_index(self, x: int, gi: int) -> int | None:
        return self._index.get((x, gi))

    def rewrite(self, word: Sequence[int], start: int | None = None) -> tuple[W.Word, int]:
        """Rewrite a parent word read from coset ``start``; returns (word, end coset)."""
        cur = self.basepoint if start is None else start
        images, inverses = self.cover.images, self.cover._inverses
        out: list[int] = []
        for letter in word:
            if letter > 0:
                gi = letter - 1
                k = self._index.get((cur, gi))
                if k is not None:
                    out.append(k + 1)
                cur = images[gi](cur)
            else:
                gi = -letter - 1
                prev = inverses[gi](cur)
                k = self._index.get((prev, gi))
                if k is not None:
                    out.append(-(k + 1))
                cur = prev
        return W.reduce(out), cur

    def rewrite_member(self, word: Sequence[int]) -> W.Word:
        w, end = self.rewrite(word, self.basepoint)
        if end != self.basepoint:
            raise ValueError("word does not lie in the subgroup")
        return w

    def rewrite_root(self, word: Sequence[int]) -> W.Word:
        """Rewrite a word in the root presentation into these generators."""
        parent_word = word if isinstance(self.parent, OrbifoldPresentation) else self.parent.rewrite_root(word)
        return self.rewrite_member(parent_word)

    def parent_word(self, k: int) -> W.Word:
        x, gi = self.schreier[k]
        y = self.cover.images[gi](x)
        return W.concat(self.transversal[x], (gi + 1,), W.inverse(self.transversal[y]))

    @cached_property
    def _root_words(self) -> tuple[W.Word, ...]:
        return tuple(self.parent.expand(self.parent_word(k)) for k in range(self.ngens))

    def expand(self, word: Sequence[int]) -> W.Word:
        return W.substitute(word, self._root_words)

    @cached_property
    def signature(self) -> OrbifoldSignature:
        return total_signature(self.cover)

    def relation_rows(self) -> list[dict[int, int]]:
        rows = []
        for r in self.relations:
            row: dict[int, int] = {}
            for x in r:
                k = abs(x) - 1
                row[k] = row.get(k, 0) + (1 if x > 0 else -1)
            rows.append(row)
        return rows

    def abelianization(self) -> AbelianInvariants:
        return cokernel_invariants(self.relation_rows(), self.ngens)

    def __repr__(self) -> str:
        return f"SubgroupPresentation(degree={self.degree}, ngens={self.ngens})"


def subgroup_presentation(c: MonodromyCover, basepoint: int = 0) -> SubgroupPresentation:
    return SubgroupPresentation(c, basepoint)


def compose(lower: MonodromyCover, upper: MonodromyCover) -> MonodromyCover:
    """Cover of ``lower.base`` obtained by stacking ``upper`` on ``lower``.

    ``upper`` must be a cover over ``subgroup_presentation(lower, b)``.  Fibre
    point ``(x, y)`` is numbered ``x * upper.degree + y``; generator ``g``
    sends it to ``(x.g, y . upper(s_{x,g}))`` where ``s_{x,g}`` is the Schreier
    generator of the edge (identity on tree edges).
    """
    sub = upper.base
    if not isinstance(sub, SubgroupPresentation):
        raise InvalidCover("upper cover is not over a subgroup presentation")
    if sub.cover is not lower:
        if sub.cover.base is not lower.base or sub.cover.images != lower.images:
            raise InvalidCover("upper cover is over a different lower cover; generators unmatched")
    if sub.signature != total_signature(lower):
        raise InvalidCover(f"signature mismatch: {sub.signature} vs {total_signature(lower)}")
    d1, d2 = lower.degree, upper.degree
    ident = tuple(range(d2))
    images = []
    for gi, g in enumerate(lower.images):
        img = [0] * (d1 * d2)
        for x in range(d1):
            k = sub.schreier_index(x, gi)
            fibre = upper.images[k].images if k is not None else ident
            base = g(x) * d2
            for y in range(d2):
                img[x * d2 + y] = base + fibre[y]
        images.append(Permutation(img))
    name = f"{upper.name}>{lower.name}" if upper.name and lower.name else ""
    return MonodromyCover(lower.base, images, name=name)


def restrict(big: MonodromyCover, sub, point: int = 0, name: str = "") -> MonodromyCover:
    """Action of the subgroup ``sub`` on the orbit of ``point`` in ``big``'s fibre.

    ``big`` must be a cover of ``sub.root``.
    """
    if big.base is not sub.root:
        raise InvalidCover("restriction needs a cover of the root presentation")
    perms = [big.image_of(sub.expand(W.gen(k))) for k in range(sub.ngens)]
    orbit = sorted(next(o for o in _orbits(perms, big.degree) if point in o))
    index = {x: i for i, x in enumerate(orbit)}
    images = [Permutation(index[p(x)] for x in orbit) for p in perms]
    return MonodromyCover(sub, images, name=name)


def _orbits(perms, degree):
    from .permcore import orbits

    return orbits(perms, degree)


def transport(c: MonodromyCover, new_base) -> MonodromyCover:
    """Re-express ``c`` over another presentation of the same subgroup of the root."""
    if new_base.root is not c.base.root:
        raise InvalidCover("presentations have different roots")
    images = []
    for k in range(len(new_base.generators)):
        root_word = new_base.expand(W.gen(k))
        if isinstance(c.base, OrbifoldPresentation):
            w = root_word
        else:
            w = c.base.rewrite_root(root_word)
        images.append(c.image_of(w))
    return MonodromyCover(new_base, images, name=c.name)


def abelian_cover(base, group: FiniteAbelianType, values: Sequence[Sequence[int]], name: str = "") -> MonodromyCover:
    """Regular cover with deck group ``group``, generator ``i`` acting by translation by ``values[i]``."""
    return MonodromyCover(base, [group.regular_permutation(v) for v in values], name=name)


def same_base(c1: MonodromyCover, c2: MonodromyCover) -> bool:
    b1, b2 = c1.base, c2.base
    if b1 is b2:
        return True
    return b1.generators == b2.generators and b1.relations == b2.relations


def are_equivalent(c1: MonodromyCover, c2: MonodromyCover, identification: Sequence[int] | None = None) -> bool:
    """Equivalence of covers over a common base.

    For covers of different presentations, ``identification[j]`` names the
    cone point of ``c2``'s base matched with cone point ``j`` of ``c1``'s base
    (a homeomorphism of underlying marked surfaces).  Only the branching data
    can then be compared, so matching branching data raises rather than
    guessing.
    """
    if not same_base(c1, c2):
        if identification is None:
            raise ValueError("covers have different bases; an identification of marked points is required")
        d1, d2 = c1.cycle_data(), c2.cycle_data()
        if c1.degree != c2.degree or len(d1) != len(d2):
            return False
        if sorted(identification) != list(range(len(d1))):
            raise ValueError("identification must be a bijection of cone points")
        if c1.base.signature.genus != c2.base.signature.genus:
            return False
        for j, (_, lengths) in enumerate(d1):
            if lengths != d2[identification[j]][1]:
                return False
        raise ValueError("branching data agree; deciding equivalence needs identified presentations")
    if c1.degree != c2.degree:
        return False
    if [t for _, t in c1.cycle_data()] != [t for _, t in c2.cycle_data()]:
        return False
    return conjugate_tuples(c1.images, c2.images) is not None


# --------------------------------------------------------------------------
# The tower of covers


T_LABELS = ("a1", "a2", "b1", "b2")


@dataclass
class CoverTower:
    m: int
    n: int
    base: OrbifoldPresentation
    klein: MonodromyCover
    arrows: dict[str, MonodromyCover]
    composites: dict[str, MonodromyCover]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def genus(self) -> int:
        return 6 * self.m * self.n - self.m - self.n + 1

    def covers(self) -> dict[str, MonodromyCover]:
        return {**self.arrows, **self.composites}

    def signatures(self) -> dict[str, OrbifoldSignature]:
        return {
            "S_g": total_signature(self.arrows["Sg->S5"]),
            "Sigma5": total_signature(self.arrows["S5->S2A"]),
            "Sigma2A": total_signature(self.arrows["S2A->T"]),
            "Sigma2B": total_signature(self.arrows["S2B->T"]),
            "T": self.base.signature,
        }


EXPECTED_DEGREES = {
    "Sg->S5": lambda m, n: m * n,
    "S5->S2A": lambda m, n: 2,
    "S5->S2B": lambda m, n: 2,
    "S2A->T": lambda m, n: 2,
    "S2B->T": lambda m, n: 2,
    "Sg->S2A": lambda m, n: 2 * m * n,
    "Sg->S2B": lambda m, n: 2 * m * n,
    "Sg->T": lambda m, n: 4 * m * n,
}


def epimorphism_on_cones(base, group: FiniteAbelianType, cone_targets: Sequence[Sequence[int]],
                         kill: Sequence[int] = (), extra_rows: Sequence[Sequence[list[int]]] = ()
                         ) -> list[tuple[int, ...]]:
    """Values on generators of a homomorphism ``base -> group``.

    The homomorphism sends ``base.cone_words[j]`` to ``cone_targets[j]``,
    kills the generators listed in ``kill`` and every relator.
    ``extra_rows[f]`` holds further homogeneous equations for cyclic factor
    ``f``.  Solved one factor at a time as a congruence system; raises
    :class:`InvalidCover` if impossible.
    """
    ngens = len(base.generators)
    rows = [W.exponent_vector(r, ngens) for r in base.relations]
    cone_rows = [W.exponent_vector(cw.word, ngens) for cw in base.cone_words]
    kill_rows = [[int(i == k) for i in range(ngens)] for k in kill]
    values = [[0] * len(group.factors) for _ in range(ngens)]
    for f, modulus in enumerate(group.factors):
        extra = list(extra_rows[f]) if extra_rows else []
        a = rows + cone_rows + kill_rows + extra
        b = [0] * len(rows) + [t[f] % modulus for t in cone_targets] + [0] * (len(kill_rows) + len(extra))
        sol = solve_mod(a, b, modulus)
        if sol is None:
            raise InvalidCover(f"no homomorphism with the requested cone images (factor Z/{modulus})")
        for i, v in enumerate(sol):
            values[i][f] = v
    return [tuple(v) for v in values]


def _equivariance_rows(pres, klein_values, involutions, nfactors):
    """Equations making the kernel invariant under conjugation by base generators.

    A base generator whose Klein image is ``r1`` (resp. ``r2``) must act on
    ``Z/m x Z/n`` by ``(u, v) -> (u, -v)`` (resp. ``(-u, v)``), matching how the
    involutions permute the cone points of ``Sigma5``.
    """
    per_factor: list[list[list[int]]] = [[] for _ in range(nfactors)]
    for gi, kv in enumerate(klein_values):
        if kv == (0, 0) or kv not in involutions:
            continue
        signs = (1, -1) if kv == (1, 0) else (-1, 1)
        g = W.gen(gi)
        for k in range(pres.ngens):
            conj = W.concat(g, pres.expand(W.gen(k)), W.inverse(g))
            vec = W.exponent_vector(pres.rewrite_root(conj), pres.ngens)
            for f in range(nfactors):
                row = list(vec)
                row[k] -= signs[f]
                per_factor[f].append(row)
    return per_factor


def build_tower(m: int, n: int, max_degree: int = 400) -> CoverTower:
    """The commuting square of covers over ``T(2,2,2m,2n)`` topped by ``S_g``.

    Base generators ``a1,b1,x1..x4`` carry cone points ``a1,a2`` (order 2),
    ``b1`` (order 2m), ``b2`` (order 2n).  The Klein four cover sends
    ``x1,x3`` to the first involution ``r1`` and ``x2,x4`` to ``r2``; the
    double covers are its quotients by ``<r1>`` and ``<r2>``.
    """
    if not (isinstance(m, int) and isinstance(n, int)) or not n > m >= 2:
        raise ValueError(f"need integers n > m >= 2, got m={m}, n={n}")
    if 4 * m * n > max_degree:
        raise ValueError(f"degree 4mn = {4 * m * n} exceeds bound {max_degree}")
    base = presentation(OrbifoldSignature(1, (2, 2, 2 * m, 2 * n)), cone_labels=T_LABELS)
    klein = FiniteAbelianType((2, 2))
    z2 = FiniteAbelianType((2,))
    zero2 = (0, 0)
    r1, r2 = (1, 0), (0, 1)
    cover_k = abelian_cover(base, klein, [zero2, zero2, r1, r2, r1, r2], name="S5->T")
    cover_ta = abelian_cover(base, z2, [(0,), (0,), (0,), (1,), (0,), (1,)], name="S2A->T")
    cover_tb = abelian_cover(base, z2, [(0,), (0,), (1,), (0,), (1,), (0,)], name="S2B->T")

    pres_a = subgroup_presentation(cover_ta)
    pres_b = subgroup_presentation(cover_tb)
    cover_a5 = restrict(cover_k, pres_a, name="S5->S2A")
    cover_b5 = restrict(cover_k, pres_b, name="S5->S2B")

    pres_k = subgroup_presentation(cover_k)
    group = FiniteAbelianType((m, n))
    targets = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    orders = [cw.order for cw in pres_k.cone_words]
    if orders != [m, m, n, n]:
        raise InvalidCover(f"unexpected cone words over Sigma5: orders {orders}")
    handle_gens = [k for k, (_, gi) in enumerate(pres_k.schreier) if gi < 2 * base.genus]
    klein_values = [zero2, zero2, r1, r2, r1, r2]
    # Prefer a kernel invariant under both involutions, so the involutions lift
    # to S_g; fall back to one or none when the congruences have no solution.
    values, lifted = None, ()
    for invs in ((r1, r2), (r1,), (r2,), ()):
        for kill in (handle_gens, ()):
            extra = _equivariance_rows(pres_k, klein_values, invs, 2) if invs else ()
            try:
                values = epimorphism_on_cones(pres_k, group, targets, kill=kill, extra_rows=extra)
            except InvalidCover:
                continue
            lifted = invs
            break
        if values is not None:
            break
    assert values is not None
    cover_5g = abelian_cover(pres_k, group, values, name="Sg->S5")

    comp_a = compose(cover_a5, transport(cover_5g, subgroup_presentation(cover_a5)))
    comp_a.name = "Sg->S2A"
    comp_b = compose(cover_b5, transport(cover_5g, subgroup_presentation(cover_b5)))
    comp_b.name = "Sg->S2B"
    full = compose(cover_ta, comp_a)
    full.name = "Sg->T"
    full_b = compose(cover_tb, comp_b)

    tower = CoverTower(
        m, n, base, cover_k,
        arrows={"Sg->S5": cover_5g, "S5->S2A": cover_a5, "S5->S2B": cover_b5,
                "S2A->T": cover_ta, "S2B->T": cover_tb},
        composites={"Sg->S2A": comp_a, "Sg->S2B": comp_b, "Sg->T": full},
    )
    tower.checks["lifts_r1"] = r1 in lifted
    tower.checks["lifts_r2"] = r2 in lifted
    tower.checks["klein_square_commutes"] = are_equivalent(compose(cover_ta, cover_a5), compose(cover_tb, cover_b5))
    tower.checks["klein_square_is_klein_cover"] = are_equivalent(compose(cover_ta, cover_a5), cover_k)
    tower.checks["full_composites_agree"] = are_equivalent(full, full_b)
    return tower


def cover_summary(c: MonodromyCover) -> dict:
    cent = centralizer(c)
    sig = total_signature(c)
    return {
        "name": c.name,
        "base_signature": str(c.base_signature),
        "degree": c.degree,
        "images": {name: str(p) for name, p in zip(c.base.generators, c.images)},
        "total_signature": str(sig),
        "regular": cent.order == c.degree,
        "deck_group_order": cent.order,
        "ramification": list(ramification_orders(c)),
        "riemann_hurwitz": riemann_hurwitz_check(c.base_signature, sig, c.degree),
        "violations": validate(c),
    }


def tower_summary(tower: CoverTower, include_images: bool = True) -> dict:
    covers = {}
    for key, c in tower.covers().items():
        s = cover_summary(c)
        if not include_images:
            s.pop("images")
        covers[key] = s
    return {
        "m": tower.m,
        "n": tower.n,
        "signatures": {k: str(v) for k, v in tower.signatures().items()},
        "covers": covers,
        "checks": dict(tower.checks),
    }


SWAP_LABELS = {"a1": "a2", "a2": "a1", "b1": "b2", "b2": "b1"}


def quarter_turn_identification(c1: MonodromyCover, c2: MonodromyCover) -> list[int]:
    """Cone points of ``c1.base`` matched with those of ``c2.base`` by the quarter turn.

    The quarter turn exchanges the two involutions, so over ``T`` it swaps
    ``a1 <-> a2`` and ``b1 <-> b2``; preimages of one cone point are matched
    in order.
    """
    def parent(label):
        return label.split("[")[0]

    cones1 = [cw.label for cw in c1.base.cone_words]
    cones2 = [cw.label for cw in c2.base.cone_words]
    out = []
    used: dict[str, int] = {}
    for lab in cones1:
        target = SWAP_LABELS[parent(lab)]
        k = used.get(target, 0)
        matches = [j for j, l2 in enumerate(cones2) if parent(l2) == target]
        if k >= len(matches):
            raise ValueError(f"no partner for cone point {lab}")
        out.append(matches[k])
        used[target] = k + 1
    if sorted(out) != list(range(len(cones2))):
        raise ValueError("quarter turn does not match the cone points bijectively")
    return out


def composites_equivalent(tower: CoverTower) -> bool:
    """Whether the two ``2mn``-sheeted composites agree under the quarter turn."""
    a, b = tower.composites["Sg->S2A"], tower.composites["Sg->S2B"]
    return are_equivalent(a, b, quarter_turn_identification(a, b))
