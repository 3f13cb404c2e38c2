"""Permutations and small finite groups.

Points are ``0 .. degree-1``.  Products compose left to right:
``(p * q)(x) == q(p(x))``, i.e. ``p`` is applied first.  This is the right
action convention, so a monodromy map ``word -> permutation`` is a
homomorphism when words are read left to right.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Sequence


class Permutation:
    """An immutable permutation of ``range(degree)``."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images}")
        if not images:
            raise ValueError("degree must be positive")
        self._images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x in seen or not 0 <= x < degree:
                    raise ValueError(f"bad cycle {cyc!r} for degree {degree}")
                seen.add(x)
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s*[ ,]\s*\d+)*)?\s*\))+", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if pts:
                cycles.append(pts)
        return cls.from_cycles(degree, cycles)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __call__(self, x: int) -> int:
        return self._images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        o = other._images
        return Permutation(o[i] for i in self._images)

    def __invert__(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self._images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else ~self
        result = Permutation.identity(self.degree)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and other._images == self._images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Cycles, each starting at its least point, ordered by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self._images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self._images[x]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self.degree}, {self})"


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths of ``p`` (fixed points included), largest first."""
    return tuple(sorted((len(c) for c in p.cycles(include_fixed=True)), reverse=True))


def cycle_length_of(p: Permutation) -> list[int]:
    """Length of the cycle through each point."""
    out = [0] * p.degree
    for cyc in p.cycles(include_fixed=True):
        for x in cyc:
            out[x] = len(cyc)
    return out


class GroupTooLarge(RuntimeError):
    pass


class PermGroup:
    """Finite permutation group, stored by full enumeration.

    Elements are listed in breadth-first order from the identity using the
    generators in the order given, so enumeration is deterministic.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], max_order: int = 200_000):
        self.degree = degree
        self.generators = tuple(generators)
        for g in self.generators:
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
        ident = Permutation.identity(degree)
        elements = [ident]
        index = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for h in frontier:
                for g in self.generators:
                    e = h * g
                    if e not in index:
                        index[e] = len(elements)
                        elements.append(e)
                        nxt.append(e)
                        if len(elements) > max_order:
                            raise GroupTooLarge(f"group order exceeds {max_order}")
            frontier = nxt
        self._elements = tuple(elements)
        self._index = index

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self._elements

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def orbits(self) -> list[list[int]]:
        return orbits(self.generators, self.degree)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a, b in itertools.combinations(gens, 2))

    def exponent(self) -> int:
        from math import lcm

        return lcm(*(e.order() for e in self._elements))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


def closure(gens: Sequence[Permutation], degree: int | None = None, max_order: int = 200_000) -> PermGroup:
    if degree is None:
        if not gens:
            raise ValueError("degree required when there are no generators")
        degree = gens[0].degree
    return PermGroup(degree, gens, max_order=max_order)


def orbits(gens: Sequence[Permutation], degree: int) -> list[list[int]]:
    seen = [False] * degree
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orb = [start]
        i = 0
        while i < len(orb):
            x = orb[i]
            i += 1
            for g in gens:
                y = g(x)
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
        out.append(orb)
    return out


def is_transitive(g: PermGroup | Sequence[Permutation], degree: int | None = None) -> bool:
    if isinstance(g, PermGroup):
        gens, degree = g.generators, g.degree
    else:
        gens = list(g)
        degree = degree if degree is not None else gens[0].degree
    return len(orbits(gens, degree)) == 1


def conjugate_tuples(t1: Sequence[Permutation], t2: Sequence[Permutation]) -> Permutation | None:
    """Find ``c`` with ``c * t1[i] * ~c == t2[i]`` for every ``i``, or ``None``.

    Backtracks over the image of the least unassigned point; each choice is
    propagated along the orbit, and candidate images are pruned by the
    lengths of the cycles through them.
    """
    if len(t1) != len(t2):
        raise ValueError("tuples have different lengths")
    if not t1:
        return None
    d = t1[0].degree
    if any(p.degree != d for p in (*t1, *t2)):
        raise ValueError("degree mismatch")
    if any(cycle_type(p) != cycle_type(q) for p, q in zip(t1, t2)):
        return None
    # c satisfies t1(c(x)) == c(t2(x)), so c carries the t2-structure onto t1.
    sig1 = list(zip(*(cycle_length_of(p) for p in t1)))
    sig2 = list(zip(*(cycle_length_of(p) for p in t2)))
    fwd1 = [p.images for p in t1]
    fwd2 = [p.images for p in t2]

    c = [-1] * d
    used = [False] * d

    def assign(x: int, y: int, trail: list[int]) -> bool:
        stack = [(x, y)]
        while stack:
            x, y = stack.pop()
            if c[x] == y:
                continue
            if c[x] != -1 or used[y] or sig2[x] != sig1[y]:
                return False
            c[x] = y
            used[y] = True
            trail.append(x)
            for f1, f2 in zip(fwd1, fwd2):
                stack.append((f2[x], f1[y]))
        return True

    def undo(trail: list[int]) -> None:
        for x in trail:
            used[c[x]] = False
            c[x] = -1

    def search() -> bool:
        try:
            x = c.index(-1)
        except ValueError:
            return True
        for y in range(d):
            if used[y] or sig2[x] != sig1[y]:
                continue
            trail: list[int] = []
            if assign(x, y, trail) and search():
                return True
            undo(trail)
        return False

    if not search():
        return None
    result = Permutation(c)
    assert all(result * p * ~result == q for p, q in zip(t1, t2))
    return result


@dataclass(frozen=True)
class FiniteAbelianType:
    """Direct product of cyclic groups ``Z/f_1 x ... x Z/f_k``."""

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(f) for f in self.factors))
        if any(f < 2 for f in self.factors):
            raise ValueError(f"cyclic factors must be >= 2: {self.factors}")

    @property
    def order(self) -> int:
        return prod(self.factors)

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(f) for f in self.factors)))

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % f for a, b, f in zip(x, y, self.factors))

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(-a % f for a, f in zip(x, self.factors))

    def reduce(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(a % f for a, f in zip(x, self.factors))

    def regular_permutation(self, x: Sequence[int]) -> Permutation:
        """Translation by ``x`` on the elements, indexed in ``elements()`` order."""
        elts = self.elements()
        index = {e: i for i, e in enumerate(elts)}
        return Permutation(index[self.add(e, x)] for e in elts)


def apply_matrix(m: Sequence[Sequence[int]], t: FiniteAbelianType, x: Sequence[int]) -> tuple[int, ...]:
    """Apply an endomorphism given by its matrix (column j = image of e_j)."""
    return t.reduce(sum(m[r][j] * x[j] for j in range(len(x))) for r in range(len(m)))


def abelian_automorphisms(t: FiniteAbelianType, bound: int = 512) -> list[tuple[tuple[int, ...], ...]]:
    """All automorphisms of ``t`` as integer matrices (column j = image of e_j).

    Raises ``ValueError`` when ``|t|`` exceeds ``bound``.
    """
    if t.order > bound:
        raise ValueError(f"group order {t.order} exceeds bound {bound}")
    elts = t.elements()
    candidates = []
    for f in t.factors:
        candidates.append([y for y in elts if all((f * a) % g == 0 for a, g in zip(y, t.factors))])
    out = []
    for cols in itertools.product(*candidates):
        m = tuple(tuple(cols[j][r] for j in range(len(cols))) for r in range(len(t.factors)))
        image = {apply_matrix(m, t, x) for x in elts}
        if len(image) == t.order:
            out.append(m)
    return out
