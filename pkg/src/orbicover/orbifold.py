"""Closed orientable 2-orbifolds: signatures, Euler characteristics, presentations."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import words as W
from .abelian import AbelianInvariants, cokernel_invariants

Rational = Fraction


@dataclass(frozen=True)
class OrbifoldSignature:
    """Genus and cone orders; cone orders are kept sorted, so equality is
    equality of multisets."""

    genus: int
    cone_orders: tuple[int, ...] = ()

    def __post_init__(self):
        cones = tuple(sorted(int(c) for c in self.cone_orders))
        if self.genus < 0:
            raise ValueError(f"negative genus {self.genus}")
        if any(c < 2 for c in cones):
            raise ValueError(f"cone orders must be >= 2: {cones}")
        object.__setattr__(self, "cone_orders", cones)

    @classmethod
    def parse(cls, text: str) -> "OrbifoldSignature":
        m = re.fullmatch(r"\s*S\(\s*(\d+)\s*;\s*([\d,\s]*)\)\s*", text)
        if not m:
            raise ValueError(f"malformed signature {text!r}")
        cones = [int(t) for t in m.group(2).replace(" ", "").split(",") if t]
        return cls(int(m.group(1)), tuple(cones))

    def __str__(self) -> str:
        if not self.cone_orders:
            return f"S({self.genus};)"
        return f"S({self.genus}; {','.join(map(str, self.cone_orders))})"

    def add_cone(self, order: int) -> "OrbifoldSignature":
        return OrbifoldSignature(self.genus, self.cone_orders + (order,))


def euler_characteristic(s: OrbifoldSignature) -> Fraction:
    """Orbifold Euler characteristic ``2 - 2g - sum(1 - 1/c)``."""
    chi = Fraction(2 - 2 * s.genus)
    for c in s.cone_orders:
        chi -= 1 - Fraction(1, c)
    return chi


def riemann_hurwitz_check(base: OrbifoldSignature, total: OrbifoldSignature, degree: int) -> bool:
    if degree < 1:
        raise ValueError("degree must be >= 1")
    return euler_characteristic(total) == degree * euler_characteristic(base)


def genus_from_chi(chi: Fraction, cone_orders: Sequence[int]) -> Fraction:
    """Genus forced by an orbifold Euler characteristic and cone orders."""
    underlying = chi + sum(1 - Fraction(1, c) for c in cone_orders)
    return (2 - underlying) / 2


@dataclass(frozen=True)
class ConeWord:
    """A loop around one cone point (or puncture), as a word in the presentation.

    ``order`` is 0 for a puncture.  ``label`` identifies the marked point for
    reporting.
    """

    word: W.Word
    order: int
    label: str = ""


class OrbifoldPresentation:
    """Standard presentation of ``pi_1^orb``.

    Generators are ``a1, b1, ..., ag, bg, x1, ..., xk``; relations are the
    powers ``xj^cj`` (omitted for punctures, ``cj == 0``) followed by the long
    relation ``[a1,b1]...[ag,bg] x1...xk``.
    """

    def __init__(self, genus: int, cone_orders: Sequence[int], cone_labels: Sequence[str] | None = None):
        self.genus = genus
        self.cone_orders = tuple(cone_orders)
        self.generators = tuple(
            [name for i in range(1, genus + 1) for name in (f"a{i}", f"b{i}")]
            + [f"x{j}" for j in range(1, len(self.cone_orders) + 1)]
        )
        k = len(self.cone_orders)
        rels = [W.gen(2 * genus + j, c) for j, c in enumerate(self.cone_orders) if c]
        long_rel: list[int] = []
        for i in range(genus):
            long_rel.extend(W.commutator(W.gen(2 * i), W.gen(2 * i + 1)))
        long_rel.extend(2 * genus + j + 1 for j in range(k))
        rels.append(tuple(long_rel))
        self.relations = tuple(rels)
        labels = cone_labels or [f"x{j + 1}" for j in range(k)]
        self.cone_words = tuple(
            ConeWord(W.gen(2 * genus + j), c, labels[j]) for j, c in enumerate(self.cone_orders)
        )

    @property
    def is_punctured(self) -> bool:
        return any(c == 0 for c in self.cone_orders)

    @cached_property
    def signature(self) -> OrbifoldSignature:
        if self.is_punctured:
            raise ValueError("punctured presentation has no closed signature")
        return OrbifoldSignature(self.genus, self.cone_orders)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def root(self) -> "OrbifoldPresentation":
        return self

    def expand(self, word: W.Word) -> W.Word:
        """Word in the root presentation; a standard presentation is its own root."""
        return tuple(word)

    def handle_index(self, i: int) -> tuple[int, int]:
        return 2 * i, 2 * i + 1

    def cone_index(self, j: int) -> int:
        return 2 * self.genus + j

    def abelianization(self) -> AbelianInvariants:
        return cokernel_invariants([W.exponent_vector(r, self.ngens) for r in self.relations], self.ngens)

    def format_relations(self) -> list[str]:
        return [W.format_word(r, self.generators) for r in self.relations]

    def __repr__(self) -> str:
        return f"OrbifoldPresentation(genus={self.genus}, cones={self.cone_orders})"


def presentation(s: OrbifoldSignature, cone_labels: Sequence[str] | None = None) -> OrbifoldPresentation:
    return OrbifoldPresentation(s.genus, s.cone_orders, cone_labels)


def punctured_presentation(genus: int, npunctures: int) -> OrbifoldPresentation:
    """Surface of genus ``genus`` with marked points removed (free group)."""
    return OrbifoldPresentation(genus, (0,) * npunctures)


def expected_abelianization(s: OrbifoldSignature) -> AbelianInvariants:
    """``H_1^orb``: ``Z^{2g}`` plus the finite part cut out by the cone relations."""
    return presentation(s).abelianization()
