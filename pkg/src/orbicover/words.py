"""Words in free groups.

A word is a tuple of nonzero ints: ``i + 1`` stands for generator ``i`` and
``-(i + 1)`` for its inverse.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def gen(i: int, power: int = 1) -> Word:
    letter = i + 1 if power > 0 else -(i + 1)
    return (letter,) * abs(power)


def reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def concat(*words: Sequence[int]) -> Word:
    return reduce(x for w in words for x in w)


def power(word: Sequence[int], k: int) -> Word:
    if k < 0:
        word, k = inverse(word), -k
    return reduce(tuple(word) * k)


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """``u v u^-1 v^-1``."""
    return concat(u, v, inverse(u), inverse(v))


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def is_conjugate(u: Sequence[int], v: Sequence[int]) -> bool:
    """Conjugacy in the free group: cyclic reductions are rotations of each other."""
    a, b = cyclic_reduce(u), cyclic_reduce(v)
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    n = len(a)
    return any(doubled[i:i + n] == b for i in range(n))


def substitute(word: Sequence[int], images: Sequence[Sequence[int]]) -> Word:
    """Apply the homomorphism ``gen i -> images[i]``."""
    out: list[int] = []
    for x in word:
        img = images[x - 1] if x > 0 else inverse(images[-x - 1])
        out.extend(img)
    return reduce(out)


def exponent_vector(word: Sequence[int], ngens: int) -> list[int]:
    vec = [0] * ngens
    for x in word:
        if x > 0:
            vec[x - 1] += 1
        else:
            vec[-x - 1] -= 1
    return vec


def format_word(word: Sequence[int], names: Sequence[str]) -> str:
    if not word:
        return "1"
    parts = []
    for x in word:
        name = names[abs(x) - 1]
        parts.append(name if x > 0 else name + "^-1")
    return "*".join(parts)
