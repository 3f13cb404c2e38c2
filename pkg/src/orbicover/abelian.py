"""Exact integer linear algebra: Smith invariants, kernels, congruence solving.

Matrices are lists of rows of Python ints.  Nothing here touches floating
point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/t_1 + ... + Z/t_k`` with ``t_i | t_{i+1}``."""

    free_rank: int
    torsion: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0 or any(t < 2 for t in self.torsion):
            raise ValueError(f"bad invariants {self.free_rank}, {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion not in divisibility order: {self.torsion}")

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _dense_invariants(m: Matrix) -> list[int]:
    """Nonzero Smith diagonal entries of a small dense matrix."""
    a = [row[:] for row in m if any(row)]
    if not a:
        return []
    nrows, ncols = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                bad = next(
                    ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t onto the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            _, i, j = min(cands)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def smith_invariants(rows: Sequence[Sequence[int]] | Sequence[dict], ncols: int) -> tuple[int, list[int]]:
    """Rank and invariant factors (>1) of the row lattice of an integer matrix.

    Rows may be dense sequences or sparse ``{column: value}`` dicts.  Unit
    pivots are eliminated sparsely first, which keeps relation matrices
    from large Reidemeister-Schreier presentations cheap; the remainder is
    reduced densely.
    """
    sparse: list[dict[int, int]] = []
    for r in rows:
        if isinstance(r, dict):
            d = {c: v for c, v in r.items() if v}
        else:
            d = {c: v for c, v in enumerate(r) if v}
        if d:
            sparse.append(d)
    col_rows: dict[int, set[int]] = {}
    for i, r in enumerate(sparse):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    alive = set(range(len(sparse)))
    rank = 0
    progress = True
    while progress:
        progress = False
        for i in sorted(alive, key=lambda i: len(sparse[i])):
            row = sparse[i]
            c = next((c for c, v in row.items() if v in (1, -1)), None)
            if c is None:
                continue
            sign = row[c]
            for k in list(col_rows.get(c, ())):
                if k == i:
                    continue
                other = sparse[k]
                f = other[c] * sign
                for cc, v in row.items():
                    nv = other.get(cc, 0) - f * v
                    if nv:
                        if cc not in other:
                            col_rows.setdefault(cc, set()).add(k)
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
                        col_rows[cc].discard(k)
                if not other:
                    alive.discard(k)
            for cc in row:
                col_rows[cc].discard(i)
            alive.discard(i)
            rank += 1
            progress = True
            break
    rest = [sparse[i] for i in sorted(alive)]
    cols = sorted({c for r in rest for c in r})
    dense = [[r.get(c, 0) for c in cols] for r in rest]
    diag = _dense_invariants(dense)
    return rank + len(diag), [d for d in diag if d > 1]


def cokernel_invariants(rows: Sequence[Sequence[int]] | Sequence[dict], ncols: int) -> AbelianInvariants:
    """Invariants of ``Z^ncols / rowspace(rows)``."""
    rank, factors = smith_invariants(rows, ncols)
    return AbelianInvariants(ncols - rank, tuple(sorted(factors)))


def column_echelon(rows: Sequence[Sequence[int]], ncols: int) -> tuple[Matrix, Matrix, Matrix, list[int]]:
    """Unimodular column reduction ``R V = H``.

    Returns ``(H, V, Vinv, pivot_rows)``; columns ``0..len(pivot_rows)-1`` of
    ``H`` are the nonzero ones, column ``j`` having its first nonzero entry
    in row ``pivot_rows[j]``.  The remaining columns of ``V`` form a basis of
    the integer kernel ``{q : R q = 0}``.
    """
    h = [list(r) for r in rows]
    n = ncols
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    vinv = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots: list[int] = []
    k = 0
    for i, row in enumerate(h):
        if k == n:
            break
        for c in range(k + 1, n):
            b = row[c]
            if not b:
                continue
            a = row[k]
            if a and b % a == 0:
                q = b // a
                for r in h:
                    r[c] -= q * r[k]
                for r in v:
                    r[c] -= q * r[k]
                vinv[k] = [x + q * y for x, y in zip(vinv[k], vinv[c])]
                continue
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            for r in h:
                rk, rc = r[k], r[c]
                r[k], r[c] = x * rk + y * rc, -bg * rk + ag * rc
            for r in v:
                rk, rc = r[k], r[c]
                r[k], r[c] = x * rk + y * rc, -bg * rk + ag * rc
            vk, vc = vinv[k], vinv[c]
            vinv[k] = [ag * p + bg * q for p, q in zip(vk, vc)]
            vinv[c] = [-y * p + x * q for p, q in zip(vk, vc)]
        if row[k]:
            pivots.append(i)
            k += 1
    return h, v, vinv, pivots


def kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> tuple[Matrix, Matrix]:
    """Integer kernel of ``R`` as columns, plus a left inverse.

    Returns ``(K, L)`` with ``K`` of shape ``ncols x r`` (``R K = 0``, columns a
    lattice basis) and ``L`` of shape ``r x ncols`` with ``L K = I``.
    """
    _, v, vinv, pivots = column_echelon(rows, ncols)
    k = len(pivots)
    kern = [r[k:] for r in v]
    left = vinv[k:]
    return kern, left


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """One integer solution of ``a x = b``, or ``None``."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    h, v, _, pivots = column_echelon(a, ncols)
    y = [0] * ncols
    for j, pr in enumerate(pivots):
        acc = b[pr] - sum(h[pr][t] * y[t] for t in range(j))
        if acc % h[pr][j]:
            return None
        y[j] = acc // h[pr][j]
    for i in range(nrows):
        if sum(h[i][t] * y[t] for t in range(len(pivots))) != b[i]:
            return None
    return [sum(v[r][t] * y[t] for t in range(ncols)) for r in range(ncols)]


def solve_mod(a: Sequence[Sequence[int]], b: Sequence[int], modulus: int) -> list[int] | None:
    """One solution of ``a x == b (mod modulus)`` with entries in ``[0, modulus)``."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [list(r) + [modulus * int(i == j) for j in range(nrows)] for i, r in enumerate(a)]
    x = solve_integer(aug, list(b))
    if x is None:
        return None
    return [t % modulus for t in x[:ncols]]


def int_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_sub(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_pow(a: Sequence[Sequence[int]], k: int) -> Matrix:
    result = identity(len(a))
    base = [list(r) for r in a]
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def lcm_all(values: Sequence[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
