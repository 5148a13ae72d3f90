"""Exact integer lattice tools: Hermite/Smith reduction and minor gcds."""
from __future__ import annotations

from itertools import combinations
from math import gcd
from typing import Iterable, Sequence


def _det(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant."""
    k = len(m)
    if k == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for i in range(k - 1):
        if a[i][i] == 0:
            for r in range(i + 1, k):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[k - 1][k - 1]


def determinant(m: Sequence[Sequence[int]]) -> int:
    return _det([list(map(int, r)) for r in m])


def minor_gcd(rows: Sequence[Sequence[int]], r: int, columns: Sequence[int] | None = None) -> int:
    """gcd of all ``r x r`` minors using the given 0-based columns (default: all but the last)."""
    rows = [list(map(int, row)) for row in rows]
    if not rows:
        if r == 0:
            return 1
        raise ValueError("no rows")
    width = len(rows[0])
    cols = list(columns) if columns is not None else list(range(width - 1))
    if r > len(rows) or r > len(cols):
        raise ValueError(f"minor size {r} exceeds matrix shape {len(rows)}x{len(cols)}")
    g = 0
    for rs in combinations(range(len(rows)), r):
        for cs in combinations(cols, r):
            g = gcd(g, _det([[rows[i][j] for j in cs] for i in rs]))
            if g == 1:
                return 1
    return g


class HermiteBasis:
    """Row-echelon basis of the lattice spanned by the rows added so far.

    Rows are reduced as they arrive, so the stored basis never exceeds the
    ambient dimension however many generators are fed in.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.pivots: dict[int, list[int]] = {}

    def add(self, row: Iterable[int]) -> None:
        v = [int(x) for x in row]
        if len(v) != self.dim:
            raise ValueError(f"row of length {len(v)}, expected {self.dim}")
        for c in range(self.dim):
            if v[c] == 0:
                continue
            b = self.pivots.get(c)
            if b is None:
                if v[c] < 0:
                    v = [-x for x in v]
                self.pivots[c] = v
                return
            # Extended Euclid on the pivot column, keeping both rows integral.
            a0, b0 = b[c], v[c]
            g, s, t = _xgcd(a0, b0)
            new_pivot = [s * x + t * y for x, y in zip(b, v)]
            v = [(a0 // g) * y - (b0 // g) * x for x, y in zip(b, v)]
            self.pivots[c] = new_pivot
        return

    def rows(self) -> list[list[int]]:
        return [self.pivots[c] for c in sorted(self.pivots)]

    def rank(self) -> int:
        return len(self.pivots)

    def pivot_product(self) -> int:
        """Index of the lattice in its saturation when full rank (product of pivots)."""
        out = 1
        for c in self.pivots:
            out *= self.pivots[c][c]
        return abs(out)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) > 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_invariants(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Smith invariant factors ``d_1 | d_2 | ...`` of an integer matrix, zeros included.

    The list has length ``min(#rows, #cols)``; trailing zeros mark rank deficiency.
    """
    a = [list(map(int, r)) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    m = len(a)
    size = min(m, ncols)
    t = 0
    while t < size:
        # pick the smallest nonzero entry of the remaining block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, ncols):
                x = a[i][j]
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # enforce divisibility of the rest of the block by the pivot
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, ncols) if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the new smallest entry of row/col t into the pivot slot
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        t += 1
    diag = [abs(a[i][i]) for i in range(t)]
    return diag + [0] * (size - t)


def lattice_invariants(rows: Sequence[Sequence[int]], dim: int) -> list[int]:
    """Invariant factors (length ``dim``) of the lattice spanned by ``rows`` in Z^dim."""
    basis = HermiteBasis(dim)
    for r in rows:
        basis.add(r)
    reduced = basis.rows()
    if not reduced:
        return [0] * dim
    inv = smith_invariants(reduced, dim)
    return inv + [0] * (dim - len(inv))


def lattice_is_full(rows: Sequence[Sequence[int]], dim: int) -> tuple[bool, list[int]]:
    inv = lattice_invariants(rows, dim)
    return all(d == 1 for d in inv), inv


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], dim: int) -> bool:
    """True when both row sets span the same sublattice of Z^dim."""
    ha, hb = HermiteBasis(dim), HermiteBasis(dim)
    for r in a:
        ha.add(r)
    for r in b:
        hb.add(r)
    if ha.rank() != hb.rank():
        return False
    joint = HermiteBasis(dim)
    for r in ha.rows() + hb.rows():
        joint.add(r)
    # equal iff each is contained in the other: index comparisons via Smith factors
    ia = smith_invariants(ha.rows(), dim) if ha.rows() else []
    ib = smith_invariants(hb.rows(), dim) if hb.rows() else []
    ij = smith_invariants(joint.rows(), dim) if joint.rows() else []
    return joint.rank() == ha.rank() and _prod(ia) == _prod(ij) == _prod(ib)


def _prod(xs: Sequence[int]) -> int:
    out = 1
    for x in xs:
        if x:
            out *= x
    return out
