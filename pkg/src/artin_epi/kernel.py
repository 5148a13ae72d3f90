"""Kernel generators of A -> W -> S_n and the epimorphism decision.

A morphism into W(Ã_{n-1}) is onto exactly when its permutation projection is
onto S_n and the words killed by that projection map onto the full translation
lattice.  The lattice is tested through its Smith invariant factors.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from fractions import Fraction
from math import factorial, gcd
from typing import Sequence

from .core import AffineElem, ArtinWord, GenImages, Perm, RankError, eval_word, perm_to_simple_word
from .families import MorphismSpec, arity, build_images
from .lattice import lattice_invariants
from .symmetric import subgroup_order

GENERATOR_SETS = ("GK", "PURE", "WRAPPED", "SCHREIER", "ALL")
WRAPPED_MAX_N = 6


class KernelError(ValueError):
    """A supposed kernel word has a non-trivial permutation image."""


def pure_braid_word(i: int, j: int, n: int) -> ArtinWord:
    """a_ij = σ_{j-1}..σ_{i+1} σ_i^2 σ_{i+1}^{-1}..σ_{j-1}^{-1}, for 1 <= i < j <= n."""
    if not 1 <= i < j <= n:
        raise RankError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    up = list(range(j - 1, i, -1))
    return ArtinWord.of(*up, i, i, *[-k for k in reversed(up)])


def gk_word(k: int, n: int) -> ArtinWord:
    """g_1..g_{n-1} mix σ_n into a cycle; g_n = σ_n^2 and g_{n+i} = σ_i^2."""
    if not 1 <= k <= 2 * n - 1:
        raise RankError(f"g_k index must lie in 1..{2 * n - 1}, got {k}")
    if k == n:
        return ArtinWord.of(n, n)
    if k > n:
        i = k - n
        return ArtinWord.of(i, i)
    head = ArtinWord.of(*range(k - 1, 0, -1), *range(k + 1, n + 1))
    tail = ArtinWord.of(*range(k, 0, -1), *range(k + 1, n))
    return head * tail.inverse()


def sigma_n_wrapped_words(n: int) -> list[ArtinWord]:
    """For every s in S_n: lift(s) σ_n lift(s (1,n))^{-1}, lifts being simple braids."""
    if n > WRAPPED_MAX_N:
        raise RankError(f"wrapped generators are n!-many; refusing n = {n} > {WRAPPED_MAX_N}")
    flip = Perm.transposition(n, 1, n)
    out = []
    for imgs in permutations(range(1, n + 1)):
        s = Perm(imgs)
        out.append(perm_to_simple_word(s) * ArtinWord.of(n) * perm_to_simple_word(s * flip).inverse())
    return out


def schreier_words(perms: Sequence[Perm]) -> list[ArtinWord]:
    """Schreier generators of the kernel of σ_i -> perms[i].

    Coset representatives come from a breadth-first spanning tree of the image
    group; each non-tree edge g --σ_i--> g' yields rep(g) σ_i rep(g')^{-1}.
    """
    ident = Perm.identity(perms[0].n)
    reps: dict[Perm, ArtinWord] = {ident: ArtinWord()}
    order = [ident]
    for g in order:
        for i, s in enumerate(perms, start=1):
            h = g * s
            if h not in reps:
                reps[h] = reps[g] * ArtinWord.of(i)
                order.append(h)
    out = []
    for g in order:
        for i, s in enumerate(perms, start=1):
            h = g * s
            w = reps[g] * ArtinWord.of(i)
            if w == reps[h]:
                continue  # tree edge, trivial generator
            out.append(w * reps[h].inverse())
    return out


def _is_standard(perms: Sequence[Perm]) -> bool:
    n = len(perms)
    return all(p == Perm.transposition(n, i, i + 1) for i, p in enumerate(perms[:-1], start=1)) and perms[-1] == Perm.transposition(n, 1, n)


def generator_words(perms: Sequence[Perm], which: str) -> list[ArtinWord]:
    n = len(perms)
    if which == "GK":
        return [gk_word(k, n) for k in range(1, 2 * n)]
    if which == "PURE":
        return [pure_braid_word(i, j, n) for i, j in combinations(range(1, n + 1), 2)]
    if which == "WRAPPED":
        return sigma_n_wrapped_words(n)
    if which == "SCHREIER":
        return schreier_words(perms)
    if which == "ALL":
        if not _is_standard(perms):
            return schreier_words(perms)
        words = generator_words(perms, "GK") + generator_words(perms, "PURE")
        if n <= WRAPPED_MAX_N:
            words += sigma_n_wrapped_words(n)
        return words
    raise ValueError(f"unknown generator set {which!r}; expected one of {GENERATOR_SETS}")


@dataclass(frozen=True)
class GenMatrix:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    def distinct_nonzero(self) -> list[tuple[int, ...]]:
        seen = []
        for r in self.rows:
            if any(r) and r not in seen:
                seen.append(r)
        return seen


def _kernel_rows(images: GenImages, words: Sequence[ArtinWord]) -> list[tuple[int, ...]]:
    rows = []
    for w in words:
        e = eval_word(images, w)
        if not e.perm.is_identity():
            raise KernelError(f"word {w} maps to {e}, which has a non-trivial permutation part")
        rows.append(e.trans)
    return rows


@lru_cache(maxsize=256)
def _linear_parts(family: str, n: int, which: str) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Kernel rows at each unit parameter vector.

    Every family is linear in its parameters and the permutation parts do not
    depend on them, so the rows at arbitrary parameters are combinations of these.
    """
    k = arity(family, n)
    zero = build_images(MorphismSpec(family, n, (0,) * k))
    words = generator_words(zero.perms(), which)
    parts = []
    for j in range(k):
        unit = [0] * k
        unit[j] = 1
        parts.append(tuple(_kernel_rows(build_images(MorphismSpec(family, n, tuple(unit))), words)))
    if not parts:
        parts.append(tuple(_kernel_rows(zero, words)))
    return tuple(parts)


def kernel_matrix(spec: MorphismSpec, generator_set: str = "ALL") -> GenMatrix:
    which = generator_set.upper()
    parts = _linear_parts(spec.family, spec.n, which)
    if not spec.params:
        return GenMatrix(spec.n, parts[0])
    rows = []
    for idx in range(len(parts[0])):
        rows.append(tuple(sum(c * part[idx][col] for c, part in zip(spec.params, parts)) for col in range(spec.n)))
    return GenMatrix(spec.n, tuple(rows))


def kernel_matrix_direct(images: GenImages, generator_set: str = "SCHREIER") -> GenMatrix:
    """Evaluate the generator words on explicit images (no parameter caching)."""
    words = generator_words(images.perms(), generator_set.upper())
    return GenMatrix(images.n, tuple(_kernel_rows(images, words)))


def project(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Drop the last coordinate: sum-zero vectors of Z^n are coordinates in Z^{n-1}."""
    return [tuple(r[:-1]) for r in rows]


def lattice_is_full(m: GenMatrix) -> tuple[bool, list[int]]:
    dim = m.n - 1
    uniq = list(dict.fromkeys(project(m.rows)))
    inv = lattice_invariants(uniq, dim)
    return all(d == 1 for d in inv), inv


@dataclass(frozen=True)
class EpiVerdict:
    is_epi: bool
    sn_surjective: bool
    lattice_full: bool
    invariant_factors: tuple[int, ...]
    generator_set: str = "ALL"

    def to_json(self) -> dict:
        return {
            "is_epi": self.is_epi,
            "sn_surjective": self.sn_surjective,
            "lattice_full": self.lattice_full,
            "invariant_factors": list(self.invariant_factors),
            "generator_set": self.generator_set,
        }


def verdict_for_images(images: GenImages, generator_set: str = "SCHREIER") -> EpiVerdict:
    perms = images.perms()
    onto = subgroup_order(perms) == factorial(images.n)
    full, inv = lattice_is_full(kernel_matrix_direct(images, generator_set))
    return EpiVerdict(onto and full, onto, full, tuple(inv), generator_set)


def is_epimorphism(spec: MorphismSpec, generator_set: str = "ALL") -> EpiVerdict:
    perms = build_images(MorphismSpec(spec.family, spec.n, (0,) * len(spec.params))).perms()
    onto = subgroup_order(perms) == factorial(spec.n)
    full, inv = lattice_is_full(kernel_matrix(spec, generator_set))
    return EpiVerdict(onto and full, onto, full, tuple(inv), generator_set.upper())


def _cubic_unit(a: int, b: int, c: int) -> bool:
    return (c - a) * (c + a) * (c + a + 2 * b) in (1, -1)


def predicted_is_epi(spec: MorphismSpec) -> bool:
    """Closed-form epimorphism conditions per family."""
    f, n, ps = spec.family, spec.n, spec.params
    if f == "MU":
        return True
    if f == "YP":
        y, p = ps
        return gcd(y, p) == 1 and (n % 2 == 1 or p % 2 == 1)
    if f == "L1":
        # conjugate to the two-parameter form with p = x_1 + ... + x_n
        y, p = ps[n], sum(ps[:n])
        return gcd(y, p) == 1 and (n % 2 == 1 or p % 2 == 1)
    if f == "L2":
        return False
    if f == "L3":
        x1, x2, x3 = ps
        return _cubic_unit(x1, x2, x3)
    if f == "L4":
        x1, x2, x3 = ps
        return _cubic_unit(x1, x3, x2)
    if f in ("L6", "L7"):
        x1, x2, x3 = ps
        return _cubic_unit(x2, x1, x3)
    if f == "L5":
        a, b, c, d = ps
        p = a + c + 2 * d
        q = a - c
        return (
            (a + c) % 2 == 1
            and gcd(gcd(a, c), d) == 1
            and gcd(d, p) == 1
            and gcd(d, q) == 1
            and gcd(d, p + 2 * b) == 1
        )
    raise ValueError(f"no closed form for family {f}")


def l5_matrix_rows(a: int, b: int, c: int, d: int) -> list[tuple[int, ...]]:
    """The fifteen tabulated kernel images, in the matrix's own parameter names."""
    x1, x2, x3, x4 = a, b, c, d
    return [
        (-x1 - x2 - x3 - x4, -3 * x4 - x2, x2 - x4, 5 * x4 + x3 + x2 + x1),
        (2 * x4, 2 * x4, -2 * x4, -2 * x4),
        (-x1 - x2, -4 * x4 - x2 - x3, 4 * x4 + x2 + x1, x2 + x3),
        (2 * x4, -2 * x4, -2 * x4, 2 * x4),
        (2 * x4, -2 * x4, 2 * x4, -2 * x4),
        (x4 - x1, 3 * x4 + x1, -3 * x4 - x3, x3 - x4),
        (-2 * x4, -2 * x4, 2 * x4, 2 * x4),
        (-4 * x4 - x1 - x2, -x3 - x2, x2 + x1, 4 * x4 + x3 + x2),
        (-5 * x4 - x1 - x2 - x3, x4 - x2, 3 * x4 + x2, x2 + x3 + x4 + x1),
        (-2 * x4, 2 * x4, -2 * x4, 2 * x4),
        (-2 * x4, 2 * x4, 2 * x4, -2 * x4),
        (-x4 - x1, x1 + x4, -x4 - x3, x4 + x3),
        (-3 * x4 - x1, x1 - x4, x4 - x3, 3 * x4 + x3),
        (-3 * x4 - x1 - x2 - x3, -x4 - x2, x4 + x2, 3 * x4 + x3 + x2 + x1),
        (-x1 - 2 * x4 - x2, -2 * x4 - x2 - x3, x2 + x1 + 2 * x4, 2 * x4 + x3 + x2),
    ]


def coboundary_shift(images: GenImages) -> tuple[Fraction, ...] | None:
    """A rational v with every image equal to [v - s.v]s, if one exists.

    Such a v conjugates the whole image (over Q) into the finite group S_n, so
    every kernel element maps to the zero translation and the morphism cannot be
    onto.  Solved by exact Gaussian elimination; v is normalised to v_n = 0.
    """
    n = images.n
    rows: list[list[Fraction]] = []
    for g in images.images:
        s = g.perm
        for i in range(1, n + 1):
            # (v - s.v)_i = v_i - v_{s^-1(i)}
            row = [Fraction(0)] * n
            row[i - 1] += 1
            row[s.inverse()(i) - 1] -= 1
            rows.append(row + [Fraction(g.trans[i - 1])])
    pin = [Fraction(0)] * n + [Fraction(0)]
    pin[n - 1] = Fraction(1)
    rows.append(pin)
    pivots = []
    r = 0
    for c in range(n):
        k = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in row[:n]) and row[n] != 0 for row in rows):
        return None
    v = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        v[c] = rows[i][n]
    return tuple(v)


def listed_kernel_vectors(family: str, params: Sequence[int]) -> list[tuple[int, ...]]:
    """The three non-zero kernel images stated for the n = 4 cubic families."""
    x1, x2, x3 = params
    table = {
        "L3": [(-x1 - x2, -x2 - x3, x1 + x2, x2 + x3), (-x2, -x1 - x2 - x3, x1 + x2 + x3, x2), (x3, -x3, x1, -x1)],
        "L4": [(-x3 - x1, -x2 - x3, x2 + x3, x3 + x1), (-x3 - x2 - x1, -x3, x3 + x2 + x1, x3), (-x1, x1, x2, -x2)],
        "L6": [(x1 + x2, -x1 - x2, x1 + x3, -x1 - x3), (x2, x3, -x2, -x3), (x1 + x2 + x3, -x1, x1, -x1 - x2 - x3)],
        "L7": [(x1 + x2, -x1 - x2, -x1 - x3, x3 + x1), (x1 + x2 + x3, -x1, -x1 - x2 - x3, x1), (x2, x3, -x3, -x2)],
    }
    return table[family]


LISTED_EPIS = {
    "L3": [(1, 0, 0), (-1, 0, 0), (1, -1, 0), (-1, 1, 0), (0, 0, 1), (0, 0, -1), (0, 1, -1), (0, -1, 1)],
    "L4": [(0, 1, 0), (0, -1, 0), (0, 1, -1), (0, -1, 1), (1, 0, 0), (-1, 0, 0), (1, 0, -1), (-1, 0, 1)],
    "L6": [(0, 1, 0), (0, -1, 0), (-1, 0, 1), (1, 0, -1), (0, 0, 1), (0, 0, -1), (1, -1, 0), (-1, 1, 0)],
    "L7": [(0, 1, 0), (0, -1, 0), (-1, 0, 1), (1, 0, -1), (0, 0, 1), (0, 0, -1), (1, -1, 0), (-1, 1, 0)],
}


def _cycle(n: int, orbit: Sequence[int]) -> Perm:
    # Orbits below are listed in the order the point is sent backwards under
    # our composition (p*q)(x) = p(q(x)), hence the inverse.
    return Perm.from_cycles(n, tuple(orbit)).inverse() if len(orbit) > 1 else Perm.identity(n)


def seq_down_closed_form(k: int, n: int, y: int) -> AffineElem:
    """Image of σ_k ... σ_1 under the normalized family."""
    t = [-(n - 1 - k) * y] * k + [0] + [k * y] * (n - k - 1)
    return AffineElem(tuple(t), _cycle(n, range(1, k + 2)))


def seq_up_closed_form(k: int, n: int, y: int) -> AffineElem:
    """Image of σ_1 ... σ_k."""
    t = [-(n * k - 2 * k) * y] + [(k - 1) * y] * k + [k * y] * (n - k - 1)
    return AffineElem(tuple(t), _cycle(n, [1] + list(range(k + 1, 1, -1))))


def seq_down_inv_closed_form(k: int, n: int, y: int) -> AffineElem:
    t = [0] + [(n - 1 - k) * y] * k + [-k * y] * (n - k - 1)
    return AffineElem(tuple(t), _cycle(n, [1] + list(range(k + 1, 1, -1))))


def seq_up_inv_closed_form(k: int, n: int, y: int) -> AffineElem:
    t = [-(k - 1) * y] * k + [(n * k - 2 * k) * y] + [-k * y] * (n - k - 1)
    return AffineElem(tuple(t), _cycle(n, range(1, k + 2)))


def gk_closed_form(k: int, n: int, y: int, p: int, sign: int = 1) -> tuple[int, ...]:
    """[0,..,0, c, -c, 0,..,0] with c = p + sign*(n^2 - nk - n)y at coordinates k, k+1."""
    c = p + sign * (n * n - n * k - n) * y
    v = [0] * n
    v[k - 1], v[k] = c, -c
    return tuple(v)


def gn_closed_form(n: int, y: int) -> tuple[int, ...]:
    v = [2 * y] * n
    v[0] = v[-1] = -(n - 2) * y
    return tuple(v)


def g_n_plus_i_closed_form(i: int, n: int, y: int) -> tuple[int, ...]:
    v = [2 * y] * n
    v[i - 1] = v[i] = -(n - 2) * y
    return tuple(v)


def pure_closed_form(i: int, j: int, n: int, y: int) -> tuple[int, ...]:
    v = [2 * y] * n
    v[i - 1] = v[j - 1] = -(n - 2) * y
    return tuple(v)


def det_product(n: int, y: int, p: int, ks: Sequence[int], sign: int = 1) -> int:
    """prod over k of (p + sign*(n^2 - kn - n)y); sign = 1 matches the computed g_k."""
    out = 1
    for k in ks:
        out *= p + sign * (n * n - k * n - n) * y
    return out


def square_minor(rows: Sequence[Sequence[int]], cols: Sequence[int] | None = None) -> int:
    from .lattice import determinant

    k = len(rows)
    cols = list(cols) if cols is not None else list(range(k))
    return determinant([[r[c] for c in cols] for r in rows])
