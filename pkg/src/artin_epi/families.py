"""Morphism families A(Ã_{n-1}) -> W(Ã_{n-1}) and relation checking."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import (
    AffineElem,
    CoxeterGraph,
    GenImages,
    Perm,
    RankError,
    coxeter_gens,
    perm_act,
    prod,
    trans_w,
)

FAMILIES = ("L1", "L2", "L3", "L4", "L5", "L6", "L7", "YP", "MU")
FIXED_RANK = {"L2": 6, "L3": 4, "L4": 4, "L5": 4, "L6": 4, "L7": 4}
STANDARD_PERMS = ("L1", "YP", "MU")


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class MorphismSpec:
    family: str
    n: int
    params: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")
        if self.family in FIXED_RANK and self.n != FIXED_RANK[self.family]:
            raise SpecError(f"family {self.family} lives at n={FIXED_RANK[self.family]}, got n={self.n}")
        if self.n < 3:
            raise SpecError("families are defined for n >= 3")
        want = arity(self.family, self.n)
        if len(self.params) != want:
            raise SpecError(f"family {self.family} at n={self.n} takes {want} parameters, got {len(self.params)}")

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "params": list(self.params)}

    @classmethod
    def from_json(cls, obj: dict) -> MorphismSpec:
        try:
            return cls(str(obj["family"]), int(obj["n"]), tuple(obj.get("params", ())))
        except (KeyError, TypeError) as exc:
            raise SpecError(f"malformed spec: {obj!r}") from exc


def arity(family: str, n: int) -> int:
    return {"L1": n + 1, "YP": 2, "L2": 5, "L3": 3, "L4": 3, "L5": 4, "L6": 3, "L7": 3, "MU": 0}[family]


# Image tables: per generator, the translation coordinates as linear forms in x1..xk,
# followed by the permutation part in cycle notation.
_TABLES: dict[str, list[tuple[list[str], list[tuple[int, ...]]]]] = {
    "L2": [
        (["x1-x2+x5-x4", "-x1+x2-x5+x4", "-x1+x3", "x1-x3", "-x2", "x2"], [(1, 2), (3, 4), (5, 6)]),
        (["x1-x2+x5-x3-x4", "-x5-x1+x2", "-x1+x2-x5+x3+x4", "-x5", "x5+x1-x2", "x5"], [(1, 3), (2, 5), (4, 6)]),
        (["-x2+x5-x4", "-x3", "x3", "x2-x5+x4", "-x2", "x2"], [(1, 4), (2, 3), (5, 6)]),
        (["x1-x2+x5-x4", "-x1+x2-x5+x4", "-x1+x2-x5+x3", "-x5", "x1-x2+x5-x3", "x5"], [(1, 2), (3, 5), (4, 6)]),
        (["x1-x2+x5-x3-x4", "-x1", "-x1+x2-x5+x3+x4", "x1", "-x2", "x2"], [(1, 3), (2, 4), (5, 6)]),
        (["-x4", "-x3", "x3", "-x5", "x4", "x5"], [(1, 5), (2, 3), (4, 6)]),
    ],
    "L3": [
        (["x3", "-x3-x1-x2", "x1", "x2"], [(1, 2, 3, 4)]),
        (["-x2-x1", "-x3", "x1", "x2+x3"], [(1, 3, 4, 2)]),
        (["x3", "-x3-x1-x2", "x1", "x2"], [(1, 2, 3, 4)]),
        (["x3", "-x2-x3", "x2+x1", "-x1"], [(1, 2, 4, 3)]),
    ],
    "L4": [
        (["-x1", "-x2-x3", "x2", "x1+x3"], [(1, 2, 3, 4)]),
        (["-x3-x1-x2", "x1", "x2", "x3"], [(1, 3, 4, 2)]),
        (["-x1", "-x2-x3", "x2", "x1+x3"], [(1, 2, 3, 4)]),
        (["-x3-x1-x2", "x1", "x2", "x3"], [(1, 3, 4, 2)]),
    ],
    "L5": [
        (["x1", "-x1-2x3", "x3", "x3"], [(1, 2)]),
        (["x3", "x4", "-2x3-x4", "x3"], [(2, 3)]),
        (["x3", "x3", "x2", "-2x3-x2"], [(3, 4)]),
        (["x3", "x4", "-2x3-x4", "x3"], [(2, 3)]),
    ],
    "L6": [
        (["x2", "x3", "x1", "-x2-x3-x1"], [(1, 3, 2, 4)]),
        (["x2", "-x2-x1", "x1+x3", "-x3"], [(1, 3, 4, 2)]),
        (["x2+x3+x1", "-x1", "-x2", "-x3"], [(1, 4, 2, 3)]),
        (["x2", "-x2-x1", "x1+x3", "-x3"], [(1, 3, 4, 2)]),
    ],
    "L7": [
        (["x2+x3+x1", "-x1", "-x3", "-x2"], [(1, 3, 2, 4)]),
        (["x2+x3+x1", "-x1-x2", "-x1-x3", "x1"], [(1, 3, 4, 2)]),
        (["x2", "x3", "-x2-x3-x1", "x1"], [(1, 4, 2, 3)]),
        (["x1+x2", "-x1", "-x2-x3-x1", "x1+x3"], [(1, 2, 4, 3)]),
    ],
}

_TERM = re.compile(r"([+-]?)(\d*)(?:x(\d+))?")


def parse_linear(expr: str, nvars: int) -> tuple[tuple[int, ...], int]:
    """Parse ``"-2x3-x4+1"`` into (coefficients over x1..x_nvars, constant)."""
    coeffs = [0] * nvars
    const = 0
    s = expr.replace(" ", "")
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse linear form {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(3) is None:
            if not m.group(2):
                raise ValueError(f"cannot parse linear form {expr!r}")
            const += sign * int(m.group(2))
        else:
            c = int(m.group(2)) if m.group(2) else 1
            coeffs[int(m.group(3)) - 1] += sign * c
        pos = m.end()
    return tuple(coeffs), const


def eval_linear(expr: str, params: Sequence[int]) -> int:
    coeffs, const = parse_linear(expr, len(params))
    return const + sum(c * x for c, x in zip(coeffs, params))


def _l1_images(n: int, xs: Sequence[int], y: int) -> list[AffineElem]:
    imgs = []
    for i in range(1, n):
        t = [y] * n
        t[i - 1] = -(n - 2) * y - xs[i - 1]
        t[i] = xs[i - 1]
        imgs.append(AffineElem(tuple(t), Perm.transposition(n, i, i + 1)))
    t = [y] * n
    t[0] = xs[n - 1]
    t[n - 1] = -(n - 2) * y - xs[n - 1]
    imgs.append(AffineElem(tuple(t), Perm.transposition(n, 1, n)))
    return imgs


# For these families the tabulated pair (u, s) stands for "permute by s, then
# translate by u", which is [s.u]s in the product law used here.  Read the
# other way round the tuples violate the braid relations.
PERMUTE_FIRST = frozenset({"L3", "L4", "L6", "L7"})


def printed_images(spec: MorphismSpec) -> GenImages:
    """The tabulated pairs taken verbatim as elements ``[u]s``."""
    if spec.family not in _TABLES:
        return build_images(spec)
    imgs = []
    for coords, cycles in _TABLES[spec.family]:
        t = tuple(eval_linear(c, spec.params) for c in coords)
        imgs.append(AffineElem(t, Perm.from_cycles(spec.n, *cycles)))
    return GenImages(imgs)


def build_images(spec: MorphismSpec) -> GenImages:
    n, ps = spec.n, spec.params
    if spec.family == "MU":
        return GenImages(coxeter_gens(n))
    if spec.family == "L1":
        return GenImages(_l1_images(n, ps[:n], ps[n]))
    if spec.family == "YP":
        y, p = ps
        return GenImages(_l1_images(n, [0] * (n - 1) + [p], y))
    printed = printed_images(spec)
    if spec.family in PERMUTE_FIRST:
        return GenImages(tuple(AffineElem(perm_act(g.perm, g.trans), g.perm) for g in printed.images))
    return printed


def family_perms(family: str, n: int) -> tuple[Perm, ...]:
    """Permutation parts of a family (independent of the parameters)."""
    zero = MorphismSpec(family, n, (0,) * arity(family, n))
    return build_images(zero).perms()


@dataclass
class RelationReport:
    failures: list[tuple[int, int, int, AffineElem | Perm, AffineElem | Perm]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, *_ in self.failures]


def check_coxeter_relations(images, graph: CoxeterGraph | None = None) -> RelationReport:
    """Check prod_m(a_i, a_j) == prod_m(a_j, a_i) for every finite edge of the graph.

    ``images`` may be a GenImages or a sequence of Perm; involutivity is not checked.
    """
    elems = images.images if isinstance(images, GenImages) else tuple(images)
    n = len(elems)
    graph = graph or CoxeterGraph.affine_a(n)
    if graph.n != n:
        raise RankError(f"graph rank {graph.n} vs {n} images")
    one = elems[0].identity(elems[0].n)
    report = RelationReport()
    for i, j, m in graph.edges():
        a, b = elems[i - 1], elems[j - 1]
        lhs, rhs = prod(a, b, m, one), prod(b, a, m, one)
        if lhs != rhs:
            report.failures.append((i, j, m, lhs, rhs))
    return report


# ---------------------------------------------------------------------------
# Dimension of the translation solution space for fixed permutation parts.


def _perm_matrix(p: Perm) -> list[list[int]]:
    n = p.n
    m = [[0] * n for _ in range(n)]
    for j in range(1, n + 1):
        m[p(j) - 1][j - 1] = 1
    return m


def _relation_equations(perms: Sequence[Perm], graph: CoxeterGraph) -> list[list[Fraction]]:
    """Linear equations in the n*n unknown translation coordinates.

    The translation of a product [u_1]s_1 ... [u_k]s_k is
    u_1 + s_1 u_2 + s_1 s_2 u_3 + ...; both sides of each relation give such a sum.
    """
    n = len(perms)
    nv = n * n
    rows: list[list[Fraction]] = []

    def word_coeffs(word: list[int]) -> list[list[int]]:
        # coefficient block: n rows (coords) x nv cols
        block = [[0] * nv for _ in range(n)]
        prefix = Perm.identity(n)
        for g in word:
            pm = _perm_matrix(prefix)
            for r in range(n):
                for c in range(n):
                    if pm[r][c]:
                        block[r][(g - 1) * n + c] += pm[r][c]
            prefix = prefix * perms[g - 1]
        return block

    for i, j, m in graph.edges():
        lw = [i if k % 2 == 0 else j for k in range(m)]
        rw = [j if k % 2 == 0 else i for k in range(m)]
        lb, rb = word_coeffs(lw), word_coeffs(rw)
        for r in range(n):
            rows.append([Fraction(a - b) for a, b in zip(lb[r], rb[r])])
    for g in range(n):
        row = [Fraction(0)] * nv
        for c in range(n):
            row[g * n + c] = Fraction(1)
        rows.append(row)
    return rows


def rational_rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class SolutionSpace:
    n: int
    dimension: int
    n_unknowns: int
    n_equations: int


def solve_translation_space(n: int, perm_parts: Sequence[Perm]) -> SolutionSpace:
    """Dimension of the space of translation parts making ``[u_i]perm_i`` satisfy the relations."""
    perms = tuple(perm_parts)
    if len(perms) != n or any(p.n != n for p in perms):
        raise RankError("need n permutations of rank n")
    graph = CoxeterGraph.affine_a(n)
    if not check_coxeter_relations(perms, graph).ok:
        raise ValueError("permutation parts do not satisfy the relations")
    rows = _relation_equations(perms, graph)
    return SolutionSpace(n, n * n - rational_rank(rows), n * n, len(rows))


# ---------------------------------------------------------------------------
# Normalisation of the L1 family by inner automorphisms.


def conjugate_images(w: AffineElem, images: GenImages) -> GenImages:
    winv = w.inverse()
    return GenImages(tuple(w * g * winv for g in images.images))


def conjugate_by_shift(v: Sequence[int], images: GenImages) -> GenImages:
    """Conjugate by the translation ``v`` of Z^n (its coordinates need not sum to zero).

    ``[u]s`` becomes ``[u + v - s.v]s``.  When ``sum(v)`` is a multiple of n this is
    the inner automorphism of an honest element of W; otherwise it composes an inner
    automorphism with a rotation of the Coxeter graph.
    """
    out = []
    for g in images.images:
        moved = perm_act(g.perm, v)
        out.append(AffineElem(tuple(u + a - b for u, a, b in zip(g.trans, v, moved)), g.perm))
    return GenImages(tuple(out))


def shift_as_inner(v: Sequence[int]) -> AffineElem | None:
    """The element of W inducing the same conjugation as ``v``, if there is one."""
    n = len(v)
    total = sum(v)
    if total % n:
        return None
    c = total // n
    return AffineElem.translation(tuple(x - c for x in v))


def normalize_to_yp(spec: MorphismSpec) -> tuple[int, int, tuple[int, ...]]:
    """Conjugate an L1 morphism into the two-parameter normal form.

    First the chain w_{2,-x1}, w_{3,-x1-x2}, ..., w_{n-1,-(x1+..+x_{n-2})} clears
    σ_1..σ_{n-2}.  These conjugations also move σ_{n-1}, whose leftover value r is
    cleared by the translation -r e_n of Z^n.  Returns ``(y, p, v)`` where ``v`` is
    the total conjugating translation (see ``conjugate_by_shift``).
    """
    if spec.family != "L1":
        raise SpecError("normalize_to_yp expects an L1 spec")
    n = spec.n
    xs, y = spec.params[:n], spec.params[n]
    images = build_images(spec)
    total = [0] * n
    for i in range(2, n):
        w = trans_w(n, i, -sum(xs[: i - 1]))
        images = conjugate_images(w, images)
        total = [a + b for a, b in zip(total, w.trans)]
    r = images[n - 1].trans[n - 1]
    last = [0] * (n - 1) + [-r]
    images = conjugate_by_shift(last, images)
    total = [a + b for a, b in zip(total, last)]
    p = images[n].trans[0]
    expected = build_images(MorphismSpec("YP", n, (y, p)))
    if images != expected:
        raise AssertionError(f"normalisation failed: {images} vs {expected}")
    return y, p, tuple(total)


def closed_form_p(n: int, xs: Sequence[int]) -> int:
    """The tabulated closed formula x_n - (n-5)x_1 - (n-6)x_2 - ... + 2x_{n-1} + x_{n-2}, n >= 7.

    The coefficient of x_i is taken as -(n-4-i) for i <= n-5, which is how the
    leading terms continue.
    """
    x = lambda i: xs[i - 1]  # noqa: E731
    return x(n) - sum((n - 4 - i) * x(i) for i in range(1, n - 4)) + 2 * x(n - 1) + x(n - 2)
