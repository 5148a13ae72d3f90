"""Homomorphisms from the affine braid group onto S_n.

Images of σ_1..σ_n are searched depth first; every adjacent pair must braid
and every non-adjacent pair must commute (the cycle graph on n vertices).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Iterable, Sequence

from .core import CoxeterGraph, Perm, RankError


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SnHom:
    perms: tuple[Perm, ...]

    @property
    def n(self) -> int:
        return len(self.perms)

    def to_json(self) -> list[list[int]]:
        return [list(p.images) for p in self.perms]

    def __str__(self) -> str:
        return ", ".join(f"σ{i}={p}" for i, p in enumerate(self.perms, start=1))


@dataclass
class SearchResult:
    classes: list[SnHom]
    nodes: int
    complete: bool
    notes: list[str] = field(default_factory=list)


def subgroup_order(perms: Iterable[Perm]) -> int:
    gens = list(perms)
    if not gens:
        return 1
    n = gens[0].n
    ident = Perm.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)


def generates_sn(perms: Sequence[Perm]) -> bool:
    return subgroup_order(perms) == factorial(perms[0].n)


def _braid(a: Perm, b: Perm) -> bool:
    return a * b * a == b * a * b


def _commute(a: Perm, b: Perm) -> bool:
    return a * b == b * a


def satisfies_relations(perms: Sequence[Perm]) -> bool:
    n = len(perms)
    for i, j, m in CoxeterGraph.affine_a(n).edges():
        a, b = perms[i - 1], perms[j - 1]
        if m == 3 and not _braid(a, b):
            return False
        if m == 2 and not _commute(a, b):
            return False
    return True


def _class_reps(n: int) -> list[Perm]:
    """One permutation per cycle type, built from consecutive blocks."""
    reps = []
    seen = set()
    for p in map(Perm, permutations(range(1, n + 1))):
        ct = p.cycle_type()
        if ct not in seen:
            seen.add(ct)
            reps.append(_canonical_of_type(n, ct))
    return reps


def _canonical_of_type(n: int, ct: tuple[int, ...]) -> Perm:
    cycles = []
    start = 1
    for length in ct:
        if length > 1:
            cycles.append(tuple(range(start, start + length)))
        start += length
    return Perm.from_cycles(n, *cycles) if cycles else Perm.identity(n)


def canonical_form(perms: Sequence[Perm], conjugators: Sequence[Perm]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least image tuple over simultaneous conjugation."""
    best = None
    for c in conjugators:
        ci = c.inverse()
        key = tuple((c * p * ci).images for p in perms)
        if best is None or key < best:
            best = key
    return best


def enumerate_surjective_homs(n: int, budget: int = 10**7, nondegenerate: bool = True) -> SearchResult:
    """Representatives of surjective homomorphisms up to simultaneous S_n conjugation.

    Adjacent images braid, so all images are conjugate to σ_1; σ_1 is fixed to one
    representative per cycle type and the rest range over its conjugacy class.
    With ``nondegenerate`` set, tuples where two adjacent generators share an
    image are skipped (the braid relation is then vacuous for that pair).
    """
    if n < 3:
        raise RankError("enumeration supports n >= 3")
    allp = [Perm(p) for p in permutations(range(1, n + 1))]
    by_type: dict[tuple[int, ...], list[Perm]] = {}
    for p in allp:
        by_type.setdefault(p.cycle_type(), []).append(p)
    target = factorial(n)
    nodes = 0
    found: dict[tuple, SnHom] = {}
    complete = True

    def compatible(chosen: list[Perm], cand: Perm) -> bool:
        k = len(chosen)  # cand is the image of σ_{k+1}
        if nondegenerate and (cand == chosen[k - 1] or (k + 1 == n and cand == chosen[0])):
            return False
        if not _braid(chosen[k - 1], cand):
            return False
        for j in range(k - 1):
            adjacent_wrap = k + 1 == n and j == 0
            if adjacent_wrap:
                if not _braid(chosen[0], cand):
                    return False
            elif not _commute(chosen[j], cand):
                return False
        return True

    for rep in _class_reps(n):
        if rep.is_identity():
            continue
        pool = by_type[rep.cycle_type()]
        stack: list[list[Perm]] = [[rep]]
        while stack:
            chosen = stack.pop()
            nodes += 1
            if nodes > budget:
                complete = False
                break
            if len(chosen) == n:
                if subgroup_order(chosen) == target:
                    key = canonical_form(chosen, allp)
                    found.setdefault(key, SnHom(tuple(Perm(k) for k in key)))
                continue
            for cand in pool:
                if compatible(chosen, cand):
                    stack.append(chosen + [cand])
        if not complete:
            break
    classes = [found[k] for k in sorted(found)]
    return SearchResult(classes=classes, nodes=nodes, complete=complete)


def are_conjugate(a: Sequence[Perm], b: Sequence[Perm]) -> bool:
    n = a[0].n
    for c in map(Perm, permutations(range(1, n + 1))):
        ci = c.inverse()
        if all(c * x * ci == y for x, y in zip(a, b)):
            return True
    return False


def expand_from_sigma1_D(n: int, sigma1: Perm, D: Perm, sigma_n: Perm | None = None) -> SnHom:
    """Build σ_{i+1} = D^{-1} σ_i D for i < n-1, then σ_n (given, or continued by the same rule)."""
    if n not in (4, 6):
        raise RankError("the shift notation is only used for n = 4 and n = 6")
    perms = [sigma1]
    Dinv = D.inverse()
    for _ in range(n - 2):
        perms.append(Dinv * perms[-1] * D)
    perms.append(sigma_n if sigma_n is not None else Dinv * perms[-1] * D)
    return SnHom(tuple(perms))


def _c(n: int, *cycles) -> Perm:
    return Perm.from_cycles(n, *cycles) if cycles else Perm.identity(n)


def standard_hom(n: int) -> SnHom:
    perms = [_c(n, (i, i + 1)) for i in range(1, n)] + [_c(n, (1, n))]
    return SnHom(tuple(perms))


def listed_homs() -> dict[int, SnHom]:
    """The seven listed representations (item 1 at n = 4; item 2 at n = 6)."""
    return {
        1: standard_hom(4),
        2: expand_from_sigma1_D(6, _c(6, (1, 2), (3, 4), (5, 6)), _c(6, (1, 2, 3), (4, 5)), _c(6, (1, 5), (2, 3), (4, 6))),
        3: expand_from_sigma1_D(4, _c(4, (1, 2, 3, 4)), _c(4, (1, 2)), _c(4, (1, 2, 4, 3))),
        4: expand_from_sigma1_D(4, _c(4, (1, 2, 3, 4)), _c(4, (1, 2)), _c(4, (1, 3, 4, 2))),
        5: SnHom((_c(4, (1, 2)), _c(4, (2, 3)), _c(4, (3, 4)), _c(4, (2, 3)))),
        6: expand_from_sigma1_D(4, _c(4, (1, 3, 2, 4)), _c(4, (1, 2, 3, 4)), _c(4, (1, 3, 4, 2))),
        7: expand_from_sigma1_D(4, _c(4, (1, 3, 2, 4)), _c(4, (1, 2, 3, 4)), _c(4, (1, 2, 4, 3))),
    }
