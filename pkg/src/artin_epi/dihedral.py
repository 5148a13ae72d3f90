"""The rank-two case: W(Ã_1) as the infinite dihedral group Z ⋊ {±1}.

An element (k, ε) is the affine map x -> εx + k of the integers, so
s_1 = (0, -) and s_2 = (1, -), and products compose maps left to right the
usual way.  Reflections have odd reduced length, translations even.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from math import gcd
from typing import Iterable, Sequence


class BoundExceeded(ValueError):
    pass


MAX_LEN_LIMIT = 11
CONJ_BOUND_LIMIT = 8


@dataclass(frozen=True, order=True)
class DihedralElem:
    offset: int = 0
    reflect: bool = False

    def __mul__(self, other: DihedralElem) -> DihedralElem:
        return d_mul(self, other)

    def inverse(self) -> DihedralElem:
        return self if self.reflect else DihedralElem(-self.offset, False)

    def __pow__(self, k: int) -> DihedralElem:
        base = self if k >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(k)):
            out = out * base
        return out

    def word(self) -> tuple[int, ...]:
        """The reduced alternating word in the letters 1, 2."""
        k = self.offset
        if not self.reflect:
            return (1, 2) * (-k) if k <= 0 else (2, 1) * k
        # (k, -) = (s_1 s_2)^{-k} s_1 for k <= 0 and (s_2 s_1)^{k-1} s_2 for k >= 1
        return (1, 2) * (-k) + (1,) if k <= 0 else (2, 1) * (k - 1) + (2,)

    def to_json(self) -> dict:
        return {"offset": self.offset, "reflect": self.reflect, "word": "".join(f"s{i}" for i in self.word()) or "e"}

    @classmethod
    def from_json(cls, obj: dict) -> DihedralElem:
        return cls(int(obj["offset"]), bool(obj["reflect"]))

    def __str__(self) -> str:
        return "".join(f"s{i}" for i in self.word()) or "e"


IDENTITY = DihedralElem(0, False)
S1 = DihedralElem(0, True)
S2 = DihedralElem(1, True)


def d_mul(a: DihedralElem, b: DihedralElem) -> DihedralElem:
    sign = -1 if a.reflect else 1
    return DihedralElem(a.offset + sign * b.offset, a.reflect != b.reflect)


def word_length(e: DihedralElem) -> int:
    return abs(2 * e.offset - 1) if e.reflect else 2 * abs(e.offset)


def from_word(word: Iterable[int]) -> DihedralElem:
    out = IDENTITY
    for i in word:
        out = out * (S1 if i == 1 else S2)
    return out


def reduce_word(word: Iterable[int]) -> tuple[int, ...]:
    """Free cancellation of s_i s_i, the literal oracle for multiplication."""
    stack: list[int] = []
    for i in word:
        if i not in (1, 2):
            raise ValueError(f"letter {i} is not 1 or 2")
        if stack and stack[-1] == i:
            stack.pop()
        else:
            stack.append(i)
    return tuple(stack)


def prod_q(a: DihedralElem, b: DihedralElem, q: int) -> DihedralElem:
    """Alternating product a b a b ... with q factors."""
    if q < 0:
        raise ValueError("q must be non-negative")
    out = IDENTITY
    for j in range(q):
        out = out * (a if j % 2 == 0 else b)
    return out


def elements_up_to(max_len: int) -> list[DihedralElem]:
    out = [IDENTITY]
    for length in range(1, max_len + 1):
        if length % 2:
            k = (length + 1) // 2
            out += [DihedralElem(1 - k, True), DihedralElem(k, True)]
        else:
            k = length // 2
            out += [DihedralElem(-k, False), DihedralElem(k, False)]
    return out


# --- surjectivity --------------------------------------------------------------


@dataclass(frozen=True)
class A1Morphism:
    img1: DihedralElem
    img2: DihedralElem

    def images(self) -> tuple[DihedralElem, DihedralElem]:
        return (self.img1, self.img2)

    def to_json(self) -> dict:
        return {"img1": self.img1.to_json(), "img2": self.img2.to_json()}

    def __str__(self) -> str:
        return f"({self.img1}, {self.img2})"


def translation_index(images: Sequence[DihedralElem]) -> int:
    """Index d of the translation subgroup dZ of the generated subgroup (0 if trivial)."""
    refl = [e.offset for e in images if e.reflect]
    d = 0
    for e in images:
        if not e.reflect:
            d = gcd(d, e.offset)
    for a in refl[1:]:
        d = gcd(d, a - refl[0])
    return d


def is_epi_a1(m: A1Morphism | Sequence[DihedralElem]) -> bool:
    images = m.images() if isinstance(m, A1Morphism) else tuple(m)
    if not any(e.reflect for e in images):
        return False
    return translation_index(images) == 1


def closure_reaches_generators(m: A1Morphism, radius: int | None = None) -> bool:
    """Breadth-first closure inside a ball of word length, checking s_1 and s_2 appear."""
    gens = [m.img1, m.img2, m.img1.inverse(), m.img2.inverse()]
    if radius is None:
        radius = 2 * max(word_length(m.img1), word_length(m.img2)) + 4
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen and word_length(y) <= radius:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return S1 in seen and S2 in seen


# --- automorphisms ----------------------------------------------------------------


def swap(e: DihedralElem) -> DihedralElem:
    """The graph symmetry s_1 <-> s_2."""
    return DihedralElem(1 - e.offset, True) if e.reflect else DihedralElem(-e.offset, False)


@dataclass(frozen=True)
class A1Auto:
    conj: DihedralElem
    swapped: bool = False

    def __call__(self, e: DihedralElem) -> DihedralElem:
        x = swap(e) if self.swapped else e
        return self.conj * x * self.conj.inverse()

    def apply(self, m: A1Morphism) -> A1Morphism:
        return A1Morphism(self(m.img1), self(m.img2))

    def to_json(self) -> dict:
        return {"conjugator": str(self.conj), "swap": self.swapped}


def bounded_autos(conj_bound: int) -> list[A1Auto]:
    return [A1Auto(c, s) for s in (False, True) for c in elements_up_to(conj_bound)]


def find_equivalence(a: A1Morphism, b: A1Morphism, conj_bound: int) -> A1Auto | None:
    for psi in bounded_autos(conj_bound):
        if psi.apply(a) == b:
            return psi
    return None


# --- the two families ---------------------------------------------------------------

LENGTH_TWO = (S1 * S2, S2 * S1)


def xi1(q: int, w2: DihedralElem = LENGTH_TWO[0], start: int = 1) -> A1Morphism:
    a, b = (S1, S2) if start == 1 else (S2, S1)
    return A1Morphism(prod_q(a, b, q), w2)


def xi2(q: int, w1: DihedralElem = LENGTH_TWO[0], start: int = 1) -> A1Morphism:
    a, b = (S1, S2) if start == 1 else (S2, S1)
    return A1Morphism(w1, prod_q(a, b, q))


MU = A1Morphism(S1, S2)


def family_of(m: A1Morphism) -> str | None:
    """Which listed shape the pair has: "xi1", "xi2", "mu" or None."""
    l1, l2 = word_length(m.img1), word_length(m.img2)
    if m == MU:
        return "mu"
    if l1 % 2 == 1 and l2 == 2:
        return "xi1"
    if m.img1 == LENGTH_TWO[0] and l2 % 2 == 1:
        return "xi2"
    return None


@dataclass
class A1Classification:
    max_len: int
    conj_bound: int
    epis: int
    classes: list[list[A1Morphism]]
    labels: list[list[str]]
    extras: list[A1Morphism] = field(default_factory=list)
    missing: list[A1Morphism] = field(default_factory=list)

    @property
    def representatives(self) -> list[A1Morphism]:
        return [c[0] for c in self.classes]

    def to_json(self) -> dict:
        return {
            "max_len": self.max_len,
            "conj_bound": self.conj_bound,
            "epimorphisms": self.epis,
            "classes": [
                {"representative": c[0].to_json(), "size": len(c), "families": lab}
                for c, lab in zip(self.classes, self.labels)
            ],
            "extras": [m.to_json() for m in self.extras],
            "missing": [m.to_json() for m in self.missing],
            "note": f"equivalence uses conjugators of length <= {self.conj_bound} with optional swap",
        }


def classify_bounded(max_len: int, conj_bound: int) -> A1Classification:
    if max_len > MAX_LEN_LIMIT or conj_bound > CONJ_BOUND_LIMIT:
        raise BoundExceeded(f"bounds limited to max_len <= {MAX_LEN_LIMIT}, conj_bound <= {CONJ_BOUND_LIMIT}")
    if max_len < 0 or conj_bound < 0:
        raise ValueError("bounds must be non-negative")
    elems = elements_up_to(max_len)
    epis = [A1Morphism(a, b) for a, b in iproduct(elems, elems) if is_epi_a1((a, b))]
    index = {m: i for i, m in enumerate(epis)}
    parent = list(range(len(epis)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    autos = bounded_autos(conj_bound)
    for i, m in enumerate(epis):
        for psi in autos:
            j = index.get(psi.apply(m))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[A1Morphism]] = {}
    for i, m in enumerate(epis):
        groups.setdefault(find(i), []).append(m)
    classes = [sorted(g, key=_key) for _, g in sorted(groups.items())]
    labels = [sorted({f for f in map(family_of, c) if f}) for c in classes]
    extras = [c[0] for c, lab in zip(classes, labels) if not lab]
    members = [xi1(q, w, s) for q in range(1, max_len + 1, 2) for w in LENGTH_TWO for s in (1, 2)]
    members += [xi2(q, LENGTH_TWO[0], s) for q in range(1, max_len + 1, 2) for s in (1, 2)]
    missing = [m for m in members if m not in index]
    return A1Classification(max_len, conj_bound, len(epis), classes, labels, extras, missing)


def _key(m: A1Morphism):
    return (word_length(m.img1) + word_length(m.img2), word_length(m.img1), m.img1, m.img2)


# --- the case list for pairs of long images -------------------------------------------


@dataclass(frozen=True)
class LengthCase:
    case: int
    l: int
    q: int
    w_prime_start: int
    stated_epi: bool
    oracle_epi: bool

    @property
    def agrees(self) -> bool:
        return self.stated_epi == self.oracle_epi


def long_image_cases(max_l: int = 8, max_q: int = 9) -> list[LengthCase]:
    """w = s_1 prod_l(s_2, s_1) against w' = prod_q(s_2, s_1) (and the s_1-first variant).

    ``stated_epi`` follows the case split used to rule out long images: only
    q = 2 (with l even) and l = 1 (with q odd) are listed as epimorphisms.
    """
    out = []
    for l in range(1, max_l + 1):
        w = S1 * prod_q(S2, S1, l)
        for q in range(2, max_q + 1):
            if l % 2 == 0 and q % 2 == 1:
                case, stated = 1, False
            elif l % 2 == 0 and q == 2:
                case, stated = 4, True
            elif l % 2 == 0 and q == l:
                case, stated = 2, False
            elif l % 2 == 0:
                case, stated = 3, False
            elif q % 2 == 0:
                case, stated = 5, False
            elif l == 1:
                case, stated = 8, True
            elif q == l:
                case, stated = 6, False
            else:
                case, stated = 7, False
            for start, (a, b) in ((2, (S2, S1)), (1, (S1, S2))):
                wp = prod_q(a, b, q)
                out.append(LengthCase(case, l, q, start, stated, is_epi_a1((w, wp))))
    return out
