"""Exact arithmetic in the affine Weyl group W(Ã_{n-1}).

Elements are pairs ``[u]s`` with ``u`` an integer vector of length ``n``
summing to zero and ``s`` a permutation of ``{1..n}``.  Products follow

    [u]s * [v]t = [u + s.v](s o t),   (s.v)_i = v_{s^-1(i)},   (s o t)(x) = s(t(x)).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import inf
from typing import Iterable, Sequence

RootVec = tuple[int, ...]


class RankError(ValueError):
    """Operands live in groups of different rank, or an index is out of range."""


@dataclass(frozen=True)
class Perm:
    """Bijection of {1..n} in one-line notation: ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        n = len(self.images)
        if n < 1 or sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Perm:
        """Build from disjoint or overlapping cycles, composed right to left."""
        result = cls.identity(n)
        for cyc in reversed(cycles):
            img = list(range(1, n + 1))
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
            result = cls(tuple(img)) * result
        return result

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Perm:
        return cls.from_cycles(n, (i, j))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Perm) -> Perm:
        return perm_compose(self, other)

    def __pow__(self, k: int) -> Perm:
        base = self if k >= 0 else self.inverse()
        result = Perm.identity(self.n)
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def inversions(self) -> int:
        im = self.images
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if im[a] > im[b])

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        return tuple(sorted(lengths + [1] * (self.n - sum(lengths)), reverse=True))

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Return ``p o q``; ``q`` is applied first."""
    if p.n != q.n:
        raise RankError(f"rank mismatch: {p.n} vs {q.n}")
    return Perm(tuple(p.images[x - 1] for x in q.images))


def perm_act(p: Perm, v: Sequence[int]) -> RootVec:
    """Permute coordinates: the entry at position ``i`` moves to position ``p(i)``."""
    if p.n != len(v):
        raise RankError(f"rank mismatch: {p.n} vs {len(v)}")
    out = [0] * p.n
    for i, x in enumerate(v):
        out[p.images[i] - 1] = x
    return tuple(out)


def root_vec(coords: Iterable[int]) -> RootVec:
    v = tuple(int(c) for c in coords)
    if sum(v) != 0:
        raise ValueError(f"coordinates must sum to zero: {v}")
    return v


@dataclass(frozen=True)
class AffineElem:
    """The element ``[trans]perm`` of W(Ã_{n-1})."""

    trans: RootVec
    perm: Perm

    def __post_init__(self):
        object.__setattr__(self, "trans", root_vec(self.trans))
        if len(self.trans) != self.perm.n:
            raise RankError(f"translation has length {len(self.trans)}, permutation rank {self.perm.n}")

    @classmethod
    def identity(cls, n: int) -> AffineElem:
        return cls((0,) * n, Perm.identity(n))

    @classmethod
    def translation(cls, v: Sequence[int]) -> AffineElem:
        return cls(tuple(v), Perm.identity(len(v)))

    @classmethod
    def of_perm(cls, p: Perm) -> AffineElem:
        return cls((0,) * p.n, p)

    @property
    def n(self) -> int:
        return self.perm.n

    def __mul__(self, other: AffineElem) -> AffineElem:
        return affine_mul(self, other)

    def __pow__(self, k: int) -> AffineElem:
        if self.perm.is_identity():
            return AffineElem(tuple(k * x for x in self.trans), self.perm)
        base = self if k >= 0 else self.inverse()
        result = AffineElem.identity(self.n)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> AffineElem:
        return affine_inv(self)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.trans)

    def to_json(self) -> dict:
        return {"t": list(self.trans), "p": list(self.perm.images)}

    @classmethod
    def from_json(cls, obj: dict) -> AffineElem:
        return cls(tuple(obj["t"]), Perm(tuple(obj["p"])))

    def __str__(self) -> str:
        return f"[{','.join(map(str, self.trans))}]{self.perm}"


def affine_mul(a: AffineElem, b: AffineElem) -> AffineElem:
    if a.n != b.n:
        raise RankError(f"rank mismatch: {a.n} vs {b.n}")
    moved = perm_act(a.perm, b.trans)
    return AffineElem(tuple(x + y for x, y in zip(a.trans, moved)), a.perm * b.perm)


def affine_inv(a: AffineElem) -> AffineElem:
    pinv = a.perm.inverse()
    return AffineElem(tuple(-x for x in perm_act(pinv, a.trans)), pinv)


def coxeter_gen(n: int, i: int) -> AffineElem:
    """Standard generator ``s_i``: ``(i,i+1)`` for ``i < n`` and ``[1,0,..,0,-1](1,n)`` for ``i = n``."""
    if not 1 <= i <= n:
        raise RankError(f"generator index {i} out of range 1..{n}")
    if i < n:
        return AffineElem.of_perm(Perm.transposition(n, i, i + 1))
    return AffineElem((1,) + (0,) * (n - 2) + (-1,), Perm.transposition(n, 1, n))


def coxeter_gens(n: int) -> tuple[AffineElem, ...]:
    return tuple(coxeter_gen(n, i) for i in range(1, n + 1))


def trans_w(n: int, i: int, t: int = 1) -> AffineElem:
    """Translation with ``t`` at coordinate ``i`` and ``-t`` at coordinate ``n``."""
    if not 1 <= i <= n - 1:
        raise RankError(f"w index {i} out of range 1..{n - 1}")
    v = [0] * n
    v[i - 1] += t
    v[n - 1] -= t
    return AffineElem.translation(v)


@dataclass(frozen=True)
class ArtinWord:
    """Signed word in the Artin generators; each letter is ``(index, +1 | -1)``."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if i < 1 or e not in (1, -1):
                raise ValueError(f"bad letter {(i, e)}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *indices: int) -> ArtinWord:
        """Shorthand: a negative integer ``-i`` stands for the inverse letter."""
        return cls(tuple((abs(i), 1 if i > 0 else -1) for i in indices))

    def __mul__(self, other: ArtinWord) -> ArtinWord:
        return ArtinWord(self.letters + other.letters)

    def __pow__(self, k: int) -> ArtinWord:
        base = self if k >= 0 else self.inverse()
        return ArtinWord(base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> ArtinWord:
        return ArtinWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def max_index(self) -> int:
        return max((i for i, _ in self.letters), default=0)

    def is_positive(self) -> bool:
        return all(e == 1 for _, e in self.letters)

    def to_json(self) -> list:
        return [[i, e] for i, e in self.letters]

    @classmethod
    def from_json(cls, obj: list) -> ArtinWord:
        return cls(tuple((i, e) for i, e in obj))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"σ{i}" if e == 1 else f"σ{i}^-1" for i, e in self.letters)


@dataclass(frozen=True)
class GenImages:
    """Images of the Artin generators σ_1..σ_n under a morphism into W(Ã_{n-1})."""

    images: tuple[AffineElem, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        n = len(self.images)
        if any(g.n != n for g in self.images):
            raise RankError("every image must have rank equal to the number of generators")

    @property
    def n(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> AffineElem:
        """1-based access: ``imgs[i]`` is the image of σ_i."""
        return self.images[i - 1]

    def perms(self) -> tuple[Perm, ...]:
        return tuple(g.perm for g in self.images)

    def to_json(self) -> list:
        return [g.to_json() for g in self.images]


def eval_word(images: GenImages | Sequence[AffineElem], word: ArtinWord) -> AffineElem:
    """Left-to-right product of generator images (inverse letters use inverse images)."""
    imgs = images.images if isinstance(images, GenImages) else tuple(images)
    n = len(imgs)
    if word.max_index() > n:
        raise RankError(f"word uses σ_{word.max_index()} but only {n} images given")
    invs: dict[int, AffineElem] = {}
    result = AffineElem.identity(imgs[0].n)
    for i, e in word.letters:
        if e == 1:
            g = imgs[i - 1]
        else:
            if i not in invs:
                invs[i] = imgs[i - 1].inverse()
            g = invs[i]
        result = result * g
    return result


def eval_word_perm(perms: Sequence[Perm], word: ArtinWord) -> Perm:
    result = Perm.identity(perms[0].n)
    for i, e in word.letters:
        result = result * (perms[i - 1] if e == 1 else perms[i - 1].inverse())
    return result


def perm_to_simple_word(p: Perm) -> ArtinWord:
    """Positive reduced word in σ_1..σ_{n-1} projecting to ``p`` (via σ_i -> (i,i+1)).

    Bubble sort on the one-line notation, always swapping the leftmost descent.
    Each swap at positions (i,i+1) peels ``s_i`` off the right of ``p``.
    """
    arr = list(p.images)
    peeled = []
    while True:
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                peeled.append(i + 1)
                break
        else:
            break
    # p = s_{peeled[-1]} ... s_{peeled[0]} read as a product; peeled letters come off the right.
    return ArtinWord.of(*reversed(peeled))


@dataclass(frozen=True)
class CoxeterGraph:
    """Coxeter matrix; ``inf`` marks a pair with no relation."""

    m: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(row) for row in self.m)
        n = len(m)
        for i in range(n):
            if len(m[i]) != n or m[i][i] != 1:
                raise ValueError("Coxeter matrix must be square with unit diagonal")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and m[i][j] < 2:
                    raise ValueError("off-diagonal Coxeter entries must be >= 2")
        object.__setattr__(self, "m", m)

    @property
    def n(self) -> int:
        return len(self.m)

    @classmethod
    def affine_a(cls, n: int) -> CoxeterGraph:
        """The cycle graph Ã_{n-1} on n vertices (for n = 2 the single edge is labelled ∞)."""
        if n < 2:
            raise RankError("affine type Ã needs n >= 2")
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        if n == 2:
            m[0][1] = m[1][0] = inf
        else:
            for i in range(n):
                j = (i + 1) % n
                m[i][j] = m[j][i] = 3
        return cls(tuple(tuple(r) for r in m))

    def edges(self) -> list[tuple[int, int, int]]:
        """All pairs ``(i, j, m_ij)`` with ``i < j`` and finite label, 1-based."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.m[i][j] != inf:
                    out.append((i + 1, j + 1, int(self.m[i][j])))
        return out


def prod(a, b, m: int, one):
    """Alternating product ``abab...`` with ``m`` factors, starting at ``one``."""
    result = one
    for k in range(m):
        result = result * (a if k % 2 == 0 else b)
    return result
