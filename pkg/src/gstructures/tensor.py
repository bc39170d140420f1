"""Sparse exact multilinear algebra on R^n.

Conventions (fixed once, used everywhere):

* Indices are 1-based.  ``e(1, 3, 5)`` is the monomial e_1 ^ e_3 ^ e_5 and the
  monomials with increasing indices form an orthonormal basis of each
  exterior power.
* The skew matrix with entry ``+1`` at (i, j) and ``-1`` at (j, i), i < j, is
  identified with e_i ^ e_j.  Acting on vectors it sends e_i to -e_j and e_j
  to e_i, i.e. ``Omega e_i = sum_j Omega[j][i] e_j``.
* ``(e_i ^ e_j) _| (e_i ^ e_j ^ e_k) = e_k``: a 2-vector contracts into the
  first two slots of a 3-form with no extra factor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

__all__ = [
    "Multivector",
    "SymmetricTensor",
    "SkewEndo",
    "e",
    "wedge",
    "contract2",
    "so_act",
    "lie_derivative",
    "hodge_star",
    "sort_sign",
    "pair_index",
    "so_pairs",
    "random_multivector",
    "random_skew",
]


def sort_sign(idx: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on a repeat."""
    idx = list(idx)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return 0, tuple(idx)
    return sign, tuple(idx)


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v}


@dataclass(frozen=True, eq=False)
class Multivector:
    """Alternating k-tensor on R^dim stored as {increasing index tuple: coefficient}."""

    dim: int
    grade: int
    terms: Mapping[tuple[int, ...], Fraction]

    def __post_init__(self):
        if self.dim < 1 or not 0 <= self.grade <= self.dim:
            raise ValueError(f"invalid dim/grade {self.dim}/{self.grade}")
        terms = _clean(self.terms)
        for key in terms:
            if len(key) != self.grade or any(a >= b for a, b in zip(key, key[1:])):
                raise ValueError(f"index tuple {key} is not strictly increasing of length {self.grade}")
            if key and (key[0] < 1 or key[-1] > self.dim):
                raise ValueError(f"index tuple {key} out of range 1..{self.dim}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def zero(cls, dim: int, grade: int) -> "Multivector":
        return cls(dim, grade, {})

    @classmethod
    def from_unsorted(cls, dim: int, grade: int, items: Iterable[tuple[Iterable[int], object]]) -> "Multivector":
        """Build from (indices, coefficient) pairs with arbitrary index order."""
        acc: dict[tuple[int, ...], Fraction] = {}
        for idx, c in items:
            s, key = sort_sign(idx)
            if s:
                acc[key] = acc.get(key, Fraction(0)) + s * Fraction(c)
        return cls(dim, grade, acc)

    @classmethod
    def basis(cls, dim: int, grade: int) -> list[tuple[int, ...]]:
        return list(combinations(range(1, dim + 1), grade))

    def coords(self) -> list[Fraction]:
        return [self.terms.get(k, Fraction(0)) for k in self.basis(self.dim, self.grade)]

    @classmethod
    def from_coords(cls, dim: int, grade: int, coords: Iterable) -> "Multivector":
        return cls(dim, grade, dict(zip(cls.basis(dim, grade), coords)))

    def coefficient(self, *idx: int) -> Fraction:
        """Fully antisymmetric component T_{i1...ik} for any index order."""
        s, key = sort_sign(idx)
        return s * self.terms.get(key, Fraction(0)) if s else Fraction(0)

    def _check(self, other: "Multivector"):
        if not isinstance(other, Multivector) or other.dim != self.dim or other.grade != self.grade:
            raise ValueError("multivectors must share dim and grade")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return Multivector(self.dim, self.grade, acc)

    def __neg__(self) -> "Multivector":
        return Multivector(self.dim, self.grade, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __mul__(self, c) -> "Multivector":
        c = Fraction(c)
        return Multivector(self.dim, self.grade, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multivector)
            and (self.dim, self.grade) == (other.dim, other.grade)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dim, self.grade, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def inner(self, other: "Multivector") -> Fraction:
        self._check(other)
        return sum((v * other.terms.get(k, 0) for k, v in self.terms.items()), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return f"Multivector(dim={self.dim}, grade={self.grade}, 0)"
        body = " + ".join(f"{v}*e{''.join(map(str, k)) if self.dim < 10 else k}" for k, v in sorted(self.terms.items()))
        return f"Multivector(dim={self.dim}, {body})"


def e(*idx: int, dim: int) -> Multivector:
    """Monomial e_{i1} ^ ... ^ e_{ik}; unsorted indices pick up the permutation sign."""
    return Multivector.from_unsorted(dim, len(idx), [(idx, 1)])


@dataclass(frozen=True, eq=False)
class SymmetricTensor:
    """Symmetric k-tensor on R^dim stored as {nondecreasing index tuple: coefficient}.

    The key (i, j, k) stands for the monomial x_i x_j x_k of the associated
    homogeneous polynomial.
    """

    dim: int
    grade: int
    terms: Mapping[tuple[int, ...], Fraction]

    def __post_init__(self):
        terms = _clean(self.terms)
        for key in terms:
            if len(key) != self.grade or list(key) != sorted(key) or key[0] < 1 or key[-1] > self.dim:
                raise ValueError(f"bad symmetric index tuple {key}")
        object.__setattr__(self, "terms", terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetricTensor) and (self.dim, self.grade, self.terms) == (
            other.dim,
            other.grade,
            other.terms,
        )

    def __hash__(self):
        return hash((self.dim, self.grade, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def laplacian(self) -> "SymmetricTensor":
        """Laplacian of the polynomial; zero iff the tensor is traceless."""
        acc: dict[tuple[int, ...], Fraction] = {}
        for key, c in self.terms.items():
            for i in set(key):
                m = key.count(i)
                if m < 2:
                    continue
                rest = list(key)
                rest.remove(i)
                rest.remove(i)
                rk = tuple(rest)
                acc[rk] = acc.get(rk, Fraction(0)) + c * m * (m - 1)
        return SymmetricTensor(self.dim, self.grade - 2, acc)


@dataclass(frozen=True, eq=False)
class SkewEndo:
    """Skew-symmetric n x n rational matrix, an element of so(n)."""

    dim: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.entries)
        n = self.dim
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("entries must be an n x n matrix")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError("matrix is not skew-symmetric")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zero(cls, n: int) -> "SkewEndo":
        return cls(n, tuple((Fraction(0),) * n for _ in range(n)))

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "SkewEndo":
        """The element e_i ^ e_j (1-based): +1 at (i, j), -1 at (j, i)."""
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i - 1][j - 1] = Fraction(1)
        m[j - 1][i - 1] = Fraction(-1)
        return cls(n, tuple(map(tuple, m)))

    @classmethod
    def from_coords(cls, n: int, coords: Iterable) -> "SkewEndo":
        """Inverse of :meth:`coords` (upper-triangle entries in lexicographic order)."""
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in zip(so_pairs(n), coords):
            m[i - 1][j - 1] = Fraction(c)
            m[j - 1][i - 1] = -Fraction(c)
        return cls(n, tuple(map(tuple, m)))

    @classmethod
    def from_bivector(cls, b: Multivector) -> "SkewEndo":
        if b.grade != 2:
            raise ValueError("need a 2-vector")
        return cls.from_coords(b.dim, b.coords())

    def to_bivector(self) -> Multivector:
        return Multivector.from_coords(self.dim, 2, self.coords())

    def coords(self) -> list[Fraction]:
        return [self.entries[i - 1][j - 1] for i, j in so_pairs(self.dim)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def __add__(self, other: "SkewEndo") -> "SkewEndo":
        return SkewEndo.from_coords(self.dim, [a + b for a, b in zip(self.coords(), other.coords())])

    def __sub__(self, other: "SkewEndo") -> "SkewEndo":
        return SkewEndo.from_coords(self.dim, [a - b for a, b in zip(self.coords(), other.coords())])

    def __neg__(self) -> "SkewEndo":
        return SkewEndo.from_coords(self.dim, [-a for a in self.coords()])

    def __mul__(self, c) -> "SkewEndo":
        c = Fraction(c)
        return SkewEndo.from_coords(self.dim, [c * a for a in self.coords()])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewEndo) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __bool__(self) -> bool:
        return any(self.coords())

    def matmul(self, other: "SkewEndo") -> list[list[Fraction]]:
        n = self.dim
        a, b = self.entries, other.entries
        return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]

    def bracket(self, other: "SkewEndo") -> "SkewEndo":
        ab = self.matmul(other)
        ba = other.matmul(self)
        n = self.dim
        return SkewEndo(n, tuple(tuple(ab[i][j] - ba[i][j] for j in range(n)) for i in range(n)))

    def inner(self, other: "SkewEndo") -> Fraction:
        """<A, B> = -1/2 trace(AB); the elementary e_i ^ e_j are orthonormal."""
        return sum((a * b for a, b in zip(self.coords(), other.coords())), Fraction(0))

    def apply(self, v: Iterable) -> list[Fraction]:
        v = list(v)
        return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in self.entries]


def so_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def pair_index(n: int, i: int, j: int) -> int:
    """Position of the pair (i, j), i < j, in :func:`so_pairs` order."""
    i, j = min(i, j), max(i, j)
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch {a.dim} vs {b.dim}")
    if a.grade + b.grade > a.dim:
        raise ValueError("grade exceeds dimension")
    items = [(ka + kb, va * vb) for ka, va in a.terms.items() for kb, vb in b.terms.items()]
    return Multivector.from_unsorted(a.dim, a.grade + b.grade, items)


def contract2(sigma: Multivector, T: Multivector) -> Multivector:
    """sigma _| T for a 2-vector sigma and a 3-form T: the 1-form T(sigma, .)."""
    if sigma.grade != 2 or T.grade != 3:
        raise ValueError("contract2 needs grades 2 and 3")
    if sigma.dim != T.dim:
        raise ValueError("dimension mismatch")
    acc: dict[tuple[int, ...], Fraction] = {}
    for (i, j), s in sigma.terms.items():
        for key, t in T.terms.items():
            if i in key and j in key:
                (k,) = [x for x in key if x != i and x != j]
                sign, _ = sort_sign((i, j, k))
                acc[(k,)] = acc.get((k,), Fraction(0)) + sign * s * t
    return Multivector(T.dim, 1, acc)


def _derive(omega: SkewEndo, terms: Mapping, alternating: bool) -> dict:
    rows = omega.entries
    n = omega.dim
    acc: dict[tuple[int, ...], Fraction] = {}
    for key, c in terms.items():
        for pos, i in enumerate(key):
            for j in range(1, n + 1):
                w = rows[j - 1][i - 1]
                if not w:
                    continue
                new = key[:pos] + (j,) + key[pos + 1 :]
                if alternating:
                    s, nk = sort_sign(new)
                    if not s:
                        continue
                else:
                    s, nk = 1, tuple(sorted(new))
                acc[nk] = acc.get(nk, Fraction(0)) + s * w * c
    return acc


def so_act(omega: SkewEndo, T):
    """Derivation action of so(n) on alternating or symmetric tensors."""
    if omega.dim != T.dim:
        raise ValueError(f"dimension mismatch {omega.dim} vs {T.dim}")
    if isinstance(T, Multivector):
        return Multivector(T.dim, T.grade, _derive(omega, T.terms, True))
    if isinstance(T, SymmetricTensor):
        return SymmetricTensor(T.dim, T.grade, _derive(omega, T.terms, False))
    raise TypeError(f"cannot act on {type(T).__name__}")


def lie_derivative(omega: SkewEndo, T: Multivector) -> Multivector:
    """Lie derivative of a constant form along the linear vector field of omega.

    The flow of x -> Omega x acts on forms by pull-back, which is minus the
    derivation action.
    """
    return -so_act(omega, T)


def hodge_star(T: Multivector) -> Multivector:
    """Hodge star for the standard metric and orientation e_1 ^ ... ^ e_n."""
    n = T.dim
    full = set(range(1, n + 1))
    items = []
    for key, c in T.terms.items():
        comp = tuple(sorted(full - set(key)))
        s, _ = sort_sign(key + comp)
        items.append((comp, s * c))
    return Multivector.from_unsorted(n, n - T.grade, items)


def random_multivector(rng: random.Random, dim: int, grade: int, density: float = 1.0, bound: int = 5) -> Multivector:
    terms = {}
    for key in Multivector.basis(dim, grade):
        if rng.random() <= density:
            terms[key] = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
    return Multivector(dim, grade, terms)


def random_skew(rng: random.Random, n: int, bound: int = 5) -> SkewEndo:
    return SkewEndo.from_coords(n, [Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in so_pairs(n)])
