"""Formal characters of compact Lie groups as weight multisets.

Weights are integer tuples in the fundamental-weight (Dynkin) basis.  A root
system may carry extra abelian charge coordinates (used for u(3) = su(3) + u(1));
charges ride along as trailing integer coordinates, are added under tensor
products, and are invisible to the Weyl group and to all inner products.

Irreducible characters come from Freudenthal's recursion run on dominant
weights only; the full weight system is filled in by Weyl orbits generated
from simple reflections.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

__all__ = [
    "RootSystem",
    "WeightMultiset",
    "Irrep",
    "Decomposition",
    "RealType",
    "CharacterError",
    "root_system",
    "weyl_dim",
    "irrep_weights",
    "tensor_ms",
    "wedge_power_ms",
    "decompose",
    "char_equal",
    "real_types",
]

Weight = tuple[int, ...]


class CharacterError(ArithmeticError):
    """A weight multiset failed to be a genuine character."""


def _inverse(mat: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Semisimple root system given by its Cartan matrix, plus ``abelian``
    charge coordinates.

    ``cartan[i][j] = <alpha_i, alpha_j^vee>`` so that row i is alpha_i in
    Dynkin coordinates.  ``half_norms[i] = (alpha_i, alpha_i) / 2``.
    """

    label: str
    cartan: tuple[tuple[int, ...], ...]
    half_norms: tuple[Fraction, ...]
    abelian: int = 0
    positive_roots: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    form: tuple[tuple[Fraction, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        r = len(self.cartan)
        inv = _inverse(self.cartan)
        form = tuple(tuple(inv[j][i] * self.half_norms[i] for j in range(r)) for i in range(r))
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "_height", tuple(sum(inv[j][i] for i in range(r)) for j in range(r)))
        object.__setattr__(self, "positive_roots", tuple(self._positive_roots()))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def width(self) -> int:
        return self.rank + self.abelian

    @property
    def dim(self) -> int:
        """Dimension of the compact group (semisimple part plus torus factors)."""
        return self.rank + 2 * len(self.positive_roots) + self.abelian

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.label, self.abelian) == (other.label, other.abelian)

    def __hash__(self):
        return hash((self.label, self.abelian))

    def __repr__(self):
        return f"RootSystem({self.label!r})"

    def _positive_roots(self) -> list[tuple[int, ...]]:
        """Positive roots in simple-root coordinates, by the root-string rule."""
        r = self.rank
        A = self.cartan
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        roots = list(simple)
        seen = set(roots)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(r):
                    pairing = sum(beta[j] * A[j][i] for j in range(r))
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in seen:
                            p += 1
                        else:
                            break
                    if p - pairing > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in seen:
                            seen.add(up)
                            roots.append(up)
                            nxt.append(up)
            frontier = nxt
        return roots

    def to_dynkin(self, root: Sequence[int]) -> Weight:
        r = self.rank
        return tuple(sum(root[j] * self.cartan[j][i] for j in range(r)) for i in range(r))

    def pair(self, weight: Sequence, root: Sequence[int]) -> Fraction:
        """(weight, root) with the root in simple-root coordinates."""
        return sum((Fraction(weight[i]) * root[i] * self.half_norms[i] for i in range(self.rank)), Fraction(0))

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        r = self.rank
        f = self.form
        return sum((Fraction(x[i]) * y[j] * f[i][j] for i in range(r) for j in range(r) if x[i] and y[j]), Fraction(0))

    def height(self, weight: Sequence) -> Fraction:
        """Sum of the simple-root coordinates of the semisimple part."""
        return sum((Fraction(weight[j]) * self._height[j] for j in range(self.rank)), Fraction(0))

    def is_dominant(self, weight: Sequence) -> bool:
        return all(x >= 0 for x in weight[: self.rank])

    def reflect(self, weight: Weight, i: int) -> Weight:
        c = weight[i]
        if not c:
            return weight
        row = self.cartan[i]
        return tuple(w - c * row[j] if j < self.rank else w for j, w in enumerate(weight))

    def dominant_rep(self, weight: Weight) -> Weight:
        weight = tuple(weight)
        while True:
            i = next((j for j in range(self.rank) if weight[j] < 0), None)
            if i is None:
                return weight
            weight = self.reflect(weight, i)

    def orbit(self, weight: Weight) -> list[Weight]:
        weight = tuple(weight)
        seen = {weight}
        todo = [weight]
        while todo:
            w = todo.pop()
            for i in range(self.rank):
                v = self.reflect(w, i)
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        return sorted(seen)

    def dual(self, weight: Weight) -> Weight:
        """Highest weight of the dual representation; charges flip sign."""
        neg = tuple(-x for x in weight)
        return self.dominant_rep(neg)

    def zero(self) -> Weight:
        return (0,) * self.width

    def with_charge(self, abelian: int) -> "RootSystem":
        return RootSystem(self.label + f"+u1^{abelian}" if abelian else self.label, self.cartan, self.half_norms, abelian)


def _cartan(family: str, rank: int) -> tuple[list[list[int]], list[Fraction]]:
    A = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank)] for i in range(rank)]
    one, half = Fraction(1), Fraction(1, 2)
    if family == "A":
        return A, [one] * rank
    if family == "B":
        if rank >= 2:
            A[rank - 2][rank - 1] = -2
        return A, [one] * (rank - 1) + [half]
    if family == "C":
        A[rank - 1][rank - 2] = -2
        return A, [half] * (rank - 1) + [one]
    if family == "D":
        if rank >= 3:
            A[rank - 2][rank - 1] = A[rank - 1][rank - 2] = 0
            A[rank - 3][rank - 1] = A[rank - 1][rank - 3] = -1
        return A, [one] * rank
    if family == "G" and rank == 2:
        return [[2, -1], [-3, 2]], [Fraction(1, 3), one]
    if family == "F" and rank == 4:
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]], [one, one, half, half]
    raise ValueError(f"unsupported root system {family}{rank}")


@lru_cache(maxsize=None)
def root_system(label: str) -> RootSystem:
    """Root system from a label such as ``"B4"``, ``"F4"`` or ``"A2+u1"``.

    Dynkin numbering follows Bourbaki: B_n has its short simple root last,
    F4 has the long simple roots first, G2 has the short simple root first.
    """
    base, _, extra = label.partition("+")
    abelian = 0
    if extra:
        if not extra.startswith("u1"):
            raise ValueError(f"unsupported abelian factor {extra!r}")
        abelian = int(extra[2:] or 1)
    family, rank = base[0].upper(), int(base[1:])
    A, d = _cartan(family, rank)
    return RootSystem(label, tuple(map(tuple, A)), tuple(d), abelian)


@dataclass(frozen=True, eq=False)
class WeightMultiset:
    """Finite multiset of weights (a formal character) over a root system."""

    rs: RootSystem
    mults: Mapping[Weight, int]

    def __post_init__(self):
        clean = {}
        for w, m in self.mults.items():
            w = tuple(w)
            if len(w) != self.rs.width:
                raise ValueError(f"weight {w} has wrong length for {self.rs.label}")
            if m < 0:
                raise CharacterError(f"negative multiplicity {m} at weight {w}")
            if m:
                clean[w] = int(m)
        object.__setattr__(self, "mults", clean)

    @classmethod
    def trivial(cls, rs: RootSystem) -> "WeightMultiset":
        return cls(rs, {rs.zero(): 1})

    @classmethod
    def empty(cls, rs: RootSystem) -> "WeightMultiset":
        return cls(rs, {})

    def count(self) -> int:
        return sum(self.mults.values())

    __len__ = count

    def _check(self, other: "WeightMultiset"):
        if self.rs != other.rs:
            raise ValueError(f"root systems differ: {self.rs.label} vs {other.rs.label}")

    def __add__(self, other: "WeightMultiset") -> "WeightMultiset":
        self._check(other)
        return WeightMultiset(self.rs, Counter(self.mults) + Counter(other.mults))

    def __sub__(self, other: "WeightMultiset") -> "WeightMultiset":
        """Multiset difference; raises CharacterError if anything goes negative."""
        self._check(other)
        out = dict(self.mults)
        for w, m in other.mults.items():
            out[w] = out.get(w, 0) - m
            if out[w] < 0:
                raise CharacterError(f"subtraction leaves multiplicity {out[w]} at weight {w}")
        return WeightMultiset(self.rs, out)

    def __mul__(self, k: int) -> "WeightMultiset":
        return WeightMultiset(self.rs, {w: k * m for w, m in self.mults.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightMultiset) and self.rs == other.rs and self.mults == other.mults

    def __hash__(self):
        return hash((self.rs, frozenset(self.mults.items())))

    def __repr__(self):
        return f"WeightMultiset({self.rs.label}, count={self.count()}, distinct={len(self.mults)})"

    def conjugate(self) -> "WeightMultiset":
        return WeightMultiset(self.rs, {tuple(-x for x in w): m for w, m in self.mults.items()})

    def is_weyl_invariant(self) -> bool:
        for w, m in self.mults.items():
            for i in range(self.rs.rank):
                if self.mults.get(self.rs.reflect(w, i), 0) != m:
                    return False
        return True


def _require_dominant(rs: RootSystem, hw: Sequence[int]) -> Weight:
    hw = tuple(int(x) for x in hw)
    if len(hw) != rs.width:
        raise ValueError(f"highest weight {hw} has wrong length for {rs.label}")
    if not rs.is_dominant(hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    return hw


def weyl_dim(rs: RootSystem, hw: Sequence[int]) -> int:
    """Weyl dimension formula: prod over positive roots of (hw+rho, a)/(rho, a)."""
    hw = _require_dominant(rs, hw)
    num = Fraction(1)
    for root in rs.positive_roots:
        top = sum(Fraction(hw[i] + 1) * root[i] * rs.half_norms[i] for i in range(rs.rank))
        bot = sum(Fraction(root[i]) * rs.half_norms[i] for i in range(rs.rank))
        num *= top / bot
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def _dominant_multiplicities(rs: RootSystem, hw: Weight) -> dict[Weight, int]:
    """Freudenthal recursion on the dominant weights of V(hw) (semisimple part)."""
    r = rs.rank
    hw = hw[:r]
    roots_dyn = [rs.to_dynkin(a) for a in rs.positive_roots]
    dominant = {hw}
    todo = [hw]
    while todo:
        mu = todo.pop()
        for a in roots_dyn:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in dominant and all(x >= 0 for x in nu):
                dominant.add(nu)
                todo.append(nu)
    top = rs.height(hw)
    order = sorted(dominant, key=lambda mu: (top - rs.height(mu), mu))
    rho = (1,) * r
    lr = tuple(x + 1 for x in hw)
    norm_top = rs.inner(lr, lr)
    mult: dict[Weight, int] = {hw: 1}
    for mu in order[1:]:
        acc = Fraction(0)
        for a_s, a_d in zip(rs.positive_roots, roots_dyn):
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a_d))
                m = mult.get(rs.dominant_rep(nu), 0)
                if not m:
                    break
                acc += m * rs.pair(nu, a_s)
                k += 1
        mr = tuple(x + y for x, y in zip(mu, rho))
        den = norm_top - rs.inner(mr, mr)
        val = 2 * acc / den
        if val.denominator != 1:
            raise CharacterError(f"non-integral Freudenthal multiplicity {val} at {mu}")
        if val:
            mult[mu] = int(val)
    return mult


@lru_cache(maxsize=None)
def _irrep_weights(rs: RootSystem, hw: Weight) -> WeightMultiset:
    charge = hw[rs.rank :]
    out: dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(rs, hw).items():
        for w in rs.orbit(mu + charge):
            out[w] = m
    return WeightMultiset(rs, out)


def irrep_weights(rs: RootSystem, hw: Sequence[int]) -> WeightMultiset:
    """All weights of the irreducible representation with highest weight ``hw``."""
    return _irrep_weights(rs, _require_dominant(rs, hw))


def tensor_ms(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    a._check(b)
    out: Counter = Counter()
    for w1, m1 in a.mults.items():
        for w2, m2 in b.mults.items():
            out[tuple(x + y for x, y in zip(w1, w2))] += m1 * m2
    return WeightMultiset(a.rs, out)


def _signed_product(x: Mapping[Weight, int], y: Mapping[Weight, int]) -> dict[Weight, int]:
    out: dict[Weight, int] = {}
    for w1, m1 in x.items():
        for w2, m2 in y.items():
            w = tuple(p + q for p, q in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    return out


def _adams(x: Mapping[Weight, int], k: int) -> dict[Weight, int]:
    return {tuple(k * c for c in w): m for w, m in x.items()}


def wedge_power_ms(a: WeightMultiset, k: int) -> WeightMultiset:
    """Exterior power character via Newton's identities on power sums.

    Lambda^2 = (p1^2 - p2)/2 and Lambda^3 = (p1^3 - 3 p1 p2 + 2 p3)/6, where
    p_m scales every weight by m.
    """
    if k not in (0, 1, 2, 3):
        raise ValueError("only exterior powers k <= 3 are supported")
    if k > a.count():
        raise ValueError("exterior power exceeds dimension")
    if k == 0:
        return WeightMultiset.trivial(a.rs)
    if k == 1:
        return a
    p1 = a.mults
    p2 = _adams(p1, 2)
    if k == 2:
        terms = [(_signed_product(p1, p1), 1), (p2, -1)]
        den = 2
    else:
        p11 = _signed_product(p1, p1)
        terms = [(_signed_product(p11, p1), 1), (_signed_product(p1, p2), -3), (_adams(p1, 3), 2)]
        den = 6
    acc: dict[Weight, int] = {}
    for d, c in terms:
        for w, m in d.items():
            acc[w] = acc.get(w, 0) + c * m
    out = {}
    for w, m in acc.items():
        if m % den:
            raise CharacterError(f"plethysm gave non-integral multiplicity {m}/{den} at {w}")
        if m < 0:
            raise CharacterError(f"plethysm gave negative multiplicity {m // den} at {w}")
        if m:
            out[w] = m // den
    return WeightMultiset(a.rs, out)


def char_equal(a: WeightMultiset, b: WeightMultiset) -> bool:
    a._check(b)
    return a.mults == b.mults


@dataclass(frozen=True)
class Irrep:
    rs: RootSystem = field(repr=False)
    hw: Weight

    def __post_init__(self):
        object.__setattr__(self, "hw", _require_dominant(self.rs, self.hw))

    @property
    def dim(self) -> int:
        return weyl_dim(self.rs, self.hw)

    def weights(self) -> WeightMultiset:
        return irrep_weights(self.rs, self.hw)

    def dual(self) -> "Irrep":
        return Irrep(self.rs, self.rs.dual(self.hw))

    @property
    def label(self) -> str:
        ss = ",".join(map(str, self.hw[: self.rs.rank]))
        ch = self.hw[self.rs.rank :]
        return f"V({ss})" + (f"_{','.join(map(str, ch))}" if ch else "")

    def sort_key(self):
        return (self.dim, self.hw)


@dataclass(frozen=True)
class Decomposition:
    """Irreducible summands with multiplicities, sorted by (dim, highest weight)."""

    rs: RootSystem = field(repr=False)
    summands: tuple[tuple[Irrep, int], ...]

    def __post_init__(self):
        merged: dict[Weight, int] = {}
        for irrep, m in self.summands:
            if m < 1:
                raise ValueError("multiplicities must be positive")
            merged[irrep.hw] = merged.get(irrep.hw, 0) + m
        items = sorted(((Irrep(self.rs, hw), m) for hw, m in merged.items()), key=lambda t: t[0].sort_key())
        object.__setattr__(self, "summands", tuple(items))

    @property
    def dim(self) -> int:
        return sum(ir.dim * m for ir, m in self.summands)

    def dims(self) -> list[int]:
        """Dimensions with repetition for multiplicity."""
        return [ir.dim for ir, m in self.summands for _ in range(m)]

    def multiplicity(self, hw: Sequence[int]) -> int:
        hw = tuple(hw)
        return next((m for ir, m in self.summands if ir.hw == hw), 0)

    def character(self) -> WeightMultiset:
        acc = WeightMultiset.empty(self.rs)
        for ir, m in self.summands:
            acc = acc + m * ir.weights()
        return acc

    def __contains__(self, hw) -> bool:
        return self.multiplicity(hw) > 0


def decompose(rs: RootSystem, ms: WeightMultiset) -> Decomposition:
    """Split a character into irreducibles by repeated highest-weight subtraction.

    At each step the remaining weight of greatest height (ties broken by the
    lexicographically largest weight) is necessarily a highest weight; its
    irreducible character is subtracted as many times as it occurs.
    """
    if ms.rs != rs:
        raise ValueError("weight multiset belongs to a different root system")
    remaining = dict(ms.mults)
    found: list[tuple[Irrep, int]] = []
    while remaining:
        top = max(remaining, key=lambda w: (rs.height(w), w))
        if not rs.is_dominant(top):
            raise CharacterError(f"highest remaining weight {top} is not dominant; input is not a character")
        m = remaining[top]
        for w, k in irrep_weights(rs, top).mults.items():
            left = remaining.get(w, 0) - m * k
            if left < 0:
                raise CharacterError(f"subtracting V{top} drives weight {w} to multiplicity {left}")
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
        found.append((Irrep(rs, top), m))
    return Decomposition(rs, tuple(found))


@dataclass(frozen=True)
class RealType:
    """An irreducible real summand: a self-conjugate irrep, or a conjugate pair
    {E, conj(E)} counted once with doubled real dimension."""

    members: tuple[Irrep, ...]
    multiplicity: int

    @property
    def real_dim(self) -> int:
        return self.members[0].dim * len(self.members)

    @property
    def label(self) -> str:
        return "+".join(m.label for m in self.members)

    def key(self) -> tuple[Weight, ...]:
        return tuple(m.hw for m in self.members)

    def sort_key(self):
        return (self.real_dim, self.key())


def real_types(dec: Decomposition) -> list[RealType]:
    """Group the complex summands of a complexified real representation.

    Self-conjugate summands are taken to be of real type; this is forced
    whenever they occur with odd multiplicity.
    """
    rs = dec.rs
    seen: set[Weight] = set()
    out = []
    for ir, m in dec.summands:
        if ir.hw in seen:
            continue
        d = rs.dual(ir.hw)
        if d == ir.hw:
            out.append(RealType((ir,), m))
            seen.add(ir.hw)
            continue
        m2 = dec.multiplicity(d)
        if m2 != m:
            raise CharacterError(f"{ir.label} occurs {m} times but its conjugate {m2} times; not a real representation")
        pair = tuple(sorted((ir, Irrep(rs, d)), key=lambda x: x.hw, reverse=True))
        out.append(RealType(pair, m))
        seen.update((ir.hw, d))
    return sorted(out, key=RealType.sort_key)
