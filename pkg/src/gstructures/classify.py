"""Arithmetic replay of the search for groups G in SO(n) with Lambda^3(R^n) = R^n (x) m.

If the two representations agree, evaluating the character identity at the
identity gives n^2 = 3 dim(G) + 1, and evaluating at the involutions of a
maximal torus forces n = 2^(t-1) k.  Combined with dim(G) <= 4 t^2 only
finitely many (t, k) remain; each is either eliminated by a named rule or
survives.  The only survivor is t = 3, k = 2: a 21-dimensional rank 3 group
in SO(8).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Iterable

__all__ = [
    "GroupCard",
    "InvolutionDatum",
    "InvolutionRoots",
    "CaseTrace",
    "InvolutionVerdict",
    "simple_dim",
    "EXCEPTIONAL",
    "min_real_dim",
    "E6_DIM_VARIANT",
    "card",
    "product_card",
    "lemma_bound",
    "character_constraint",
    "involution_p",
    "involution_property",
    "spin7_centralizer_dims",
    "rank_bound",
    "enumerate_cases",
    "survivors",
]

EXCEPTIONAL = {"G2": (2, 14), "F4": (4, 52), "E6": (6, 78), "E7": (7, 133), "E8": (8, 248)}

# dim(E6) = 72 also circulates as a variant value; both satisfy the 4 t^2 bound (144).
E6_DIM_VARIANT = 72


def _classical_dim(family: str, m: int) -> int:
    if family == "A":
        return m * m + 2 * m
    if family in ("B", "C"):
        return 2 * m * m + m
    if family == "D":
        return 2 * m * m - m
    raise ValueError(f"unknown classical family {family!r}")


def simple_dim(label: str) -> int:
    """Dimension of a simple compact Lie algebra from its Cartan label."""
    if label in EXCEPTIONAL:
        return EXCEPTIONAL[label][1]
    return _classical_dim(label[0], int(label[1:]))


def min_real_dim(family: str, m: int = 0) -> int:
    """Smallest dimension of a faithful real representation."""
    table = {"G2": 7, "F4": 26, "E6": 54, "E7": 112, "E8": 248}
    if family in table:
        return table[family]
    if family == "SU":
        return 2 * m if m >= 3 else 4
    if family == "Sp":
        return 4 * m
    if family == "SO":
        return m
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class GroupCard:
    label: str
    rank: int
    dim: int
    contains_exceptional: bool
    parts: tuple[str, ...] = field(default=(), compare=False)

    def __mul__(self, other: "GroupCard") -> "GroupCard":
        return product_card(self, other)


def card(label: str) -> GroupCard:
    """Card for a simple algebra ("A3", "B4", "G2", ...) or a torus ("T3")."""
    if label.startswith("T"):
        t = int(label[1:])
        return GroupCard(label, t, t, False, (label,))
    if label in EXCEPTIONAL:
        r, d = EXCEPTIONAL[label]
        return GroupCard(label, r, d, True, (label,))
    m = int(label[1:])
    if label[0] not in "ABCD" or m < 1:
        raise ValueError(f"unknown Lie algebra label {label!r}")
    return GroupCard(label, m, _classical_dim(label[0], m), False, (label,))


def product_card(a: GroupCard, b: GroupCard) -> GroupCard:
    parts = a.parts + b.parts
    return GroupCard("x".join(parts), a.rank + b.rank, a.dim + b.dim, a.contains_exceptional or b.contains_exceptional, parts)


def lemma_bound(c: GroupCard) -> tuple[bool, bool | None]:
    """(dim <= 4 t^2, dim <= 3 t^2); the second is only asserted without exceptional summands."""
    t2 = c.rank * c.rank
    return c.dim <= 4 * t2, (None if c.contains_exceptional else c.dim <= 3 * t2)


def character_constraint(g: int) -> int | None:
    """n with n^2 = 3 g + 1, if it is an integer."""
    if g < 0:
        raise ValueError("group dimension must be nonnegative")
    s = 3 * g + 1
    r = isqrt(s)
    return r if r * r == s else None


@dataclass(frozen=True)
class InvolutionDatum:
    z: int
    q: int = 0  # character value chi(h) = n - 4q

    def character_value(self, n: int) -> int:
        return n - 4 * self.q


@dataclass(frozen=True)
class InvolutionRoots:
    g: int
    z: int
    n: int
    raw_roots: tuple[int, ...]  # integral solutions p of 3(g - z) = 2 p (n - p)
    candidates: tuple[int, ...]  # those that are even with 0 < p < n
    central: bool  # the root pair {0, n}: h = +-Id, the excepted case


def involution_p(g: int, z: int, n: int) -> InvolutionRoots:
    """Solve 3(g - z) = 2 p (sqrt(3g+1) - p) for p = (n +- sqrt(6z - 3g + 1)) / 2."""
    if n * n != 3 * g + 1:
        raise ValueError(f"n^2 = {n * n} is not 3g + 1 = {3 * g + 1}")
    disc = 6 * z - 3 * g + 1
    raw: list[int] = []
    if disc >= 0:
        s = isqrt(disc)
        if s * s == disc:
            for num in {n + s, n - s}:
                if num % 2 == 0:
                    raw.append(num // 2)
    raw.sort()
    cands = tuple(p for p in raw if p % 2 == 0 and 0 < p < n)
    return InvolutionRoots(g, z, n, tuple(raw), cands, set(raw) == {0, n})


def spin7_centralizer_dims() -> dict[int, int]:
    """dim of so(2r) + so(7-2r) for r = 0..3: centralizers of the lifts of
    diag(-1^(2r), 1^(7-2r)) in Spin(7) (r = 0 is the center)."""
    return {r: comb(2 * r, 2) + comb(7 - 2 * r, 2) for r in range(4)}


@dataclass
class InvolutionVerdict:
    family: str
    holds: bool
    trace: list[str]


def _classical_centralizers(family: str, m: int) -> list[tuple[int, int]]:
    if family == "SU":
        return [(r, r * r + (m - r) ** 2 - 1) for r in range(1, m)]
    if family == "SO":
        return [(r, comb(r, 2) + comb(m - r, 2)) for r in range(1, m)]
    if family == "Sp":
        return [(r, r * (2 * r + 1) + (m - r) * (2 * (m - r) + 1)) for r in range(1, m)]
    raise ValueError(family)


def _group_dim(family: str, m: int) -> int:
    return {"SU": m * m - 1, "SO": m * (m - 1) // 2, "Sp": m * (2 * m + 1)}[family]


def involution_property(family: str, m: int | None = None, max_m: int = 12) -> InvolutionVerdict:
    """Check the involution property for a family, scanning m <= max_m for the classical ones.

    Exceptional groups: the property holds when sqrt(3g+1) is irrational, or
    otherwise when the group has no faithful real representation of that
    dimension.  Classical groups: for each m with integral n, run the
    centralizer scan and apply the minimal-dimension (SU, Sp) or Grassmannian
    (SO) elimination.
    """
    trace: list[str] = []
    if family in EXCEPTIONAL:
        g = EXCEPTIONAL[family][1]
        n = character_constraint(g)
        if n is None:
            trace.append(f"{family}: 3g+1 = {3 * g + 1} is not a square")
            return InvolutionVerdict(family, True, trace)
        lo = min_real_dim(family)
        trace.append(f"{family}: n = {n}, but the smallest faithful real representation has dim {lo}")
        return InvolutionVerdict(family, lo > n, trace)
    if family not in ("SU", "SO", "Sp"):
        raise ValueError(f"unsupported family {family!r}")
    ms = [m] if m is not None else range(2, max_m + 1)
    holds = True
    for mm in ms:
        g = _group_dim(family, mm)
        n = character_constraint(g)
        if n is None:
            continue
        cands = []
        for r, z in _classical_centralizers(family, mm):
            res = involution_p(g, z, n)
            if res.candidates:
                cands.append((r, z, res.candidates))
        trace.append(f"{family}({mm}): g = {g}, n = {n}, p-candidates {cands or 'none'}")
        if family in ("SU", "Sp"):
            if not cands:
                continue
            lo = min_real_dim(family, mm)
            if lo > n:
                trace.append(f"{family}({mm}) has no faithful real representation of dim {n} (minimum {lo})")
                continue
            holds = False
            trace.append(f"{family}({mm}) embeds in SO({n}) with p-candidates: property fails")
        else:
            # standard inclusion SO(m) in SO(n): 3m - p = 2n with p even, 0 < p < m
            p = 3 * mm - 2 * n
            if 0 < p < mm and p % 2 == 0:
                holds = False
                trace.append(f"SO({mm}): Grassmannian equations solved by p = {p} < m")
            else:
                trace.append(f"SO({mm}): Grassmannian equations give p = {p}, not an even integer in (0, {mm})")
    return InvolutionVerdict(family, holds, trace)


def rank_bound() -> int:
    """Largest t with (4^(t-1) - 1)/3 <= 4 t^2 (the dimension at k = 1)."""
    t = 1
    while (4 ** t - 1) <= 3 * 4 * (t + 1) ** 2:
        t += 1
    return t


@dataclass
class CaseTrace:
    t: int
    k: int
    g: object  # int, or a Fraction when 4^(t-1) k^2 - 1 is not divisible by 3
    n: int
    verdict: str  # "survivor" | "eliminated"
    rule: str
    detail: str = ""
    subtraces: list[str] = field(default_factory=list)

    @property
    def integral(self) -> bool:
        return isinstance(self.g, int)


def _exceptional_dissections(g: int, t: int) -> list[tuple[tuple[str, ...], int, int]]:
    """All multisets of exceptional summands of total rank <= t, with the complement's (dim, rank)."""
    names = sorted(EXCEPTIONAL, key=lambda x: EXCEPTIONAL[x][0])
    out = []

    def rec(start, chosen, r, d):
        if chosen:
            out.append((tuple(chosen), g - d, t - r))
        for i in range(start, len(names)):
            rr, dd = EXCEPTIONAL[names[i]]
            if r + rr <= t and d + dd <= g:
                rec(i, chosen + [names[i]], r + rr, d + dd)

    rec(0, [], 0, 0)
    return out


def _judge(t: int, k: int, g: int, n: int) -> CaseTrace:
    if g < t:
        return CaseTrace(t, k, g, n, "eliminated", "dimension below rank", f"dim {g} < rank {t}")
    if (g - t) % 2:
        return CaseTrace(t, k, g, n, "eliminated", "root parity", f"dim - rank = {g - t} is odd; roots come in pairs")
    if g == comb(n, 2):
        return CaseTrace(t, k, g, n, "eliminated", "G = SO(n)", "m = 0, no non-integrable structures")
    if t > n // 2:
        return CaseTrace(t, k, g, n, "eliminated", "rank exceeds n/2", f"rank {t} > rank of SO({n}) = {n // 2}")
    if g > 3 * t * t:
        subs = []
        for parts, gd, gt in _exceptional_dissections(g, t):
            ok = gd <= 4 * gt * gt if gt else gd == 0
            subs.append(f"{'+'.join(parts)} + g*: dim g* = {gd}, rank {gt}, 4t*^2 = {4 * gt * gt} -> {'possible' if ok else 'violates bound'}")
            if ok:
                return CaseTrace(t, k, g, n, "survivor", "", "exceptional dissection possible", subs)
        return CaseTrace(
            t, k, g, n, "eliminated", "exceptional-summand contradiction", f"{g} > 3t^2 = {3 * t * t} needs an exceptional summand", subs
        )
    return CaseTrace(t, k, g, n, "survivor", "")


def enumerate_cases(max_rank: int | None = None) -> list[CaseTrace]:
    """Walk every (t, k) with t up to the rank bound and k up to the first dimension over 4 t^2."""
    T = rank_bound() if max_rank is None else max_rank
    out = []
    for t in range(1, T + 1):
        k = 1
        while True:
            n = 2 ** (t - 1) * k
            num = 4 ** (t - 1) * k * k - 1
            gq = Fraction(num, 3)
            if gq > 4 * t * t:
                out.append(CaseTrace(t, k, int(gq) if gq.denominator == 1 else gq, n, "eliminated", "dimension bound", f"dim {gq} > 4t^2 = {4 * t * t}"))
                break
            if gq.denominator != 1:
                out.append(CaseTrace(t, k, gq, n, "eliminated", "non-integral dimension", f"dim = {gq}"))
            else:
                out.append(_judge(t, k, int(gq), n))
            k += 1
    return out


def survivors(traces: Iterable[CaseTrace] | None = None) -> list[CaseTrace]:
    return [c for c in (enumerate_cases() if traces is None else traces) if c.verdict == "survivor"]
