"""Plain-text formats for forms and Gamma values, plus JSON-ready encoders.

Forms are written one term per line as ``i j k p/q`` (any number of
indices, the last field being the coefficient).  A Gamma in R^n (x) so(n)
is written as ``dir i j p/q``, meaning Gamma(e_dir) has entry p/q at (i, j)
and -p/q at (j, i).  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .tensor import Multivector, SkewEndo

__all__ = [
    "InputFormatError",
    "parse_form",
    "parse_gamma",
    "format_form",
    "format_gamma",
    "fraction_text",
    "form_terms",
    "skew_entries",
]


class InputFormatError(ValueError):
    pass


def fraction_text(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _coeff(field: str, lineno: int) -> Fraction:
    try:
        return Fraction(field)
    except (ValueError, ZeroDivisionError):
        raise InputFormatError(f"line {lineno}: bad coefficient {field!r}") from None


def _indices(fields: Sequence[str], lineno: int, n: int) -> tuple[int, ...]:
    try:
        idx = tuple(int(f) for f in fields)
    except ValueError:
        raise InputFormatError(f"line {lineno}: indices must be integers") from None
    if any(not 1 <= i <= n for i in idx):
        raise InputFormatError(f"line {lineno}: index out of range 1..{n}")
    return idx


def parse_form(text: str, n: int, grade: int = 3) -> Multivector:
    """Read a grade-``grade`` form on R^n; repeated terms are summed."""
    acc = Multivector.zero(n, grade)
    for lineno, fields in _lines(text):
        if len(fields) != grade + 1:
            raise InputFormatError(f"line {lineno}: expected {grade} indices and a coefficient")
        idx = _indices(fields[:-1], lineno, n)
        if len(set(idx)) != grade:
            raise InputFormatError(f"line {lineno}: repeated index")
        acc = acc + Multivector.from_unsorted(n, grade, [(idx, _coeff(fields[-1], lineno))])
    return acc


def parse_gamma(text: str, n: int) -> list[SkewEndo]:
    entries = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for lineno, fields in _lines(text):
        if len(fields) != 4:
            raise InputFormatError(f"line {lineno}: expected 'dir i j p/q'")
        d, i, j = _indices(fields[:3], lineno, n)
        if i == j:
            raise InputFormatError(f"line {lineno}: diagonal entry in a skew matrix")
        c = _coeff(fields[3], lineno)
        entries[d - 1][i - 1][j - 1] += c
        entries[d - 1][j - 1][i - 1] -= c
    return [SkewEndo(n, tuple(tuple(r) for r in m)) for m in entries]


def format_form(T: Multivector) -> str:
    return "".join(f"{' '.join(map(str, k))} {fraction_text(c)}\n" for k, c in sorted(T.terms.items()))


def format_gamma(gamma: Sequence[SkewEndo]) -> str:
    out = []
    for d, omega in enumerate(gamma, 1):
        for i, j, c in skew_entries(omega):
            out.append(f"{d} {i} {j} {c}\n")
    return "".join(out)


def form_terms(T: Multivector) -> list[dict]:
    return [{"index": list(k), "coeff": fraction_text(c)} for k, c in sorted(T.terms.items())]


def skew_entries(omega: SkewEndo) -> list[tuple[int, int, str]]:
    n = omega.dim
    return [
        (i + 1, j + 1, fraction_text(omega.entries[i][j]))
        for i in range(n)
        for j in range(i + 1, n)
        if omega.entries[i][j]
    ]
