"""Independent reference implementations used only by the tests.

They work on dense component arrays with brute-force permutation sums and
share no code with the package.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

import sympy


def parity(seq) -> int:
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def dense(terms: dict, dim: int, grade: int) -> dict:
    """All ordered components T_{i1..ik} of an alternating tensor."""
    out = {}
    for key, c in terms.items():
        for perm in permutations(range(grade)):
            idx = tuple(key[p] for p in perm)
            out[idx] = parity(perm) * Fraction(c)
    return out


def wedge_terms(a: dict, p: int, b: dict, q: int, dim: int) -> dict:
    out = {}
    for key in combinations(range(1, dim + 1), p + q):
        acc = Fraction(0)
        for A in combinations(key, p):
            B = tuple(x for x in key if x not in A)
            acc += parity(A + B) * Fraction(a.get(A, 0)) * Fraction(b.get(B, 0))
        if acc:
            out[key] = acc
    return out


def contract_terms(sigma: dict, T: dict, dim: int) -> dict:
    """(sigma _| T)_k = sum_{i<j} sigma_ij T_ijk."""
    full = dense(T, dim, 3)
    out = {}
    for k in range(1, dim + 1):
        acc = sum((Fraction(c) * full.get((i, j, k), 0) for (i, j), c in sigma.items()), Fraction(0))
        if acc:
            out[(k,)] = acc
    return out


def so_act_terms(omega, T: dict, dim: int, grade: int) -> dict:
    """Slotwise action (Omega.T)_{a..} = sum_d omega_{a d} T_{d ..} on each slot."""
    full = dense(T, dim, grade)
    out = {}
    for key in combinations(range(1, dim + 1), grade):
        acc = Fraction(0)
        for slot in range(grade):
            for d in range(1, dim + 1):
                idx = key[:slot] + (d,) + key[slot + 1 :]
                acc += Fraction(omega[key[slot] - 1][d - 1]) * full.get(idx, 0)
        if acc:
            out[key] = acc
    return out


def sympy_rank(rows) -> int:
    return sympy.Matrix([[sympy.Rational(str(Fraction(x))) for x in r] for r in rows]).rank()


def sympy_nullity(rows, cols: int) -> int:
    if not rows:
        return cols
    return cols - sympy_rank(rows)


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows])


# --- root data in orthogonal (epsilon) coordinates ----------------------------

def _vec(*xs):
    return tuple(Fraction(x) for x in xs)


def _unit(n, i, s=1):
    return tuple(Fraction(s if k == i else 0) for k in range(n))


def _add(a, b, s=1):
    return tuple(x + s * y for x, y in zip(a, b))


def _b_roots(n):
    simple = [_add(_unit(n, i), _unit(n, i + 1), -1) for i in range(n - 1)] + [_unit(n, n - 1)]
    pos = [_unit(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            pos.append(_add(_unit(n, i), _unit(n, j)))
            pos.append(_add(_unit(n, i), _unit(n, j), -1))
    return simple, pos


def _f4_roots():
    simple = [_vec(0, 1, -1, 0), _vec(0, 0, 1, -1), _vec(0, 0, 0, 1), _vec("1/2", "-1/2", "-1/2", "-1/2")]
    _, pos = _b_roots(4)
    h = Fraction(1, 2)
    for s2 in (1, -1):
        for s3 in (1, -1):
            for s4 in (1, -1):
                pos.append((h, s2 * h, s3 * h, s4 * h))
    return simple, pos


ROOT_DATA = {
    "A1": ([_vec(1, -1)], [_vec(1, -1)]),
    "A2": ([_vec(1, -1, 0), _vec(0, 1, -1)], [_vec(1, -1, 0), _vec(0, 1, -1), _vec(1, 0, -1)]),
    "B3": _b_roots(3),
    "B4": _b_roots(4),
    "G2": (
        [_vec(1, -1, 0), _vec(-2, 1, 1)],
        [_vec(1, -1, 0), _vec(-2, 1, 1), _vec(-1, 0, 1), _vec(0, -1, 1), _vec(1, -2, 1), _vec(-1, -1, 2)],
    ),
    "F4": _f4_roots(),
}


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def fundamental_weights(label):
    """omega_i with 2(omega_i, alpha_j)/(alpha_j, alpha_j) = delta_ij, inside span(simple roots)."""
    simple, _ = ROOT_DATA[label]
    r = len(simple)
    M = sympy.Matrix(
        [[sympy.Rational(2) * sympy.Rational(str(dot(simple[k], simple[j]))) / sympy.Rational(str(dot(simple[j], simple[j])))
          for k in range(r)] for j in range(r)]
    )
    out = []
    for i in range(r):
        rhs = sympy.Matrix([int(i == j) for j in range(r)])
        c = M.LUsolve(rhs)
        w = tuple(Fraction(0) for _ in simple[0])
        for k in range(r):
            w = _add(w, tuple(Fraction(str(c[k])) * x for x in simple[k]))
        out.append(w)
    return out


def to_eps(label, dynkin):
    fw = fundamental_weights(label)
    w = tuple(Fraction(0) for _ in fw[0])
    for a, f in zip(dynkin, fw):
        w = _add(w, tuple(a * x for x in f))
    return w


def weyl_dim_oracle(label, dynkin) -> int:
    _, pos = ROOT_DATA[label]
    rho = tuple(sum(c) / 2 for c in zip(*pos))
    lam = to_eps(label, dynkin)
    num = Fraction(1)
    for a in pos:
        num *= dot(_add(lam, rho), a) / dot(rho, a)
    assert num.denominator == 1
    return int(num)


def weyl_orbit(label, v):
    simple, _ = ROOT_DATA[label]
    seen = {v}
    todo = [v]
    while todo:
        x = todo.pop()
        for a in simple:
            y = _add(x, a, -2 * dot(x, a) / dot(a, a))
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def exterior_weights(weights, k):
    """Weights of Lambda^k from a list of weights (with repetition), by brute force."""
    from collections import Counter

    out = Counter()
    for combo in combinations(range(len(weights)), k):
        acc = tuple(Fraction(0) for _ in weights[0])
        for i in combo:
            acc = _add(acc, weights[i])
        out[acc] += 1
    return out
