"""Brute-force oracles, independent of the code paths they check."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def rref_rank(A) -> int:
    """Plain Gauss-Jordan over Fractions, pivoting row by row."""
    M = [[Fraction(x) for x in row] for row in A]
    if not M:
        return 0
    r = 0
    for c in range(len(M[0])):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        M[r] = [x / M[r][c] for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def nonneg_vectors(m: int, max_degree: int):
    """All nonzero vectors in Z_{>=0}^m with coordinate sum <= max_degree."""
    for v in product(range(max_degree + 1), repeat=m):
        if 0 < sum(v) <= max_degree:
            yield v


def solutions(A, m: int, max_degree: int) -> list[tuple[int, ...]]:
    return [
        v
        for v in nonneg_vectors(m, max_degree)
        if all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    ]


def indecomposable(sols: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Solutions that are not a sum of two nonzero solutions."""
    sol_set = set(sols)
    out = set()
    for v in sols:
        if not any(
            u != v and tuple(a - b for a, b in zip(v, u)) in sol_set for u in sols if sum(u) < sum(v)
        ):
            out.add(v)
    return out


def sigma_by_indicator_points(A, m: int, max_degree: int) -> int:
    """Smallest D such that degree <= D invariant monomials vanish exactly on the null cone.

    Zero sets of monomials depend only on supports, so it is enough to test the
    0/1 indicator point of every subset of coordinates.  Requires every
    generator to have degree <= max_degree.
    """
    sols = solutions(A, m, max_degree)
    if not sols:
        return 0

    def killed(point_support, invariants):
        return all(any(v[j] and j not in point_support for j in range(m)) for v in invariants)

    subsets = [set(s) for k in range(m + 1) for s in combinations(range(m), k)]
    null_cone = [killed(S, sols) for S in subsets]
    for D in range(1, max_degree + 1):
        low = [v for v in sols if sum(v) <= D]
        if all(killed(S, low) == nc for S, nc in zip(subsets, null_cone)):
            return D
    raise AssertionError("max_degree too small for this matrix")


def roots_by_enumeration(blocks):
    """Every e_i - e_j within one block, as raw coordinate tuples.

    ``blocks`` is a list of (kind, size) pairs.
    """
    n = sum(m for _, m in blocks)
    start = 0
    for _, m in blocks:
        for i in range(start, start + m):
            for j in range(start, start + m):
                if i != j:
                    v = [0] * n
                    v[i], v[j] = 1, -1
                    yield tuple(v)
        start += m


def equal_mod_relations(blocks, a, b) -> bool:
    """a == b in the weight lattice: equal in GL blocks, equal up to a constant shift in SL blocks."""
    start = 0
    for kind, m in blocks:
        d = [x - y for x, y in zip(a[start : start + m], b[start : start + m])]
        if kind == "GL" and any(d):
            return False
        if kind == "SL" and len(set(d)) > 1:
            return False
        start += m
    return True


def root_adjacent_by_enumeration(blocks, lam, mu) -> bool:
    d = tuple(x - y for x, y in zip(lam, mu))
    return any(equal_mod_relations(blocks, d, r) for r in roots_by_enumeration(blocks))
