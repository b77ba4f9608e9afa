"""Minimal generators of the monoid of nonnegative integer kernel vectors.

For an integer matrix ``A`` the monoid ``I(A) = ker(A) ∩ Z_{>=0}^m`` is
generated by its componentwise-minimal nonzero elements.  They are found with
the Contejean-Devie completion: a breadth-first walk over ``Z_{>=0}^m`` that
only steps along ``e_j`` when ``<A p, A e_j> < 0`` (the step moves ``A p``
back toward the origin) and never grows a node that already dominates a
solution.

Kernels of dimension at most one skip the search entirely; this is the only
way to reach generators whose degree grows like ``4**n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Sequence

from .errors import DimensionMismatch, ResourceLimit
from .linalg import kernel_basis

__all__ = [
    "DEFAULT_BUDGET",
    "HilbertBasis",
    "hilbert_basis",
    "is_member",
    "min_degree_in_support",
    "degree",
]

DEFAULT_BUDGET = 2_000_000

IntMatrix = Sequence[Sequence[int]]


def degree(v: Sequence[int]) -> int:
    return sum(v)


def _ncols(A: IntMatrix, cols: int | None) -> int:
    if cols is not None:
        for row in A:
            if len(row) != cols:
                raise DimensionMismatch(f"row of length {len(row)} in a {cols}-column matrix")
        return cols
    if not A:
        raise DimensionMismatch("cannot infer the column count of a matrix with no rows")
    width = len(A[0])
    if any(len(row) != width for row in A):
        raise DimensionMismatch("ragged matrix")
    return width


def _sort_key(v: tuple[int, ...]):
    return (sum(v), tuple(-x for x in v))


@dataclass(frozen=True)
class HilbertBasis:
    """The generators of ``I(A)``, sorted by degree then reverse-lex."""

    generators: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]
    cols: int
    fast_path: bool
    nodes: int = 0

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)

    @property
    def min_degree(self) -> int | None:
        return min((sum(g) for g in self.generators), default=None)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def as_set(self) -> set[tuple[int, ...]]:
        return set(self.generators)

    def to_json(self) -> dict:
        return {
            "generators": [list(g) for g in self.generators],
            "maxDegree": self.max_degree,
            "fastPath": self.fast_path,
        }


def is_member(A: IntMatrix, v: Sequence[int], cols: int | None = None) -> bool:
    """True iff ``v >= 0`` componentwise and ``A v = 0``."""
    m = _ncols(A, len(v) if cols is None and not A else cols)
    if len(v) != m:
        raise DimensionMismatch(f"vector of length {len(v)} for a {m}-column matrix")
    if any(x < 0 for x in v):
        return False
    return all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)


def _fast_path(A: IntMatrix, m: int) -> tuple[tuple[int, ...], ...] | None:
    """Generators when the rational kernel has dimension <= 1, else None."""
    basis = kernel_basis(A, cols=m)
    if len(basis) > 1:
        return None
    if not basis:
        return ()
    v = basis[0]
    if all(x >= 0 for x in v):
        return (v,)
    if all(x <= 0 for x in v):
        return (tuple(-x for x in v),)
    return ()


def _dominates(p: Sequence[int], q: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(p, q))


def _completion(A: IntMatrix, m: int, budget: int) -> tuple[list[tuple[int, ...]], int]:
    columns = [tuple(row[j] for row in A) for j in range(m)]
    solutions: list[tuple[int, ...]] = []
    # frontier nodes carry A·p so the descent test costs one dot product
    frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
    for j in range(m):
        e = tuple(int(i == j) for i in range(m))
        frontier[e] = columns[j]
    nodes = len(frontier)
    while frontier:
        found = [p for p, Ap in frontier.items() if not any(Ap)]
        solutions.extend(found)
        found_set = set(found)
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for p, Ap in frontier.items():
            if p in found_set:
                continue
            for j in range(m):
                # <Ap, A e_j> < 0
                if sum(a * b for a, b in zip(Ap, columns[j])) >= 0:
                    continue
                q = p[:j] + (p[j] + 1,) + p[j + 1:]
                if q in nxt:
                    continue
                if any(_dominates(q, s) for s in solutions):
                    continue
                nxt[q] = tuple(a + b for a, b in zip(Ap, columns[j]))
                nodes += 1
                if nodes > budget:
                    raise ResourceLimit(
                        f"Contejean-Devie completion exceeded {budget} nodes "
                        f"({len(solutions)} generators found so far)"
                    )
        frontier = nxt
    return solutions, nodes


def hilbert_basis(
    A: IntMatrix,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
    cols: int | None = None,
) -> HilbertBasis:
    """Compute the minimal generating set of ``I(A)``.

    ``method`` is ``"auto"`` (fast path when the kernel has dimension <= 1,
    completion otherwise), ``"completion"`` (always search) or ``"fast"``
    (fail with ``ValueError`` unless the fast path applies).  ``ResourceLimit``
    is raised when the completion generates more than ``budget`` nodes.
    """
    if method not in ("auto", "completion", "fast"):
        raise ValueError(f"unknown method {method!r}")
    m = _ncols(A, cols)
    A = tuple(tuple(int(x) for x in row) for row in A)
    if m == 0:
        return HilbertBasis((), A, 0, True)
    if method != "completion":
        gens = _fast_path(A, m)
        if gens is not None:
            return HilbertBasis(tuple(sorted(gens, key=_sort_key)), A, m, True)
        if method == "fast":
            raise ValueError("fast path requires a kernel of dimension at most one")
    gens, nodes = _completion(A, m, budget)
    return HilbertBasis(tuple(sorted(gens, key=_sort_key)), A, m, False, nodes)


def min_degree_in_support(
    A: IntMatrix,
    support: Collection[int],
    budget: int = DEFAULT_BUDGET,
    cols: int | None = None,
) -> int | None:
    """Smallest degree of a nonzero element of ``I(A)`` supported inside ``support``.

    ``support`` holds 0-based column indices.  Returns ``None`` when only the
    zero vector qualifies.
    """
    m = _ncols(A, cols)
    support = sorted(set(support))
    if any(not 0 <= j < m for j in support):
        raise DimensionMismatch(f"support {support} outside columns 0..{m - 1}")
    if not support:
        return None
    sub = [[row[j] for j in support] for row in A]
    return hilbert_basis(sub, budget=budget, cols=len(support)).min_degree
