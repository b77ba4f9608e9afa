"""Weight lattices and type-A root systems for products of GL and SL factors.

A weight is a full-length coordinate vector split into one block per factor.
GL blocks compare exactly.  SL blocks compare modulo the all-ones vector of
the block, because the basis weights of SL(m) sum to zero.  Coordinates may
be rational so that norm-weighted sums of weights can be tested for zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import LatticeMismatch

__all__ = [
    "GL",
    "SL",
    "WeightLattice",
    "Weight",
    "weight_equal",
    "is_zero_weight",
    "is_root_adjacent",
    "is_uncramped",
    "roots",
]

GL = "GL"
SL = "SL"


@dataclass(frozen=True)
class WeightLattice:
    """Ordered factors ``(kind, size)`` with kind ``"GL"`` or ``"SL"``."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        factors = tuple((str(k).upper(), int(m)) for k, m in self.factors)
        for kind, m in factors:
            if kind not in (GL, SL) or m < 1:
                raise ValueError(f"bad lattice factor {(kind, m)}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def sl(cls, *sizes: int) -> WeightLattice:
        return cls(tuple((SL, m) for m in sizes))

    @classmethod
    def gl(cls, *sizes: int) -> WeightLattice:
        return cls(tuple((GL, m) for m in sizes))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.factors)

    def blocks(self) -> list[tuple[str, int, int]]:
        """``(kind, start, stop)`` slices of the coordinate vector."""
        out = []
        start = 0
        for kind, m in self.factors:
            out.append((kind, start, start + m))
            start += m
        return out

    def to_json(self) -> list:
        return [[k, m] for k, m in self.factors]

    @classmethod
    def from_json(cls, obj) -> WeightLattice:
        return cls(tuple((k, m) for k, m in obj))


@dataclass(frozen=True)
class Weight:
    coords: tuple
    lattice: WeightLattice

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != self.lattice.dimension:
            raise LatticeMismatch(
                f"{len(self.coords)} coordinates for a lattice of dimension {self.lattice.dimension}"
            )

    def __sub__(self, other: Weight) -> Weight:
        _check_same(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __add__(self, other: Weight) -> Weight:
        _check_same(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.lattice)

    def scaled(self, c) -> Weight:
        return Weight(tuple(c * a for a in self.coords), self.lattice)

    def canonical(self) -> tuple:
        """Representative with every SL block shifted so its minimum entry is 0.

        Two weights are equal iff their canonical forms agree.
        """
        out = list(self.coords)
        for kind, lo, hi in self.lattice.blocks():
            if kind == SL:
                shift = min(out[lo:hi])
                for k in range(lo, hi):
                    out[k] -= shift
        return tuple(out)

    def to_json(self) -> list:
        return [str(x) if isinstance(x, Fraction) and x.denominator != 1 else int(x) for x in self.coords]


def _check_same(a: Weight, b: Weight) -> None:
    if a.lattice != b.lattice:
        raise LatticeMismatch(f"{a.lattice} vs {b.lattice}")


def _block_is_zero(kind: str, d: Sequence) -> bool:
    if kind == GL:
        return all(x == 0 for x in d)
    return all(x == d[0] for x in d)


def is_zero_weight(w: Weight) -> bool:
    return all(_block_is_zero(kind, w.coords[lo:hi]) for kind, lo, hi in w.lattice.blocks())


def weight_equal(lam: Weight, mu: Weight) -> bool:
    """Blockwise equality, modulo the all-ones vector in SL blocks."""
    return is_zero_weight(lam - mu)


def _block_is_root(kind: str, d: Sequence) -> bool:
    # a root e_i - e_j, shifted by c*(1,...,1) in SL blocks, has entries
    # c+1 once, c-1 once and c elsewhere
    if len(d) < 2:
        return False
    hi, lo = max(d), min(d)
    if hi - lo != 2 or d.count(hi) != 1 or d.count(lo) != 1:
        return False
    c = lo + 1
    if kind == GL and c != 0:
        return False
    return all(x == c for x in d if x != hi and x != lo)


def is_root_adjacent(lam: Weight, mu: Weight) -> bool:
    """True iff ``lam - mu`` is a root of the product root system.

    The roots of a product are the union of the factor roots, so the
    difference has to vanish in all blocks but one and be a root there.
    """
    d = (lam - mu).coords
    hit = False
    for kind, lo, hi in lam.lattice.blocks():
        block = list(d[lo:hi])
        if _block_is_zero(kind, block):
            continue
        if hit or not _block_is_root(kind, block):
            return False
        hit = True
    return hit


def is_uncramped(weights: Iterable[Weight]) -> tuple[bool, tuple[Weight, Weight] | None]:
    """Check that no two weights in the set are root adjacent.

    Returns ``(True, None)`` or ``(False, (lam, mu))`` for the first offending
    pair in input order.
    """
    ws = list(weights)
    if ws:
        lattice = ws[0].lattice
        for w in ws:
            if w.lattice != lattice:
                raise LatticeMismatch("weights live on different lattices")
    for a, b in combinations(ws, 2):
        if is_root_adjacent(a, b):
            return False, (a, b)
    return True, None


def roots(lattice: WeightLattice) -> list[Weight]:
    """All roots ``e_i - e_j`` (i != j) of every factor, as full-length weights."""
    out = []
    n = lattice.dimension
    for _, lo, hi in lattice.blocks():
        for i in range(lo, hi):
            for j in range(lo, hi):
                if i != j:
                    v = [0] * n
                    v[i] += 1
                    v[j] -= 1
                    out.append(Weight(tuple(v), lattice))
    return out
