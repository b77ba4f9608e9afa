"""Exact linear algebra over the rationals and the Gaussian rationals.

Rational matrices are reduced with Bareiss fraction-free elimination after
clearing row denominators, so every intermediate value is an integer minor.
Matrices over Q(i) go through a sparse fraction-free elimination on Gaussian
integer rows, which is what the Lie-algebra stabilizer computations need:
their action matrices have a few thousand rows with a handful of nonzeros each.

Matrices are plain sequences of rows.  Entries may be ``int``, ``Fraction``,
``GaussianRational`` or exact strings such as ``"3/4"`` or ``"1/2-3/5*i"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

__all__ = [
    "GaussianRational",
    "HomogeneousSolution",
    "bareiss_echelon",
    "rank",
    "kernel_basis",
    "primitive_vector",
    "solve_homogeneous",
    "gaussian_rank",
    "matrix_to_json",
    "matrix_from_json",
]


class GaussianRational:
    """An exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction = 0):
        if isinstance(re, str):
            parsed = GaussianRational.parse(re)
            re, im = parsed.re, parsed.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    _TERM = re.compile(r"^([+-]?)(\d+(?:/\d+)?)?(\*?i)?$")

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse strings like ``"3"``, ``"-1/2"``, ``"i"``, ``"3/5+4/5*i"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian rational literal")
        # split at a sign that is not the leading character
        parts = re.findall(r"[+-]?[^+-]+", s)
        if not parts or "".join(parts) != s:
            raise ValueError(f"cannot parse Gaussian rational {text!r}")
        re_part = Fraction(0)
        im_part = Fraction(0)
        for part in parts:
            m = cls._TERM.match(part)
            if m is None or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse Gaussian rational {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            value = Fraction(m.group(2)) if m.group(2) is not None else Fraction(1)
            if m.group(3):
                if m.group(3) == "*i" and m.group(2) is None:
                    raise ValueError(f"cannot parse Gaussian rational {text!r}")
                im_part += sign * value
            else:
                re_part += sign * value
        return cls(re_part, im_part)

    @staticmethod
    def coerce(x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return GaussianRational.parse(x)
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """The exact squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.norm2()
        if d == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            im = "i"
        elif self.im == -1:
            im = "-i"
        else:
            im = f"{self.im}*i"
        if self.re == 0:
            return im
        return f"{self.re}+{im}" if self.im > 0 else f"{self.re}{im}"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"


def _to_fraction(x) -> Fraction:
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise ValueError(f"expected a rational entry, got {x}")
        return x.re
    return Fraction(x)


def _shape(A: Sequence[Sequence], cols: int | None = None) -> tuple[int, int]:
    nrows = len(A)
    if cols is None:
        if nrows == 0:
            raise ValueError("column count of an empty matrix is ambiguous; pass cols")
        cols = len(A[0])
    for row in A:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return nrows, cols


def _integer_rows(A: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in A:
        fr = [_to_fraction(x) for x in row]
        den = lcm(1, *(f.denominator for f in fr))
        out.append([int(f * den) for f in fr])
    return out


def bareiss_echelon(
    A: Sequence[Sequence], column_order: Iterable[int] | None = None
) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of a rational matrix.

    Returns the integer echelon rows (only the nonzero ones) and the pivot
    column of each, in elimination order.  ``column_order`` changes the order
    in which columns are tried as pivots.
    """
    M = _integer_rows(A)
    nrows = len(M)
    if nrows == 0:
        return [], []
    ncols = len(M[0])
    order = list(range(ncols)) if column_order is None else list(column_order)
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in order:
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        prow = M[r]
        for i in range(r + 1, nrows):
            row = M[i]
            f = row[c]
            M[i] = [(p * row[j] - f * prow[j]) // prev for j in range(ncols)]
        prev = p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(A: Sequence[Sequence], column_order: Iterable[int] | None = None) -> int:
    """Rank over Q."""
    if len(A) == 0:
        return 0
    return len(bareiss_echelon(A, column_order)[1])


def primitive_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to integers with gcd 1 and first nonzero entry positive."""
    fr = [Fraction(x) for x in v]
    den = lcm(1, *(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    g = gcd(*ints)
    if g == 0:
        return tuple(ints)
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def kernel_basis(A: Sequence[Sequence], cols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of the rational null space, one primitive integer vector per free column."""
    _, ncols = _shape(A, cols)
    if len(A) == 0:
        return [tuple(int(i == j) for i in range(ncols)) for j in range(ncols)]
    R, pivots = bareiss_echelon(A)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            row = R[k]
            s = sum((row[j] * x[j] for j in range(ncols) if j != pc and row[j]), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(primitive_vector(x))
    return basis


# --- Gaussian integer rows, stored sparsely as {column: (re, im)} ---------

GInt = tuple[int, int]


def _gmul(a: GInt, b: GInt) -> GInt:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gaussian_integer_rows(A: Sequence[Sequence]) -> list[dict[int, GInt]]:
    rows = []
    for row in A:
        entries = {j: GaussianRational.coerce(x) for j, x in enumerate(row)}
        entries = {j: z for j, z in entries.items() if z}
        den = lcm(1, *(d for z in entries.values() for d in (z.re.denominator, z.im.denominator)))
        rows.append({j: (int(z.re * den), int(z.im * den)) for j, z in entries.items()})
    return rows


def _normalize(row: dict[int, GInt]) -> dict[int, GInt]:
    g = 0
    for a, b in row.values():
        g = gcd(g, a, b)
        if g == 1:
            return row
    if g > 1:
        return {j: (a // g, b // g) for j, (a, b) in row.items()}
    return row


def _combine(P: GInt, row: dict[int, GInt], f: GInt, prow: dict[int, GInt]) -> dict[int, GInt]:
    """Return P*row - f*prow with zero entries dropped and content removed."""
    new = {j: _gmul(P, v) for j, v in row.items()}
    for j, v in prow.items():
        t = _gmul(f, v)
        cur = new.get(j)
        if cur is None:
            new[j] = (-t[0], -t[1])
        else:
            d = (cur[0] - t[0], cur[1] - t[1])
            if d == (0, 0):
                del new[j]
            else:
                new[j] = d
    return _normalize(new)


def _sparse_echelon(
    rows: list[dict[int, GInt]], order: Sequence[int]
) -> list[tuple[int, dict[int, GInt]]]:
    remaining = [r for r in rows if r]
    echelon: list[tuple[int, dict[int, GInt]]] = []
    for c in order:
        best = None
        for idx, row in enumerate(remaining):
            if c in row and (best is None or len(row) < len(remaining[best])):
                best = idx
        if best is None:
            continue
        prow = remaining.pop(best)
        P = prow[c]
        nxt = []
        for row in remaining:
            f = row.get(c)
            if f is None:
                nxt.append(row)
                continue
            new = _combine(P, row, f, prow)
            if new:
                nxt.append(new)
        remaining = nxt
        echelon.append((c, prow))
    return echelon


@dataclass(frozen=True)
class HomogeneousSolution:
    """Kernel of a matrix over Q(i).

    Each basis vector has a 1 in one free column and 0 in the other free
    columns, so the basis is canonical for a given column order.
    """

    basis: tuple[tuple[GaussianRational, ...], ...]
    nullity: int
    rank: int
    pivots: tuple[int, ...]


def _column_order(ncols: int, column_order) -> list[int]:
    if column_order is None or column_order == "natural":
        return list(range(ncols))
    if column_order == "reversed":
        return list(range(ncols - 1, -1, -1))
    order = list(column_order)
    if sorted(order) != list(range(ncols)):
        raise ValueError("column_order must be a permutation of the columns")
    return order


def gaussian_rank(A: Sequence[Sequence], column_order=None, cols: int | None = None) -> int:
    """Rank over Q(i); ``column_order`` may be ``"natural"``, ``"reversed"`` or a permutation."""
    _, ncols = _shape(A, cols)
    return len(_sparse_echelon(_gaussian_integer_rows(A), _column_order(ncols, column_order)))


def solve_homogeneous(
    A: Sequence[Sequence], column_order=None, cols: int | None = None
) -> HomogeneousSolution:
    """Exact kernel of ``A`` over the Gaussian rationals."""
    _, ncols = _shape(A, cols)
    echelon = _sparse_echelon(_gaussian_integer_rows(A), _column_order(ncols, column_order))
    # back-eliminate so each pivot row meets only its own pivot among pivot columns
    rows = [row for _, row in echelon]
    pcols = [c for c, _ in echelon]
    for k in range(len(rows) - 1, -1, -1):
        c, prow = pcols[k], rows[k]
        P = prow[c]
        for i in range(k):
            f = rows[i].get(c)
            if f is not None:
                rows[i] = _combine(P, rows[i], f, prow)
    pivot_set = set(pcols)
    free = [j for j in range(ncols) if j not in pivot_set]
    zero = GaussianRational(0)
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = GaussianRational(1)
        for c, row in zip(pcols, rows):
            v = row.get(f)
            if v is not None:
                x[c] = -GaussianRational(*v) / GaussianRational(*row[c])
        basis.append(tuple(x))
    return HomogeneousSolution(tuple(basis), len(free), len(pcols), tuple(pcols))


def _entry_str(x) -> str:
    if isinstance(x, GaussianRational):
        return str(x)
    return str(Fraction(x))


def matrix_to_json(A: Sequence[Sequence], cols: int | None = None) -> dict:
    nrows, ncols = _shape(A, cols)
    return {
        "rows": nrows,
        "cols": ncols,
        "entries": [[_entry_str(x) for x in row] for row in A],
    }


def matrix_from_json(obj: dict) -> list[list]:
    """Read the ``{"rows", "cols", "entries"}`` schema.

    Entries come back as ``Fraction``, or ``GaussianRational`` when they carry
    an imaginary part.  Bare JSON integers are accepted as well.
    """
    entries = obj["entries"]
    nrows, ncols = obj.get("rows", len(entries)), obj.get("cols")
    if len(entries) != nrows:
        raise ValueError(f"expected {nrows} rows, found {len(entries)}")
    out = []
    for row in entries:
        if ncols is not None and len(row) != ncols:
            raise ValueError(f"expected {ncols} columns, found {len(row)}")
        parsed = []
        for x in row:
            if isinstance(x, int):
                parsed.append(Fraction(x))
            elif isinstance(x, str) and "i" in x:
                parsed.append(GaussianRational.parse(x))
            elif isinstance(x, str):
                parsed.append(Fraction(x))
            else:
                raise ValueError(f"entries must be exact strings or integers, got {x!r}")
        out.append(parsed)
    return out
