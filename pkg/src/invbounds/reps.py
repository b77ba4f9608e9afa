"""Explicit bases, torus weights and Lie-algebra actions for S^d(V) and tensor products.

Basis orders are fixed: degree-d monomials are listed in descending lex order
of their exponent vectors (``x1^3, x1^2*x2, ...``) and tensor basis elements in
odometer order (last factor index varies fastest).  Labels of the underlying
basis vectors must be distinct across all tensor factors, so a single
``TorusEmbedding`` can assign a weight to every one of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from .errors import UnassignedBasisVector, UnsupportedBasisKind
from .linalg import GaussianRational
from .weights import WeightLattice

__all__ = [
    "BasisElement",
    "SymPower",
    "TensorProduct",
    "RANK_ONE",
    "sym_power_basis",
    "monomial_type",
    "TorusEmbedding",
    "WeightMatrix",
    "weight_of",
    "weight_matrix",
    "standard_embedding",
    "LieAlgebra",
    "act",
    "torus_directions",
    "LieActionMatrix",
    "lie_action_matrix",
    "Summand",
    "RepPoint",
    "space_from_json",
    "space_to_json",
    "point_from_json",
    "point_to_json",
]

SYM = "sym"
TENSOR = "tensor"
RANK_ONE = "rank-one"


@dataclass(frozen=True, order=True)
class BasisElement:
    """A monomial (exponent vector) or a decomposable tensor (index tuple)."""

    kind: str
    data: tuple[int, ...]


def _exponent_vectors(m: int, d: int):
    if m == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _exponent_vectors(m - 1, d - first):
            yield (first,) + rest


def sym_power_basis(d: int, labels: Sequence[str]) -> list[BasisElement]:
    """All degree-``d`` monomials in descending lex order; ``C(m+d-1, d)`` of them."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    return [BasisElement(SYM, e) for e in _exponent_vectors(len(labels), d)]


@dataclass(frozen=True)
class SymPower:
    labels: tuple[str, ...]
    degree: int
    kind: str = field(default=SYM, init=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate basis labels")

    @property
    def factor_sizes(self) -> tuple[int, ...]:
        return (len(self.labels),)

    @property
    def dimension(self) -> int:
        return comb(len(self.labels) + self.degree - 1, self.degree)

    def basis(self) -> list[BasisElement]:
        return sym_power_basis(self.degree, self.labels)

    def check(self, b: BasisElement) -> None:
        if b.kind != SYM:
            raise UnsupportedBasisKind(f"{b.kind} element in a symmetric power")
        if len(b.data) != len(self.labels) or any(e < 0 for e in b.data) or sum(b.data) != self.degree:
            raise ValueError(f"{b.data} is not a degree-{self.degree} exponent vector")

    def monomial(self, **exponents: int) -> BasisElement:
        e = [0] * len(self.labels)
        for lab, k in exponents.items():
            e[self.labels.index(lab)] += k
        b = BasisElement(SYM, tuple(e))
        self.check(b)
        return b

    def factors_of(self, b: BasisElement) -> list[tuple[str, int]]:
        """Underlying basis vectors of ``b`` with multiplicity."""
        return [(self.labels[i], e) for i, e in enumerate(b.data) if e]

    def label(self, b: BasisElement) -> str:
        return "*".join(lab if e == 1 else f"{lab}^{e}" for lab, e in self.factors_of(b))

    def parse(self, text: str) -> BasisElement:
        e = [0] * len(self.labels)
        for part in text.replace(" ", "").split("*"):
            lab, _, power = part.partition("^")
            if lab not in self.labels:
                raise UnassignedBasisVector(lab)
            e[self.labels.index(lab)] += int(power) if power else 1
        b = BasisElement(SYM, tuple(e))
        self.check(b)
        return b


@dataclass(frozen=True)
class TensorProduct:
    factors: tuple[tuple[str, ...], ...]
    kind: str = field(default=TENSOR, init=False)

    def __post_init__(self):
        factors = tuple(tuple(f) for f in self.factors)
        object.__setattr__(self, "factors", factors)
        flat = [lab for f in factors for lab in f]
        if len(set(flat)) != len(flat):
            raise ValueError("basis labels must be distinct across tensor factors")

    @property
    def factor_sizes(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.factors)

    @property
    def dimension(self) -> int:
        out = 1
        for f in self.factors:
            out *= len(f)
        return out

    def basis(self) -> list[BasisElement]:
        return [BasisElement(TENSOR, idx) for idx in product(*(range(len(f)) for f in self.factors))]

    def check(self, b: BasisElement) -> None:
        if b.kind != TENSOR:
            raise UnsupportedBasisKind(f"{b.kind} element in a tensor product")
        if len(b.data) != len(self.factors) or any(
            not 0 <= i < len(f) for i, f in zip(b.data, self.factors)
        ):
            raise ValueError(f"{b.data} is not a valid tensor index")

    def element(self, *labels: str) -> BasisElement:
        b = BasisElement(TENSOR, tuple(f.index(lab) for f, lab in zip(self.factors, labels)))
        self.check(b)
        return b

    def factors_of(self, b: BasisElement) -> list[tuple[str, int]]:
        return [(f[i], 1) for f, i in zip(self.factors, b.data)]

    def label(self, b: BasisElement) -> str:
        return "*".join(lab for lab, _ in self.factors_of(b))

    def parse(self, text: str) -> BasisElement:
        parts = text.replace(" ", "").split("*")
        if len(parts) != len(self.factors):
            raise ValueError(f"{text!r} needs one label per tensor factor")
        for lab, f in zip(parts, self.factors):
            if lab not in f:
                raise UnassignedBasisVector(lab)
        return self.element(*parts)


Space = Union[SymPower, TensorProduct]


def monomial_type(b: BasisElement) -> Union[tuple[int, ...], str]:
    """Sorted positive exponents of a monomial, or ``"rank-one"`` for a tensor."""
    if b.kind == SYM:
        return tuple(sorted((e for e in b.data if e), reverse=True))
    if b.kind == TENSOR:
        return RANK_ONE
    raise UnsupportedBasisKind(b.kind)


def type_label(t) -> str:
    if t == RANK_ONE:
        return RANK_ONE
    return "(" + ",".join(str(a) for a in t) + ")"


@dataclass(frozen=True)
class TorusEmbedding:
    """A weight in ``Z^rank`` for each underlying basis vector label."""

    rank: int
    weights: Mapping[str, tuple[int, ...]]

    def __post_init__(self):
        w = {k: tuple(v) for k, v in dict(self.weights).items()}
        for k, v in w.items():
            if len(v) != self.rank:
                raise ValueError(f"weight of {k} has length {len(v)}, expected {self.rank}")
        object.__setattr__(self, "weights", w)

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.weights.items()))))

    def __getitem__(self, label: str) -> tuple[int, ...]:
        try:
            return self.weights[label]
        except KeyError:
            raise UnassignedBasisVector(label) from None

    def to_json(self) -> dict:
        return {k: list(v) for k, v in self.weights.items()}


def standard_embedding(space: Space) -> TorusEmbedding:
    """Weights of the diagonal maximal torus: basis vector k gets the unit vector e_k.

    For tensor products the factor coordinates are concatenated.
    """
    if space.kind == SYM:
        labels = list(space.labels)
    else:
        labels = [lab for f in space.factors for lab in f]
    n = len(labels)
    return TorusEmbedding(n, {lab: tuple(int(i == k) for i in range(n)) for k, lab in enumerate(labels)})


def default_lattice(space: Space, kind: str = "SL") -> WeightLattice:
    return WeightLattice(tuple((kind, m) for m in space.factor_sizes))


def weight_of(space: Space, b: BasisElement, emb: TorusEmbedding) -> tuple[int, ...]:
    """Sum of the assigned weights over the factors of ``b``, with multiplicity."""
    space.check(b)
    out = [0] * emb.rank
    for lab, mult in space.factors_of(b):
        for k, x in enumerate(emb[lab]):
            out[k] += mult * x
    return tuple(out)


@dataclass(frozen=True)
class WeightMatrix:
    """Integer matrix whose i-th column is the weight of the i-th basis element."""

    space: Space
    basis: tuple[BasisElement, ...]
    embedding: TorusEmbedding
    matrix: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(r[i] for r in self.matrix)

    def labels(self) -> list[str]:
        return [self.space.label(b) for b in self.basis]

    def recompute(self) -> tuple[tuple[int, ...], ...]:
        return weight_matrix(self.space, self.basis, self.embedding).matrix

    def to_json(self) -> dict:
        return {
            "basis": self.labels(),
            "matrix": [list(r) for r in self.matrix],
        }


def weight_matrix(space: Space, basis: Iterable[BasisElement], emb: TorusEmbedding) -> WeightMatrix:
    basis = tuple(basis)
    cols = [weight_of(space, b, emb) for b in basis]
    matrix = tuple(tuple(c[k] for c in cols) for k in range(emb.rank))
    return WeightMatrix(space, basis, emb, matrix)


# --- Lie algebra action ------------------------------------------------------

# An element of a Lie algebra of block-diagonal matrices: one sparse matrix
# {(i, j): coefficient} per factor.
LieElement = tuple[dict[tuple[int, int], Fraction], ...]


@dataclass(frozen=True)
class LieAlgebra:
    """``sl(m_1) x ... x sl(m_d)``, optionally enlarged by joint-trace directions.

    With ``joint_trace`` the algebra is ``{(X_1, ..., X_d) : sum tr X_k = 0}``,
    the Lie algebra of ``{(g_k) in prod GL : prod det g_k = 1}``.
    """

    block_sizes: tuple[int, ...]
    joint_trace: bool = False

    @classmethod
    def sl(cls, m: int) -> LieAlgebra:
        return cls((m,))

    @classmethod
    def for_space(cls, space: Space, joint_trace: bool = False) -> LieAlgebra:
        return cls(space.factor_sizes, joint_trace)

    @property
    def dimension(self) -> int:
        d = sum(m * m - 1 for m in self.block_sizes)
        if self.joint_trace:
            d += len(self.block_sizes) - 1
        return d

    def basis(self) -> list[LieElement]:
        """Per block: ``E_ij`` (i != j) then ``E_kk - E_{k+1,k+1}``; joint-trace directions last."""
        nb = len(self.block_sizes)
        out: list[LieElement] = []
        for b, m in enumerate(self.block_sizes):
            for i in range(m):
                for j in range(m):
                    if i != j:
                        out.append(_single_block(nb, b, {(i, j): Fraction(1)}))
            for k in range(m - 1):
                out.append(_single_block(nb, b, {(k, k): Fraction(1), (k + 1, k + 1): Fraction(-1)}))
        if self.joint_trace:
            for b in range(nb - 1):
                X = [dict() for _ in range(nb)]
                X[b][(0, 0)] = Fraction(1)
                X[b + 1][(0, 0)] = Fraction(-1)
                out.append(tuple(X))
        return out


def _single_block(nb: int, b: int, entries: dict) -> LieElement:
    return tuple(entries if k == b else {} for k in range(nb))


def act(X: LieElement, space: Space, terms: Mapping[BasisElement, GaussianRational]) -> dict:
    """Apply a Lie algebra element to a vector given as ``{basis element: coefficient}``.

    Monomials transform by the Leibniz rule, ``E_ij * b_j^a * rest = a * b_i * b_j^(a-1) * rest``;
    decomposable tensors by ``X(u⊗v⊗w) = X_1u⊗v⊗w + u⊗X_2v⊗w + u⊗v⊗X_3w``.
    """
    if len(X) != len(space.factor_sizes):
        raise ValueError("Lie element has the wrong number of blocks for this space")
    out: dict[BasisElement, GaussianRational] = {}

    def add(b, c):
        cur = out.get(b)
        out[b] = c if cur is None else cur + c

    for b, c in terms.items():
        c = GaussianRational.coerce(c)
        if b.kind == SYM:
            for (i, j), x in X[0].items():
                e = b.data[j]
                if not e:
                    continue
                new = list(b.data)
                new[j] -= 1
                new[i] += 1
                add(BasisElement(SYM, tuple(new)), c * (x * e))
        elif b.kind == TENSOR:
            for f, block in enumerate(X):
                for (i, j), x in block.items():
                    if b.data[f] != j:
                        continue
                    new = list(b.data)
                    new[f] = i
                    add(BasisElement(TENSOR, tuple(new)), c * x)
        else:
            raise UnsupportedBasisKind(b.kind)
    return {b: c for b, c in out.items() if c}


def torus_directions(space: Space, emb: TorusEmbedding) -> list[LieElement]:
    """Diagonal Lie algebra elements spanning the image of the embedded torus's Lie algebra."""
    if space.kind == SYM:
        blocks = [list(space.labels)]
    else:
        blocks = [list(f) for f in space.factors]
    out = []
    for k in range(emb.rank):
        out.append(
            tuple(
                {(i, i): Fraction(emb[lab][k]) for i, lab in enumerate(block) if emb[lab][k]}
                for block in blocks
            )
        )
    return out


# --- points ------------------------------------------------------------------


@dataclass(frozen=True)
class Summand:
    name: str
    terms: Mapping[BasisElement, GaussianRational]

    def __post_init__(self):
        terms = {b: GaussianRational.coerce(c) for b, c in dict(self.terms).items()}
        if any(not c for c in terms.values()):
            raise ValueError(f"summand {self.name!r} has a zero coefficient")
        object.__setattr__(self, "terms", terms)


@dataclass(frozen=True)
class RepPoint:
    """A point of ``space^{⊕k}``: named summands, each a sparse coefficient map.

    ``lattice`` is the weight lattice of the acting group's maximal torus,
    whose coordinates are the underlying basis vectors in order.
    """

    space: Space
    summands: tuple[Summand, ...]
    lattice: WeightLattice | None = None

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if self.lattice is None:
            object.__setattr__(self, "lattice", default_lattice(self.space))
        names = [s.name for s in self.summands]
        if len(set(names)) != len(names):
            raise ValueError("summand names must be distinct")
        for s in self.summands:
            for b in s.terms:
                self.space.check(b)

    def renamed(self, mapping: Mapping[str, str]) -> RepPoint:
        return RepPoint(
            self.space,
            tuple(Summand(mapping.get(s.name, s.name), s.terms) for s in self.summands),
            self.lattice,
        )


@dataclass(frozen=True)
class LieActionMatrix:
    """Matrix of ``X -> X·p``: one column per Lie basis element, one row per output coordinate."""

    rows: list[list[GaussianRational]]
    row_keys: list[tuple[str, BasisElement]]
    algebra: LieAlgebra

    @property
    def ncols(self) -> int:
        return self.algebra.dimension


def lie_action_matrix(point: RepPoint, algebra: LieAlgebra) -> LieActionMatrix:
    if tuple(algebra.block_sizes) != tuple(point.space.factor_sizes):
        raise ValueError("Lie algebra blocks do not match the representation's factors")
    basis = algebra.basis()
    columns = []
    keys: dict[tuple[str, BasisElement], int] = {}
    for X in basis:
        col = {}
        for s in point.summands:
            for b, c in act(X, point.space, s.terms).items():
                key = (s.name, b)
                if key not in keys:
                    keys[key] = len(keys)
                col[keys[key]] = c
        columns.append(col)
    zero = GaussianRational(0)
    rows = [[zero] * len(basis) for _ in keys]
    for j, col in enumerate(columns):
        for r, c in col.items():
            rows[r][j] = c
    row_keys = sorted(keys, key=keys.get)
    return LieActionMatrix(rows, row_keys, algebra)


# --- JSON descriptors ----------------------------------------------------------


def space_to_json(space: Space) -> dict:
    if space.kind == SYM:
        return {"kind": SYM, "degree": space.degree, "factors": [list(space.labels)]}
    return {"kind": TENSOR, "degree": len(space.factors), "factors": [list(f) for f in space.factors]}


def space_from_json(obj: Mapping) -> tuple[Space, int]:
    """Read a representation descriptor; returns the space and its number of copies.

    ``{"kind": "sum", "factors": [d, d, ...]}`` stands for a direct sum of
    copies of one space.
    """
    kind = obj["kind"]
    if kind == SYM:
        factors = obj["factors"]
        labels = factors[0] if factors and isinstance(factors[0], list) else factors
        return SymPower(tuple(labels), int(obj["degree"])), 1
    if kind == TENSOR:
        return TensorProduct(tuple(tuple(f) for f in obj["factors"])), 1
    if kind == "sum":
        parts = [space_from_json(f) for f in obj["factors"]]
        spaces = {p[0] for p in parts}
        if len(spaces) != 1:
            raise UnsupportedBasisKind("direct sums must repeat a single space")
        return parts[0][0], sum(p[1] for p in parts)
    raise UnsupportedBasisKind(kind)


def embedding_from_json(obj: Mapping) -> TorusEmbedding:
    weights = {k: tuple(int(x) for x in v) for k, v in obj.items()}
    ranks = {len(v) for v in weights.values()}
    if len(ranks) > 1:
        raise ValueError("torus weights of different lengths")
    return TorusEmbedding(ranks.pop() if ranks else 0, weights)


def point_to_json(point: RepPoint) -> dict:
    return {
        "space": space_to_json(point.space),
        "lattice": point.lattice.to_json(),
        "summands": [
            {
                "name": s.name,
                "terms": [
                    {"element": point.space.label(b), "coef": str(c)}
                    for b, c in sorted(s.terms.items(), key=lambda t: t[0].data, reverse=True)
                ],
            }
            for s in point.summands
        ],
    }


def point_from_json(obj: Mapping) -> RepPoint:
    space, _ = space_from_json(obj["space"])
    lattice = WeightLattice.from_json(obj["lattice"]) if "lattice" in obj else None
    summands = []
    for s in obj["summands"]:
        terms: dict[BasisElement, GaussianRational] = {}
        for t in s["terms"]:
            b = space.parse(t["element"])
            c = GaussianRational.coerce(str(t.get("coef", "1")))
            terms[b] = terms.get(b, GaussianRational(0)) + c
        summands.append(Summand(s["name"], {b: c for b, c in terms.items() if c}))
    return RepPoint(space, tuple(summands), lattice)
