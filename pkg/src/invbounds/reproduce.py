"""Explicit objects behind the cubic-form and 3-tensor lower bounds, and end-to-end runs.

Cubic case: ``V`` has basis ``x_i, y_i, z_i`` (i = 1..n), listed interleaved as
``x1, y1, z1, x2, ...``.  The point ``w`` lives in ``S^3(V)^{⊕3}`` and its
stabilizer in ``SL(V)`` is the rank-n torus ``x_i, y_i -> t_i``, ``z_i -> t_i^-2``.

Tensor case: ``U, V, W`` have bases ``u{a}_{k}`` etc. (a = 1..3, k = 1..n),
meaning ``u_a^k``.  The point has eight summands and its stabilizer in
``{(g1, g2, g3) : det g1 det g2 det g3 = 1}`` is a rank-3n torus with
coordinates ``(p_1, q_1, r_1, ..., p_n, q_n, r_n)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .bounds import compose_lower_bound, degree_bounds
from .errors import InvBoundsError, ScalarConstraintViolated
from .hilbert import DEFAULT_BUDGET
from .linalg import GaussianRational, kernel_basis, rank
from .orbit import certify_closed_orbit, stabilizer_check
from .reps import (
    BasisElement,
    LieAlgebra,
    RepPoint,
    Summand,
    SymPower,
    TensorProduct,
    TorusEmbedding,
    WeightMatrix,
    act,
    point_to_json,
    torus_directions,
    weight_matrix,
)
from .weights import WeightLattice

__all__ = [
    "build_M",
    "build_N",
    "m_generator",
    "n_generator",
    "cubic_bound",
    "tensor_bound",
    "unit_point",
    "make_alphas",
    "cubic_space",
    "cubic_torus",
    "build_cubic_point",
    "tensor_space",
    "tensor_torus",
    "default_tensor_scalars",
    "build_tensor_point",
    "tensor_algebra",
    "Subspace",
    "build_subspace_U",
    "build_subspace_L",
    "printed_L_basis",
    "ScenarioReport",
    "reproduce_cubic",
    "reproduce_tensor",
]


# --- the matrices M and N ------------------------------------------------------


def build_M(n: int) -> list[list[int]]:
    """The n x (n+1) matrix with rows ``(1, 0, ..., -4, 3)`` and ``-4, 1`` below the diagonal."""
    if n < 2:
        raise ValueError("build_M needs n >= 2 (first-row entries overlap at n = 1)")
    A = [[0] * (n + 1) for _ in range(n)]
    A[0][0] = 1
    A[0][n - 1] = -4
    A[0][n] = 3
    for i in range(1, n):
        A[i][i] = 1
        A[i][i - 1] = -4
    return A


_P = ((-2, -1, -1), (-1, -2, -1), (-1, -1, -2))


def build_N(n: int) -> list[list[int]]:
    """The 3n x (3n-1) block matrix: ``B`` then ``(I_3 over P)`` blocks, then ``A``.

    Column 0 is ``B = (-2,-2,-2)`` in row block 0; columns ``1+3k .. 3+3k``
    hold ``I_3`` in row block k and ``P`` in row block k+1; the last column is
    ``A = (1,1,1)`` in the last row block.
    """
    if n < 1:
        raise ValueError("build_N needs n >= 1")
    A = [[0] * (3 * n - 1) for _ in range(3 * n)]
    for r in range(3):
        A[r][0] = -2
        A[3 * (n - 1) + r][3 * n - 2] = 1
    for k in range(n - 1):
        for a in range(3):
            col = 1 + 3 * k + a
            A[3 * k + a][col] = 1
            for r in range(3):
                A[3 * (k + 1) + r][col] = _P[r][a]
    return A


def m_generator(n: int) -> tuple[int, ...]:
    return tuple(4**k for k in range(n)) + ((4**n - 1) // 3,)


def n_generator(n: int) -> tuple[int, ...]:
    out = [1]
    for k in range(1, n):
        out += [2 ** (2 * k - 1)] * 3
    out.append(2 ** (2 * n - 1))
    return tuple(out)


def cubic_bound(n: int) -> int:
    return 2 * (4**n - 1) // 3


def tensor_bound(n: int) -> int:
    return 4**n - 1


# --- unit-modulus scalars --------------------------------------------------------


def unit_point(k: int) -> GaussianRational:
    """``(k + i) / (k - i)``, a Gaussian rational of modulus exactly 1."""
    return GaussianRational(k, 1) / GaussianRational(k, -1)


def make_alphas(n: int) -> list[GaussianRational]:
    """``alpha_k = (k+i)/(k-i)`` for k = 1..n.

    ``alpha_a = ±alpha_b`` would force ``a = b`` or ``ab = -1``, so these are
    distinct with ``alpha_a != -alpha_b``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return [unit_point(k) for k in range(1, n + 1)]


# --- cubic forms -------------------------------------------------------------------


def cubic_space(n: int) -> SymPower:
    labels = []
    for i in range(1, n + 1):
        labels += [f"x{i}", f"y{i}", f"z{i}"]
    return SymPower(tuple(labels), 3)


def cubic_torus(n: int) -> TorusEmbedding:
    weights = {}
    for i in range(1, n + 1):
        e = [0] * n
        e[i - 1] = 1
        weights[f"x{i}"] = tuple(e)
        weights[f"y{i}"] = tuple(e)
        weights[f"z{i}"] = tuple(-2 * x for x in e)
    return TorusEmbedding(n, weights)


def build_cubic_point(n: int, alphas: Sequence | None = None) -> RepPoint:
    """``w = (sum x_i^2 z_i, sum y_i^2 z_i, sum alpha_i x_i y_i z_i)``."""
    if n < 1:
        raise ValueError("n must be positive")
    alphas = make_alphas(n) if alphas is None else [GaussianRational.coerce(a) for a in alphas]
    if len(alphas) != n:
        raise ValueError(f"need {n} scalars, got {len(alphas)}")
    for i, a in enumerate(alphas):
        if a.norm2() != 1:
            raise ScalarConstraintViolated(f"|alpha_{i + 1}| != 1")
        for b in alphas[:i]:
            if a == b or a == -b:
                raise ScalarConstraintViolated("alpha_i = ±alpha_j for some i != j")
    S = cubic_space(n)
    w1, w2, w3 = {}, {}, {}
    for i in range(1, n + 1):
        x, y, z = f"x{i}", f"y{i}", f"z{i}"
        w1[S.monomial(**{x: 2, z: 1})] = GaussianRational(1)
        w2[S.monomial(**{y: 2, z: 1})] = GaussianRational(1)
        w3[S.monomial(**{x: 1, y: 1, z: 1})] = alphas[i - 1]
    return RepPoint(S, (Summand("w1", w1), Summand("w2", w2), Summand("w3", w3)), WeightLattice.sl(3 * n))


class Subspace(NamedTuple):
    space: SymPower | TensorProduct
    basis: tuple[BasisElement, ...]
    embedding: TorusEmbedding

    def weight_matrix(self) -> WeightMatrix:
        return weight_matrix(self.space, self.basis, self.embedding)


def build_subspace_U(n: int) -> Subspace:
    """Span of ``x1 z2^2, x2 z3^2, ..., xn z1^2, x1^3`` with the stabilizer torus."""
    if n < 2:
        raise ValueError("the subspace U needs n >= 2")
    S = cubic_space(n)
    basis = [S.monomial(**{f"x{i}": 1, f"z{i % n + 1}": 2}) for i in range(1, n + 1)]
    basis.append(S.monomial(x1=3))
    return Subspace(S, tuple(basis), cubic_torus(n))


# --- tensors -------------------------------------------------------------------------


def tensor_space(n: int) -> TensorProduct:
    return TensorProduct(
        tuple(tuple(f"{c}{a}_{k}" for k in range(1, n + 1) for a in (1, 2, 3)) for c in "uvw")
    )


def tensor_torus(n: int) -> TorusEmbedding:
    """``u1,u2 -> p``, ``u3 -> -q-r``; ``v1,v2 -> q``, ``v3 -> -p-r``; ``w1,w2 -> r``, ``w3 -> -p-q``."""
    weights = {}
    for k in range(1, n + 1):
        def vec(**c):
            v = [0] * (3 * n)
            for name, x in c.items():
                v[3 * (k - 1) + "pqr".index(name)] = x
            return tuple(v)

        weights[f"u1_{k}"] = weights[f"u2_{k}"] = vec(p=1)
        weights[f"u3_{k}"] = vec(q=-1, r=-1)
        weights[f"v1_{k}"] = weights[f"v2_{k}"] = vec(q=1)
        weights[f"v3_{k}"] = vec(p=-1, r=-1)
        weights[f"w1_{k}"] = weights[f"w2_{k}"] = vec(r=1)
        weights[f"w3_{k}"] = vec(p=-1, q=-1)
    return TorusEmbedding(3 * n, weights)


# (u, v, w) index patterns of the three terms in F_d / G_d, F_3 as printed
TENSOR_PATTERNS = {
    1: ((1, 2, 3), (2, 3, 1), (3, 1, 2)),
    2: ((2, 1, 3), (1, 3, 2), (3, 2, 1)),
    3: ((1, 1, 3), (2, 3, 2), (3, 1, 1)),
    4: ((2, 2, 3), (1, 3, 1), (3, 2, 2)),
}


def default_tensor_scalars(n: int) -> list[tuple[GaussianRational, GaussianRational, GaussianRational]]:
    """``(alpha_k, beta_k, gamma_k)`` from disjoint ranges of ``(j+i)/(j-i)``."""
    return [(unit_point(k), unit_point(n + k), unit_point(2 * n + k)) for k in range(1, n + 1)]


def build_tensor_point(n: int, scalars: Sequence | None = None) -> RepPoint:
    """``(F1, G1, F2, G2, F3, G3, F4, G4)`` in ``(U⊗V⊗W)^{⊕8}``."""
    if n < 1:
        raise ValueError("n must be positive")
    if scalars is None:
        scalars = default_tensor_scalars(n)
    scalars = [tuple(GaussianRational.coerce(s) for s in triple) for triple in scalars]
    if len(scalars) != n or any(len(t) != 3 for t in scalars):
        raise ValueError(f"need {n} triples of scalars")
    flat = [s for t in scalars for s in t]
    if any(s.norm2() != 1 for s in flat):
        raise ScalarConstraintViolated("tensor scalars must have modulus 1")
    if len(set(flat)) != len(flat):
        raise ScalarConstraintViolated("tensor scalars must be pairwise distinct")
    T = tensor_space(n)
    summands = []
    one = GaussianRational(1)
    for d in (1, 2, 3, 4):
        F, G = {}, {}
        for k in range(1, n + 1):
            for (a, b, c), coef in zip(TENSOR_PATTERNS[d], scalars[k - 1]):
                e = T.element(f"u{a}_{k}", f"v{b}_{k}", f"w{c}_{k}")
                F[e] = one
                G[e] = coef
        summands += [Summand(f"F{d}", F), Summand(f"G{d}", G)]
    return RepPoint(T, tuple(summands), WeightLattice.sl(3 * n, 3 * n, 3 * n))


def tensor_algebra(n: int) -> LieAlgebra:
    """Lie algebra of ``{(g1, g2, g3) : det g1 det g2 det g3 = 1}``."""
    return LieAlgebra((3 * n, 3 * n, 3 * n), joint_trace=True)


def build_subspace_L(n: int) -> Subspace:
    """Rank-one tensors whose weight matrix under the stabilizer torus is exactly N(n).

    Basis: ``u3^1 v3^1 w3^1``; for k = 1..n-1 the triple
    ``u1^k v3^{k+1} w3^{k+1}, u3^{k+1} v1^k w3^{k+1}, u3^{k+1} v3^{k+1} w1^k``;
    then ``u1^n v1^n w1^n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    T = tensor_space(n)
    basis = [T.element("u3_1", "v3_1", "w3_1")]
    for k in range(1, n):
        j = k + 1
        basis += [
            T.element(f"u1_{k}", f"v3_{j}", f"w3_{j}"),
            T.element(f"u3_{j}", f"v1_{k}", f"w3_{j}"),
            T.element(f"u3_{j}", f"v3_{j}", f"w1_{k}"),
        ]
    basis.append(T.element(f"u1_{n}", f"v1_{n}", f"w1_{n}"))
    return Subspace(T, tuple(basis), tensor_torus(n))


def printed_L_basis(n: int) -> Subspace:
    """The spanning set exactly as printed in the source construction.

    Kept for comparison only: its weight matrix is not N(n).
    """
    T = tensor_space(n)
    basis = [T.element("u1_1", "v1_1", "w1_1")]
    for k in range(1, n):
        j = k + 1
        basis += [
            T.element(f"u1_{j}", f"v3_{k}", f"w3_{k}"),
            T.element(f"u3_{k}", f"v1_{j}", f"w3_{k}"),
            T.element(f"u1_{k}", f"v1_{k}", f"w3_{j}"),
        ]
    basis.append(T.element(f"u3_{n}", f"v3_{n}", f"w3_{n}"))
    return Subspace(T, tuple(basis), tensor_torus(n))


# --- scenario runs --------------------------------------------------------------------


@dataclass
class Stage:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class ScenarioReport:
    scenario: str
    n: int
    expected_bound: int
    stages: list[Stage] = field(default_factory=list)
    bound: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.stages) and all(s.passed for s in self.stages) and self.bound is not None

    @property
    def failed_stage(self) -> str | None:
        return next((s.name for s in self.stages if not s.passed), None)

    def to_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "n": self.n,
            "passed": self.passed,
            "bound": self.bound,
            "expectedBound": self.expected_bound,
            "failedStage": self.failed_stage,
            "stages": [s.to_json() for s in self.stages],
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def to_markdown(self) -> str:
        lines = [f"# {self.scenario} scenario, n = {self.n}", ""]
        status = "PASS" if self.passed else f"FAIL at stage `{self.failed_stage}`"
        lines.append(f"**Result:** {status}")
        if self.bound is not None:
            lines.append(f"**Asserted lower bound:** {self.bound} (formula value {self.expected_bound})")
        lines += ["", "| stage | passed | summary |", "|---|---|---|"]
        for s in self.stages:
            summary = s.detail.get("summary", "")
            lines.append(f"| {s.name} | {'yes' if s.passed else 'no'} | {summary} |")
        if self.notes:
            lines += ["", "## Notes", ""]
            lines += [f"- {note}" for note in self.notes]
        return "\n".join(lines) + "\n"


LARGE_N_NOTE = (
    "Exponential bounds for general n are checked only at the formula level: generators of "
    "degree ~4^n are out of reach for the completion search and are computed here through the "
    "one-dimensional-kernel fast path."
)


def _annihilated_by_torus(point: RepPoint, emb: TorusEmbedding) -> bool:
    return all(
        not act(X, point.space, s.terms)
        for X in torus_directions(point.space, emb)
        for s in point.summands
    )


def _run(report: ScenarioReport, steps) -> ScenarioReport:
    """Run stages in order, stopping at the first failure."""
    ctx: dict = {}
    for name, fn in steps:
        try:
            passed, detail = fn(ctx)
        except (InvBoundsError, ValueError) as exc:
            passed, detail = False, {"summary": f"error: {exc}", "error": type(exc).__name__}
        report.stages.append(Stage(name, passed, detail))
        if not passed:
            break
    return report


def _scenario(
    scenario: str,
    n: int,
    point_fn,
    algebra: LieAlgebra,
    subspace_fn,
    expected_matrix: list[list[int]],
    expected_generator: tuple[int, ...],
    expected_bound: int,
    ambient: str,
    budget: int,
    method: str,
    notes: list[str],
) -> ScenarioReport:
    report = ScenarioReport(scenario, n, expected_bound, notes=notes)

    def point(ctx):
        ctx["point"] = p = point_fn(n)
        return True, {
            "summary": f"{len(p.summands)} summands, {sum(len(s.terms) for s in p.summands)} terms",
            "point": point_to_json(p),
        }

    def certificate(ctx):
        ctx["cert"] = cert = certify_closed_orbit(ctx["point"], mode="symbolic")
        return cert.passed, {
            "summary": f"verdict {cert.verdict}, id {cert.digest()}",
            "certificate": cert.to_json(),
        }

    def stabilizer(ctx):
        ctx["sub"] = sub = subspace_fn(n)
        check = stabilizer_check(ctx["point"], algebra)
        ctx["stab"] = check
        fixed = _annihilated_by_torus(ctx["point"], sub.embedding)
        ok = check.consistent and fixed and check.dim == sub.embedding.rank
        return ok, {
            "summary": f"dim {check.dim} (expected {sub.embedding.rank}) in an algebra of dim {check.algebra_dim}",
            "check": check.to_json(),
            "expected": sub.embedding.rank,
            "torusDirectionsAnnihilate": fixed,
            "level": "Lie algebra (identity component verified)",
        }

    def subspace(ctx):
        wm = ctx["sub"].weight_matrix()
        ctx["wm"] = wm
        roundtrip = wm.recompute() == wm.matrix
        ok = [list(r) for r in wm.matrix] == expected_matrix and roundtrip
        return ok, {
            "summary": "weight matrix equals the expected matrix" if ok else "weight matrix mismatch",
            "weightMatrix": wm.to_json(),
            "roundTrip": roundtrip,
        }

    def torus_bounds(ctx):
        rep = degree_bounds(ctx["wm"], budget=budget, method=method)
        ctx["torus"] = rep
        ok = (
            rep.generators.generators == (expected_generator,)
            and rep.beta == expected_bound
            and rep.sigma == expected_bound
        )
        return ok, {
            "summary": f"beta {rep.beta}, sigma {rep.sigma}, fast path {rep.generators.fast_path}",
            "report": rep.to_json(),
        }

    def chain(ctx):
        rep = compose_lower_bound(ctx["cert"], ctx["stab"], ctx["torus"], ambient)
        report.bound = rep.sigma
        return rep.sigma == expected_bound, {
            "summary": rep.chain["statement"],
            "chain": rep.chain,
        }

    return _run(
        report,
        [
            ("point", point),
            ("closed-orbit", certificate),
            ("stabilizer", stabilizer),
            ("subspace", subspace),
            ("torus-bounds", torus_bounds),
            ("chain", chain),
        ],
    )


def reproduce_cubic(n: int, budget: int = DEFAULT_BUDGET, method: str = "auto") -> ScenarioReport:
    """SL(3n) acting on ``S^3(C^{3n})^{⊕4}``: lower bound ``(2/3)(4^n - 1)``."""
    if n < 2:
        raise ValueError("the cubic scenario needs n >= 2")
    return _scenario(
        "cubic",
        n,
        build_cubic_point,
        LieAlgebra.sl(3 * n),
        build_subspace_U,
        build_M(n),
        m_generator(n),
        cubic_bound(n),
        f"S^3(C^{3 * n})^(+4)",
        budget,
        method,
        [LARGE_N_NOTE],
    )


def _printed_L_note(n: int) -> str:
    wm = printed_L_basis(n).weight_matrix()
    rows = [list(r) for r in wm.matrix]
    ker = kernel_basis(rows)
    if len(ker) == 1 and all(x >= 0 for x in ker[0]):
        gen = f"a single generator of degree {sum(ker[0])}"
    elif len(ker) == 1 and all(x <= 0 for x in ker[0]):
        gen = f"a single generator of degree {-sum(ker[0])}"
    else:
        gen = f"a kernel of dimension {len(ker)} (rank {rank(rows)})"
    same = rows == build_N(n)
    return (
        f"The spanning set of L as printed gives a weight matrix "
        f"{'equal' if same else 'not equal'} to N({n}), with {gen}; "
        f"this run uses a reindexed basis whose weight matrix is exactly N({n})."
    )


def reproduce_tensor(n: int, budget: int = DEFAULT_BUDGET, method: str = "auto") -> ScenarioReport:
    """``SL x SL x SL`` acting on ``(C^{3n}⊗C^{3n}⊗C^{3n})^{⊕9}``: lower bound ``4^n - 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    notes = [
        LARGE_N_NOTE,
        _printed_L_note(n),
        "F3 is taken verbatim (v1^k occurs in two of its terms); the stabilizer-dimension "
        "stage reports any disagreement with 3n.",
    ]
    return _scenario(
        "tensor",
        n,
        build_tensor_point,
        tensor_algebra(n),
        build_subspace_L,
        build_N(n),
        n_generator(n),
        tensor_bound(n),
        f"(C^{3 * n}xC^{3 * n}xC^{3 * n})^(+9)",
        budget,
        method,
        notes,
    )
