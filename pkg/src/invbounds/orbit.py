"""Closed-orbit certificates from the moment-map criterion, and Lie stabilizer dimensions.

A point ``p = sum_j p_j`` (one ``p_j`` per direct summand) has a closed orbit
when

1. the weight support of every ``p_j`` is uncramped, and
2. ``sum_j sum_lambda ||p_{j,lambda}||^2 lambda = 0`` in the weight lattice.

Basis monomials of one type share a norm under any basis-compatible form, but
the common value is unknown.  The symbolic mode therefore asks for the
weighted sum to vanish separately for each type, which settles condition 2 for
every choice of the unknown norms.  The numeric mode takes one norm per type
from the caller instead.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import MissingNorms
from .linalg import gaussian_rank, solve_homogeneous
from .reps import (
    LieAlgebra,
    RepPoint,
    TorusEmbedding,
    lie_action_matrix,
    monomial_type,
    standard_embedding,
    type_label,
    weight_of,
)
from .weights import Weight, is_uncramped, is_zero_weight

__all__ = [
    "SupportTerm",
    "support_weights",
    "ClosedOrbitCertificate",
    "certify_closed_orbit",
    "StabilizerCheck",
    "lie_stabilizer_dim",
    "stabilizer_check",
]

SYMBOLIC = "symbolic"
NUMERIC = "numeric"


@dataclass(frozen=True)
class SupportTerm:
    element: str
    weight: Weight
    norm2: Fraction
    norm_class: str


def support_weights(p: RepPoint, emb: TorusEmbedding | None = None) -> dict[str, list[SupportTerm]]:
    """Weight, ``|coefficient|^2`` and norm class of every term, grouped by summand.

    Distinct basis elements of one summand have distinct weights for the full
    diagonal torus of GL, so they are orthogonal and each term contributes its
    own ``|c|^2`` to the norm of its weight component.
    """
    emb = emb or standard_embedding(p.space)
    out = {}
    for s in p.summands:
        terms = []
        for b, c in sorted(s.terms.items(), key=lambda t: t[0].data, reverse=True):
            terms.append(
                SupportTerm(
                    p.space.label(b),
                    Weight(weight_of(p.space, b, emb), p.lattice),
                    c.norm2(),
                    type_label(monomial_type(b)),
                )
            )
        out[s.name] = terms
    return out


def _coords_json(coords) -> list:
    return [int(x) if Fraction(x).denominator == 1 else str(x) for x in coords]


@dataclass
class ClosedOrbitCertificate:
    """Audit record of one run of the closed-orbit criterion.

    ``verdict`` is ``"pass"`` when both conditions hold, ``"fail"`` when the
    criterion is definitely not met and ``"undecided"`` when the symbolic mode
    cannot settle condition 2 (several norm classes with nonzero sums).  A
    failure never means the orbit is not closed; the criterion only works in
    one direction.
    """

    mode: str
    verdict: str
    supports: dict[str, list[SupportTerm]]
    uncramped: dict[str, bool]
    class_sums: dict[str, tuple]
    class_zero: dict[str, bool]
    weighted_sum: tuple | None = None
    norms: dict[str, Fraction] | None = None
    failed_condition: int | None = None
    witness: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "verdict": self.verdict,
            "failedCondition": self.failed_condition,
            "witness": self.witness,
            "summands": [
                {
                    "name": name,
                    "uncramped": self.uncramped[name],
                    "support": [
                        {
                            "element": t.element,
                            "weight": _coords_json(t.weight.coords),
                            "norm2": str(t.norm2),
                            "class": t.norm_class,
                        }
                        for t in terms
                    ],
                }
                for name, terms in self.supports.items()
            ],
            "classSums": {k: _coords_json(v) for k, v in self.class_sums.items()},
            "classSumZero": dict(self.class_zero),
            "weightedSum": None if self.weighted_sum is None else _coords_json(self.weighted_sum),
            "norms": None if self.norms is None else {k: str(v) for k, v in self.norms.items()},
            "notes": list(self.notes),
        }

    def digest(self) -> str:
        """Stable identifier: sha256 of the canonical JSON form."""
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _normalize_norms(norms: Mapping) -> dict[str, Fraction]:
    out = {}
    for k, v in norms.items():
        key = k if isinstance(k, str) else type_label(tuple(k))
        val = Fraction(v)
        if val <= 0:
            raise ValueError(f"norm for class {key} must be positive, got {val}")
        out[key.replace(" ", "")] = val
    return out


def certify_closed_orbit(
    p: RepPoint,
    emb: TorusEmbedding | None = None,
    mode: str = SYMBOLIC,
    norms: Mapping | None = None,
) -> ClosedOrbitCertificate:
    """Check both conditions of the moment-map criterion and record the audit trail.

    ``norms`` (numeric mode only) maps norm-class labels such as ``"(2,1)"`` or
    ``"rank-one"`` to the positive squared norm of basis elements of that class.
    """
    if mode not in (SYMBOLIC, NUMERIC):
        raise ValueError(f"unknown mode {mode!r}")
    supports = support_weights(p, emb)
    dim = p.lattice.dimension

    uncramped = {}
    witness = None
    for name, terms in supports.items():
        ok, pair = is_uncramped([t.weight for t in terms])
        uncramped[name] = ok
        if not ok and witness is None:
            a, b = pair
            la = next(t.element for t in terms if t.weight is a)
            lb = next(t.element for t in terms if t.weight is b)
            witness = {
                "summand": name,
                "pair": [la, lb],
                "weights": [_coords_json(a.coords), _coords_json(b.coords)],
            }

    class_sums: dict[str, list] = {}
    for terms in supports.values():
        for t in terms:
            acc = class_sums.setdefault(t.norm_class, [Fraction(0)] * dim)
            for k, x in enumerate(t.weight.coords):
                acc[k] += t.norm2 * x
    class_sums_t = {k: tuple(v) for k, v in sorted(class_sums.items())}
    class_zero = {k: is_zero_weight(Weight(v, p.lattice)) for k, v in class_sums_t.items()}

    cert = ClosedOrbitCertificate(
        mode=mode,
        verdict="pass",
        supports=supports,
        uncramped=uncramped,
        class_sums=class_sums_t,
        class_zero=class_zero,
    )

    if mode == NUMERIC:
        if norms is None:
            raise MissingNorms("numeric mode needs a positive norm for every norm class")
        nn = _normalize_norms(norms)
        missing = [k for k in class_sums_t if k not in nn]
        if missing:
            raise MissingNorms(f"no norm supplied for classes {missing}")
        total = [Fraction(0)] * dim
        for k, v in class_sums_t.items():
            for i, x in enumerate(v):
                total[i] += nn[k] * x
        cert.norms = {k: nn[k] for k in class_sums_t}
        cert.weighted_sum = tuple(total)
        cond2 = "pass" if is_zero_weight(Weight(tuple(total), p.lattice)) else "fail"
    else:
        nonzero = [k for k, z in class_zero.items() if not z]
        if not nonzero:
            cond2 = "pass"
        elif len(nonzero) == 1:
            cond2 = "fail"
        else:
            cond2 = "undecided"
            cert.notes.append(
                "per-class sums do not vanish for classes "
                + ", ".join(nonzero)
                + "; rerun in numeric mode with the actual class norms"
            )

    if not all(uncramped.values()):
        cert.verdict = "fail"
        cert.failed_condition = 1
        cert.witness = witness
    elif cond2 != "pass":
        cert.verdict = cond2
        cert.failed_condition = 2
        if mode == SYMBOLIC:
            cert.witness = {
                "nonzeroClassSums": {
                    k: _coords_json(class_sums_t[k]) for k, z in class_zero.items() if not z
                }
            }
        else:
            cert.witness = {"weightedSum": _coords_json(cert.weighted_sum)}
    return cert


@dataclass(frozen=True)
class StabilizerCheck:
    """Dimension of ``{X : X·p = 0}`` with its rank-nullity cross-check."""

    dim: int
    algebra_dim: int
    rank_natural: int
    rank_reversed: int

    @property
    def consistent(self) -> bool:
        return (
            self.rank_natural == self.rank_reversed
            and self.dim + self.rank_natural == self.algebra_dim
        )

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "algebraDim": self.algebra_dim,
            "rankNatural": self.rank_natural,
            "rankReversed": self.rank_reversed,
            "consistent": self.consistent,
        }


def _algebra_for(p: RepPoint, algebra: LieAlgebra | None) -> LieAlgebra:
    return algebra if algebra is not None else LieAlgebra.for_space(p.space)


def lie_stabilizer_dim(p: RepPoint, algebra: LieAlgebra | None = None) -> int:
    """Nullity of the Lie action matrix of ``p`` over the Gaussian rationals."""
    algebra = _algebra_for(p, algebra)
    mat = lie_action_matrix(p, algebra)
    return solve_homogeneous(mat.rows, cols=mat.ncols).nullity


def stabilizer_check(p: RepPoint, algebra: LieAlgebra | None = None) -> StabilizerCheck:
    """Kernel dimension plus the rank under the reversed pivot order."""
    algebra = _algebra_for(p, algebra)
    mat = lie_action_matrix(p, algebra)
    sol = solve_homogeneous(mat.rows, cols=mat.ncols)
    rev = gaussian_rank(mat.rows, column_order="reversed", cols=mat.ncols)
    return StabilizerCheck(sol.nullity, mat.ncols, sol.rank, rev)
