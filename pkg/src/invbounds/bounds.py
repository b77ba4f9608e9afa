"""Degree bounds beta and sigma for torus invariant rings, and lower-bound chains.

For a torus with weight matrix ``A`` the invariant ring is the monoid algebra
of ``I(A)``, minimally generated by the monomials ``x^g`` for ``g`` in the
Hilbert basis.  So ``beta`` is the largest generator degree.

For ``sigma``: monomial zero sets depend only on supports, so the invariants
of degree ``<= D`` cut out the null cone exactly when, for every generator
``g``, some nonzero invariant of degree ``<= D`` is supported inside
``supp(g)``.  (If this fails for ``g``, the 0/1 indicator point of
``supp(g)`` is outside the null cone yet kills every low-degree invariant.
If it holds, a point outside the null cone has ``supp(x) ⊇ supp(g)`` for some
``g`` and is seen by the low-degree witness.)  Hence ``sigma`` is the maximum
over generators of the smallest invariant degree inside the generator's
support.  This is our own formalization; reports flag it as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BrokenChain
from .hilbert import DEFAULT_BUDGET, HilbertBasis, hilbert_basis

__all__ = [
    "SIGMA_CRITERION_NOTE",
    "DegreeBoundReport",
    "degree_bounds",
    "beta_bound",
    "sigma_bound",
    "compose_lower_bound",
]

SIGMA_CRITERION_NOTE = (
    "sigma computed by the support-covering criterion: max over generators g of the "
    "least degree of a nonzero invariant supported in supp(g)"
)


def _rows(A) -> tuple[list[list[int]], int | None]:
    if hasattr(A, "matrix") and hasattr(A, "basis"):
        return [list(r) for r in A.matrix], len(A.basis)
    return [list(r) for r in A], None


@dataclass
class DegreeBoundReport:
    beta: int
    sigma: int
    generators: HilbertBasis
    sigma_witnesses: list[dict]
    torus_rank: int
    chain: dict | None = None
    notes: list[str] = field(default_factory=lambda: [SIGMA_CRITERION_NOTE])

    def to_json(self) -> dict:
        out = {
            "beta": self.beta,
            "sigma": self.sigma,
            "torusRank": self.torus_rank,
            "generators": [list(g) for g in self.generators.generators],
            "fastPath": self.generators.fast_path,
            "sigmaWitnesses": self.sigma_witnesses,
            "notes": list(self.notes),
        }
        if self.chain is not None:
            out["chain"] = self.chain
        return out


def _min_witness(
    A: list[list[int]], support: list[int], m: int, budget: int, method: str
) -> tuple[int, list[int]]:
    sub = [[row[j] for j in support] for row in A]
    hb = hilbert_basis(sub, budget=budget, method=method, cols=len(support))
    # generators are sorted by degree, so the first one is a minimum
    g = hb.generators[0]
    full = [0] * m
    for j, x in zip(support, g):
        full[j] = x
    return sum(g), full


def degree_bounds(A, budget: int = DEFAULT_BUDGET, method: str = "auto") -> DegreeBoundReport:
    """Hilbert basis of ``I(A)`` together with ``beta``, ``sigma`` and the sigma witnesses."""
    rows, cols = _rows(A)
    hb = hilbert_basis(rows, budget=budget, method=method, cols=cols)
    # support subproblems may have larger kernels, so "fast" falls back to "auto" there
    sub_method = "completion" if method == "completion" else "auto"
    m = hb.cols
    witnesses = []
    sigma = 0
    for g in hb.generators:
        support = [j for j, x in enumerate(g) if x]
        d, w = _min_witness(rows, support, m, budget, sub_method)
        witnesses.append({"generator": list(g), "support": support, "minDegree": d, "witness": w})
        sigma = max(sigma, d)
    return DegreeBoundReport(hb.max_degree, sigma, hb, witnesses, len(rows))


def beta_bound(A, budget: int = DEFAULT_BUDGET) -> int:
    """Largest degree of a minimal generator of ``I(A)`` (0 if there are none)."""
    rows, cols = _rows(A)
    return hilbert_basis(rows, budget=budget, cols=cols).max_degree


def sigma_bound(A, budget: int = DEFAULT_BUDGET) -> int:
    return degree_bounds(A, budget).sigma


def compose_lower_bound(
    cert,
    stab_check,
    torus_report: DegreeBoundReport,
    ambient: str,
) -> DegreeBoundReport:
    """Chain the torus bounds up to the ambient group.

    A closed orbit with stabilizer ``H`` gives a degree non-increasing
    surjection ``C[V ⊕ W]^G -> C[W]^H``, and restricting ``W`` to an
    ``H``-subrepresentation only lowers beta and sigma.  So the ambient values
    are at least the torus values.  Any unmet precondition raises
    ``BrokenChain``; nothing weaker is ever returned.
    """
    if cert is None or not cert.passed:
        verdict = None if cert is None else cert.verdict
        raise BrokenChain(f"closed-orbit certificate did not pass (verdict {verdict})")
    if stab_check is None or not stab_check.consistent:
        raise BrokenChain("stabilizer dimension check is missing or inconsistent")
    if stab_check.dim != torus_report.torus_rank:
        raise BrokenChain(
            f"stabilizer dimension {stab_check.dim} differs from torus rank {torus_report.torus_rank}"
        )
    chain = {
        "ambient": ambient,
        "certificate": cert.digest(),
        "certificateMode": cert.mode,
        "stabilizer": stab_check.to_json(),
        "stabilizerLevel": "Lie algebra (identity component verified)",
        "torusRank": torus_report.torus_rank,
        "betaLowerBound": torus_report.beta,
        "sigmaLowerBound": torus_report.sigma,
        "statement": (
            f"beta_G({ambient}) >= sigma_G({ambient}) >= {torus_report.sigma}; "
            f"beta_G({ambient}) >= {torus_report.beta}"
        ),
    }
    return DegreeBoundReport(
        torus_report.beta,
        torus_report.sigma,
        torus_report.generators,
        torus_report.sigma_witnesses,
        torus_report.torus_rank,
        chain=chain,
        notes=list(torus_report.notes),
    )
