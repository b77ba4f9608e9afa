from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invbounds.errors import MissingNorms
from invbounds.linalg import GaussianRational
from invbounds.orbit import certify_closed_orbit, lie_stabilizer_dim, stabilizer_check, support_weights
from invbounds.reps import LieAlgebra, RepPoint, Summand, SymPower, TensorProduct, monomial_type, type_label
from invbounds.reproduce import build_cubic_point, build_tensor_point, tensor_algebra
from invbounds.weights import WeightLattice

S3 = SymPower(("x1", "x2", "x3"), 3)


def point(*summands):
    return RepPoint(S3, tuple(Summand(f"p{k}", t) for k, t in enumerate(summands)))


def test_support_weights_of_w1():
    p = build_cubic_point(2)
    terms = support_weights(p)["w1"]
    assert [t.element for t in terms] == ["x1^2*z1", "x2^2*z2"]
    assert [t.weight.coords for t in terms] == [(2, 0, 1, 0, 0, 0), (0, 0, 0, 2, 0, 1)]
    assert all(t.norm2 == 1 and t.norm_class == "(2,1)" for t in terms)


def test_support_weights_single_term():
    (t,) = support_weights(point({S3.monomial(x1=3): 5}))["p0"]
    assert t.weight.coords == (3, 0, 0)
    assert t.norm2 == 25
    assert t.norm_class == "(3)"


def test_support_weights_tensor():
    p = build_tensor_point(1)
    terms = support_weights(p)["F1"]
    assert len(terms) == 3
    assert all(t.norm2 == 1 and t.norm_class == "rank-one" for t in terms)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cubic_point_certified(n):
    cert = certify_closed_orbit(build_cubic_point(n))
    assert cert.verdict == "pass"


@pytest.mark.parametrize("n", [1, 2])
def test_tensor_point_certified(n):
    assert certify_closed_orbit(build_tensor_point(n)).passed


def test_highest_weight_vector_fails_condition_two():
    cert = certify_closed_orbit(point({S3.monomial(x1=3): 1}))
    assert cert.verdict == "fail"
    assert cert.failed_condition == 2
    assert cert.class_sums["(3)"] == (3, 0, 0)
    assert cert.witness == {"nonzeroClassSums": {"(3)": [3, 0, 0]}}


def test_cramped_support_fails_condition_one():
    cert = certify_closed_orbit(point({S3.monomial(x1=3): 1, S3.monomial(x1=2, x2=1): 1}))
    assert cert.verdict == "fail"
    assert cert.failed_condition == 1
    assert cert.witness["pair"] == ["x1^3", "x1^2*x2"]
    assert cert.witness["weights"] == [[3, 0, 0], [2, 1, 0]]


def mixed_classes():
    return point({S3.monomial(x1=2, x2=1): 1}, {S3.monomial(x1=1, x2=2): 1}, {S3.monomial(x3=3): 1})


def test_symbolic_undecided_then_numeric():
    p = mixed_classes()
    cert = certify_closed_orbit(p)
    assert cert.verdict == "undecided"
    assert cert.notes
    assert certify_closed_orbit(p, mode="numeric", norms={"(2,1)": 1, "(3)": 1}).passed
    bad = certify_closed_orbit(p, mode="numeric", norms={"(2,1)": 1, "(3)": 3})
    assert bad.verdict == "fail" and bad.failed_condition == 2


def test_numeric_requires_norms():
    with pytest.raises(MissingNorms):
        certify_closed_orbit(mixed_classes(), mode="numeric")
    with pytest.raises(MissingNorms):
        certify_closed_orbit(mixed_classes(), mode="numeric", norms={"(3)": 1})


def test_digest_deterministic():
    a = certify_closed_orbit(build_cubic_point(2))
    b = certify_closed_orbit(build_cubic_point(2))
    assert a.digest() == b.digest()
    assert a.to_json() == b.to_json()


coef = st.builds(GaussianRational, st.integers(-2, 2), st.integers(-2, 2)).filter(bool)
terms = st.dictionaries(st.sampled_from(S3.basis()), coef, min_size=1, max_size=3)
points = st.lists(terms, min_size=1, max_size=3).map(lambda ts: point(*ts))


def cyclic_point(monomials, units):
    # each monomial together with its two cyclic shifts, one singleton summand per term
    from invbounds.reps import BasisElement

    summands = []
    for b, c in zip(monomials, units):
        for r in range(3):
            e = b.data[-r:] + b.data[:-r] if r else b.data
            summands.append({BasisElement(b.kind, e): c})
    return point(*summands)


unit = st.integers(-4, 4).map(lambda k: GaussianRational(k, 1) / GaussianRational(k, -1))
balanced = st.lists(st.sampled_from(S3.basis()), min_size=1, max_size=3, unique=True).flatmap(
    lambda ms: st.lists(unit, min_size=len(ms), max_size=len(ms)).map(lambda us: cyclic_point(ms, us))
)
norm_maps = st.fixed_dictionaries(
    {k: st.fractions(Fraction(1, 10), 10) for k in ("(3)", "(2,1)", "(1,1,1)")}
)


@settings(max_examples=80, deadline=None)
@given(st.one_of(points, balanced), norm_maps)
def test_symbolic_pass_implies_numeric_pass(p, norms):
    if certify_closed_orbit(p).passed:
        assert certify_closed_orbit(p, mode="numeric", norms=norms).passed


@given(balanced)
def test_cyclic_orbits_pass(p):
    assert certify_closed_orbit(p).passed


@settings(max_examples=80, deadline=None)
@given(points, coef)
def test_verdict_invariant_under_scaling(p, c):
    scaled = RepPoint(p.space, tuple(Summand(s.name, {b: x * c for b, x in s.terms.items()}) for s in p.summands))
    assert certify_closed_orbit(scaled).verdict == certify_closed_orbit(p).verdict


@settings(max_examples=60, deadline=None)
@given(points, st.permutations([0, 1, 2]))
def test_verdict_invariant_under_relabelling(p, perm):
    from invbounds.reps import BasisElement

    def move(b):
        e = [0, 0, 0]
        for k, x in enumerate(b.data):
            e[perm[k]] = x
        return BasisElement(b.kind, tuple(e))

    q = RepPoint(p.space, tuple(Summand(s.name, {move(b): x for b, x in s.terms.items()}) for s in p.summands))
    assert certify_closed_orbit(q).verdict == certify_closed_orbit(p).verdict


@settings(max_examples=60, deadline=None)
@given(points)
def test_class_labels_match_types(p):
    cert = certify_closed_orbit(p)
    for s in p.summands:
        for b in s.terms:
            assert type_label(monomial_type(b)) in cert.class_sums


def test_stabilizer_examples():
    assert lie_stabilizer_dim(build_cubic_point(2)) == 2
    assert lie_stabilizer_dim(build_tensor_point(1), tensor_algebra(1)) == 3
    zero = RepPoint(SymPower(("a", "b"), 2), (Summand("z", {}),))
    assert lie_stabilizer_dim(zero, LieAlgebra.sl(2)) == 3


def test_stabilizer_of_w_n1_is_one():
    chk = stabilizer_check(build_cubic_point(1))
    assert chk.dim == 1 and chk.consistent


def test_stabilizer_check_json():
    chk = stabilizer_check(build_cubic_point(1))
    assert chk.to_json() == {
        "dim": 1,
        "algebraDim": 8,
        "rankNatural": 7,
        "rankReversed": 7,
        "consistent": True,
    }


def test_stabilizer_of_generic_tensor_in_small_space():
    # the unit tensor sum e_i⊗e_i⊗e_i in (C^2)^⊗3 has a 2-dim torus stabilizer in sl2^3
    T = TensorProduct((("a1", "a2"), ("b1", "b2"), ("c1", "c2")))
    p = RepPoint(
        T,
        (Summand("t", {T.element("a1", "b1", "c1"): 1, T.element("a2", "b2", "c2"): 1}),),
        WeightLattice.sl(2, 2, 2),
    )
    assert lie_stabilizer_dim(p) == 2
