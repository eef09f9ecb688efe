import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact import palgebra as P
from artifact import partition_core as pc
from artifact.poly import Poly
from conftest import diagrams

z = Poly.z()


@st.composite
def elements(draw, k):
    terms = draw(st.lists(st.tuples(diagrams(k=k), st.integers(-3, 3), st.integers(0, 2)),
                          min_size=0, max_size=4))
    out = P.PAElement.zero(k)
    for d, c, deg in terms:
        out = out + P.PAElement.diagram(d, Poly([0] * deg + [c]))
    return out


def brute_mul(a, b):
    """Term by term: compose and scale by z^m, no shortcuts."""
    out = {}
    for d1, p1 in a.terms.items():
        for d2, p2 in b.terms.items():
            r = pc.compose(d1, d2)
            out[r.diagram] = out.get(r.diagram, Poly()) + p1 * p2 * Poly.z(r.middle_components)
    return {d: p for d, p in out.items() if p}


def test_basic_products():
    e1 = P.e(1, 1)
    assert e1 * e1 == P.zvar(1) * e1
    assert P.one(2) * P.s(1, 2) == P.s(1, 2)
    assert P.e(1, 2) * P.e(3, 2) == P.e(3, 2) * P.e(1, 2)


def test_star_examples():
    assert P.s(1, 2).star() == P.s(1, 2)
    assert P.jm_L(4, 2).star() == P.jm_L(4, 2)


def test_jm_small():
    assert P.jm_L(1, 2) == P.PAElement.zero(2)
    assert P.jm_L(2, 2) == P.e(1, 2)
    assert P.enyang_sigma(3, 2) == P.s(1, 2)
    with pytest.raises((IndexError, ValueError)):
        P.jm_L(5, 2)


def test_normalized():
    assert P.norm_X(1, 2) == P.one(2) * (z - 1)
    assert P.norm_t(3, 2) == P.s(1, 2) - P.e(2, 2)
    for k in (2, 3):
        for i in range(1, k):
            s = P.s(i, k)
            assert s * P.norm_t(2 * i, k) == P.norm_t(2 * i + 1, k)
            assert P.norm_t(2 * i, k) * s == P.norm_t(2 * i + 1, k)


def test_named_relation_instances():
    k = 2
    e1, X1 = P.e(1, k), P.norm_X(1, k)
    assert e1 * X1 * X1 * e1 == e1 * (z * (z - 1) * (z - 1))
    s1 = P.s(1, k)
    assert s1 * s1 == P.one(k)
    k = 3
    t3, t4, e2 = P.norm_t(3, k), P.norm_t(4, k), P.e(2, k)
    assert t3 * t4 * t3 == t4 - e2 * t4 - t4 * e2


@pytest.mark.parametrize("name", P.SUITES)
@pytest.mark.parametrize("k", [2, 3])
def test_suites_hold(name, k):
    rows = P.verify_suite(name, k)
    assert rows
    assert [lab for lab, ok in rows if not ok] == []


def test_affprep_k4_light_groups():
    rows = P.verify_suite("AffPrep", 4, [1, 2, 3, 4, 5, 6])
    assert all(ok for _, ok in rows)


def test_suite_index_policy():
    labels = [lab for lab, _, _ in P.relation_table("AffPrep", 2)]
    assert not any(lab.startswith("(7)(iii)") for lab in labels)
    labels = [lab for lab, _, _ in P.relation_table("AffPrep", 3)]
    assert any(lab.startswith("(7)(iii)") for lab in labels)
    with pytest.raises(ValueError):
        P.relation_table("nope", 2)


def test_central_check():
    k = 2
    assert P.central_check(P.power_sum(1, k))
    total = P.PAElement.zero(k)
    for i in range(1, 2 * k + 1):
        total = total + P.jm_L(i, k)
    assert P.central_check(total)
    assert not P.central_check(P.e(1, k))


def test_specialize():
    e1 = P.e(1, 2)
    assert P.specialize(P.zvar(2) * e1, 3).terms == {pc.e(1, 2): 3}
    X1 = P.norm_X(1, 2)
    for n in range(2, 6):
        assert P.specialize(e1 * X1 * X1 * e1, n).terms == {pc.e(1, 2): n * (n - 1) ** 2}
    assert P.specialize(e1 * X1 * X1 * e1, 1).terms == {}


def _spec_mul(a, b, delta):
    out = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            r = pc.compose(d1, d2)
            out[r.diagram] = out.get(r.diagram, 0) + c1 * c2 * delta ** r.middle_components
    return {d: c for d, c in out.items() if c}


@given(elements(2), elements(2), st.integers(-3, 5))
def test_specialize_multiplicative(a, b, delta):
    assert P.specialize(a * b, delta).terms == _spec_mul(P.specialize(a, delta), P.specialize(b, delta), delta)


@given(elements(3), elements(3))
def test_mul_matches_brute_force(a, b):
    assert (a * b).terms == brute_mul(a, b)


@given(elements(3), elements(3))
def test_star_antihomomorphism(a, b):
    assert (a * b).star() == b.star() * a.star()


@given(elements(2), elements(2), elements(2))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(2))
def test_json_roundtrip(a):
    assert P.PAElement.from_json(a.to_json()) == a


@pytest.mark.parametrize("k", [2, 3])
def test_jm_commute(k):
    L = [P.jm_L(i, k) for i in range(1, 2 * k + 1)]
    for a in L:
        for b in L:
            assert a * b == b * a


@pytest.mark.parametrize("k", [2, 3])
def test_star_fixes_named_elements(k):
    for i in range(1, 2 * k + 1):
        assert P.jm_L(i, k).star() == P.jm_L(i, k)
        assert P.norm_X(i, k).star() == P.norm_X(i, k)
    for i in range(2, 2 * k):
        assert P.enyang_sigma(i, k).star() == P.enyang_sigma(i, k)
        assert P.norm_t(i, k).star() == P.norm_t(i, k)


def _sub_diagrams(r, k):
    return [P.PAElement.diagram(pc.embed(d, k)) for d in pc.enumerate_diagrams(r)]


@pytest.mark.parametrize("k", [2, 3])
def test_jm_centralize_smaller_algebra(k):
    for i in range(2, 2 * k + 1):
        sub = _sub_diagrams(i - 1, k)
        L = P.jm_L(i, k)
        assert all(L * d == d * L for d in sub)
        if i + 1 <= 2 * k - 1:
            sig = P.enyang_sigma(i + 1, k)
            assert all(sig * d == d * sig for d in sub)
