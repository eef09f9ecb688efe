import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact import affine as af
from artifact import heis as H
from artifact import palgebra as P
from artifact import schur_weyl as sw
from artifact.hecke import HeckeElement, HeckeTensorElement
from artifact.poly import Poly
from artifact.words import ParseError

A = af.AffineElement.parse
z = Poly.z()


def test_relation_counts_frozen():
    assert len(af.relations(2, include_derived=False)) == 75
    assert len(af.relations(2)) == 100
    assert len(af.relations(3, include_derived=False)) == 170


def test_tau3_e2_is_zero():
    labels = {i.label: i for i in af.relations(2)}
    for side in ("left", "right"):
        inst = labels[f"rel (3)(iii) i=1 {side}"]
        assert inst.rhs == af.AffineElement(2)
    for ev in (af.eval_pr, af.eval_f_lambda):
        assert ev(A("t3 e2", 2)) == ev(af.AffineElement(2))
        assert ev(A("e2 t3", 2)) == ev(af.AffineElement(2))
    assert af.eval_phi(A("t3 e2", 2)) == H.HeisMorphism.zero(H.up_down(2), H.up_down(2))


def test_illegal_tokens():
    for bad in ("t1", "t4", "e4", "x5", "s2", "q1"):
        with pytest.raises(ValueError):
            A(bad, 2)
    with pytest.raises(ParseError):
        A("e1 +* e2", 2)


def test_eval_pr_examples():
    assert af.eval_pr(A("x1", 2)) == P.one(2) * (z - 1)
    assert af.eval_pr(A("t4 t5 + e4", 3)) == P.s(2, 3)
    for l in range(3):
        assert af.eval_pr(A(f"z{l}", 2)) == P.one(2) * (z * (z - 1) ** l)


def test_iota():
    assert af.eval_iota("e1", 2) == A("e1", 2)
    assert af.eval_pr(af.eval_iota("s1", 2)) == P.s(1, 2)
    expected = P.s(1, 3) * P.e(2, 3) * P.s(1, 3)
    assert af.eval_pr(af.eval_iota("s1 e2 s1", 3)) == expected
    for k in (1, 2, 3):
        assert af.roundtrip_check(k, samples=100, seed=k)


def test_f_lambda():
    one = HeckeElement.one(2)
    assert af.eval_f_lambda(A("e3", 2)) == HeckeTensorElement(2)
    assert af.eval_f_lambda(A("z2", 2)) == HeckeTensorElement.one(2) * 3
    assert af.eval_f_lambda(A("z1", 2), lam=[5, 7]) == HeckeTensorElement.one(2) * 7
    assert af.eval_f_lambda(A("x1", 2)) == HeckeTensorElement.pure(one, HeckeElement.y(1, 2) * -1)
    ev = af.f_lambda_map(2)
    for inst in af.relations(2):
        if inst.label.startswith("rel (8)(ii)"):
            assert ev(inst.lhs) == ev(inst.rhs)


def test_polynomial_subalgebra_independent():
    import itertools
    keys = set()
    for alpha in itertools.product(range(3), repeat=4):
        word = " ".join(f"x{r + 1}^{a}" for r, a in enumerate(alpha) if a) or "1"
        img = af.eval_f_lambda(A(word, 2))
        assert len(img.terms) == 1
        keys.add(next(iter(img.terms)))
    assert len(keys) == 81


def test_psi_examples():
    n = 4
    for M in (sw.regular_module(3), sw.permutation_module(n)):
        nn = M.n
        op = af.eval_psi_M(A("x1 e2 e1", 2), nn, M)
        T = sw.T_element(nn, 2)
        for a0 in range(M.dim):
            out = op.apply({(a0, (1, 2)): 1})
            want = {(j, (2, 2)): c for j, c in M.act_group(T, a0).items()}
            assert out == want
    triv = sw.trivial_module(n)
    assert af.eval_psi_M(A("z0", 2), n, triv) == sw.TensorOperator.identity(n, 2, triv) * n


def test_phi_examples():
    w = H.up_down(2)
    for l in range(3):
        assert af.eval_phi(A(f"z{l}", 2)) == H.HeisMorphism(w, w, {((l,), H.BasisDiagram.identity(w)): 1})
    assert af.eval_phi(A("t2 t2", 2)) == af.eval_phi(A("1 - e2", 2))
    for l in range(4):
        assert af.eval_phi(A(f"e1 x1^{l} e1", 2)) == af.eval_phi(A(f"z{l} e1", 2))


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("method", ["recursive", "direct"])
def test_express_tau(k, method):
    targets = ["pr", "hecke", "tensor"] + (["heis"] if k == 2 else [])
    evs = af.evaluators(k, targets, n_values=(4,), modules=("V",), regular_n=())
    for i in range(2, 2 * k):
        expr = af.express_tau(i, k, method)
        assert not any(tok.startswith("t") for w in expr.terms for tok in w)
        tau = A(f"t{i}", k)
        for name, ev in evs:
            assert ev(expr) == ev(tau), (i, name)
    with pytest.raises(IndexError):
        af.express_tau(2 * k, k)


def test_express_tau_heis_k3():
    ev = af.phi_map(3)
    for i in range(2, 6):
        assert ev(af.express_tau(i, 3)) == ev(A(f"t{i}", 3))


def test_star_relations_hold():
    evs = af.evaluators(2, n_values=(3,), regular_n=())
    for inst in af.relations(2):
        ls, rs = inst.lhs.star(), inst.rhs.star()
        for name, ev in evs:
            assert ev(ls) == ev(rs), (inst.label, name)


def test_power_sum_central_k3_pr():
    ev = af.pr_map(3)
    for m in (1, 2):
        p = ev(af.power_sum(m, 3))
        for g in af.generators(3):
            gv = ev(g)
            assert p * gv == gv * p


def test_json_roundtrip():
    u = A("2 t2 e1 - 1/2 x3^2 z1 + 3", 2)
    assert af.AffineElement.from_json(u.to_json(), 2) == u


@given(st.integers(0, 10 ** 6), st.integers(1, 5), st.sampled_from([2, 3, 4]), st.sampled_from(["trivial", "V"]))
def test_basis_soundness_oracle(seed, length, n, module):
    """Words with the same normal form act identically on tensor space."""
    rng = random.Random(seed)
    u = af.random_word(2, length, rng)
    pre = H.preimage(af.eval_phi(u))
    M = sw.stock_module(module, n)
    assert af.eval_psi_M(pre, n, M) == af.eval_psi_M(u, n, M)
