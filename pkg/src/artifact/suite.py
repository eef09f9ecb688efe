"""The acceptance checks as runnable functions.

Each check returns a Check(label, passed, detail). The CLI verb
suite-all and tests/test_acceptance.py both run them.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import affine as af
from . import heis as H
from . import palgebra as P
from . import partition_core as pc
from . import schur_weyl as sw


@dataclass
class Check:
    label: str
    passed: bool
    detail: dict = field(default_factory=dict)


def _diagram(k, blocks):
    return pc.Diagram(k, tuple(tuple(b) for b in blocks))


def _element(k, terms):
    """terms: [(coef, blocks)] with coef an int or "z"."""
    out = P.PAElement.zero(k)
    for c, blocks in terms:
        d = P.PAElement.diagram(_diagram(k, blocks))
        out = out + (d * P.zvar(k) if c == "z" else d * c)
    return out


# Transcribed diagram expansions of the first nontrivial JM elements and
# Enyang generators. Vertices: +i top, -i bottom.
JM_FIXTURES = {
    ("L", 3, 2): [(-1, [[-1, -2, 2], [1]]), (-1, [[1, 2, -2], [-1]]),
                  ("z", [[1, 2, -1, -2]]), (1, [[1, -1], [2, -2]])],
    ("L", 4, 2): [(1, [[1, -1], [2], [-2]]), (-1, [[1, -1, -2], [2]]),
                  (-1, [[1, 2, -1], [-2]]), (1, [[1, 2], [-1, -2]]),
                  (1, [[1, -2], [2, -1]])],
    ("sigma", 4, 3): [(1, [[1, -1], [2, -2], [3, -3]]), (1, [[1, 2, -2], [-1, -3, 3]]),
                      (1, [[1, 3, -3], [-1, -2, 2]]), (-1, [[1, 2, -2, -1], [3, -3]]),
                      (-1, [[1, 3, -3, -1], [2, -2]])],
    ("sigma", 5, 3): [(1, [[1, -1], [2, -3], [3, -2]]), (1, [[1, -2, 3], [-1, 2, -3]]),
                      (1, [[1, 2, -3], [-1, -2, 3]]), (-1, [[1, -1, -2, 3], [2, -3]]),
                      (-1, [[1, -1, 2, -3], [-2, 3]])],
}

WORKED_PRODUCT = {
    "alpha": [[1, 2, -2, 3], [-3], [-1, 4, -4], [5, -5]],
    "beta": [[1, -1, -2], [2, -4], [3], [4], [5, -3, -5]],
    "result": [[1, 2, 3, -4], [4, -1, -2], [5, -3, -5]],
    "middle": 1,
}


def _timed(fn):
    def run(*a, **kw):
        t = time.perf_counter()
        chk = fn(*a, **kw)
        chk.detail["seconds"] = round(time.perf_counter() - t, 3)
        return chk
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def worked_product():
    a = _diagram(5, WORKED_PRODUCT["alpha"])
    b = _diagram(5, WORKED_PRODUCT["beta"])
    r = pc.compose(a, b)
    ok = r.diagram == _diagram(5, WORKED_PRODUCT["result"]) and r.middle_components == WORKED_PRODUCT["middle"]
    return Check("1 worked product", ok, {"diagram": repr(r.diagram), "middle": r.middle_components})


@_timed
def dimension_counts():
    counts = {r: len(pc.enumerate_diagrams(r)) for r in (2, 3, 4, 6)}
    sim = {"(ud)^2": len(H.simple_diagrams(H.up_down(2), H.up_down(2))),
           "ud,duud": len(H.simple_diagrams(H.word("ud"), H.word("duud")))}
    ok = counts == {2: 2, 3: 5, 4: 15, 6: 203} and sim == {"(ud)^2": 24, "ud,duud": 6}
    return Check("2 dimension counts", ok, {"bell": counts, "simple": sim})


@_timed
def presentations(k=3):
    fails = []
    total = 0
    runs = [("HR", k, None), ("Enyang", k, None), ("AffPrep", k, None),
            ("AffPrep", k + 1, [1, 2, 3, 4, 5, 6])]
    for name, kk, groups in runs:
        for label, ok in P.verify_suite(name, kk, groups):
            total += 1
            if not ok:
                fails.append(f"{name} k={kk} {label}")
    return Check("3 presentations", not fails, {"instances": total, "failures": fails})


@_timed
def jm_examples():
    fails = []
    for (kind, i, k), terms in JM_FIXTURES.items():
        got = P.jm_L(i, k) if kind == "L" else P.enyang_sigma(i, k)
        if got != _element(k, terms):
            fails.append(f"{kind}{i}")
    return Check("4 JM examples", not fails, {"failures": fails})


@_timed
def schur_weyl_checks(n_max=4, k=3):
    fails = []
    done = 0
    for n in range(1, n_max + 1):
        for kk in (1, 2):
            for label, l, r in P.relation_table("HR", kk):
                M = sw.trivial_module(n)
                done += 1
                if sw.evaluate_psi_M(l, n, kk, M) != sw.evaluate_psi_M(r, n, kk, M):
                    fails.append(f"HR n={n} k={kk} {label}")
    for n in range(1, n_max + 1):
        for kk in (1, 2):
            done += 4 * kk - 2
            for i in range(2, 2 * kk):
                if sw.psi(f"t{i}", n, kk) != sw.psi_element(P.norm_t(i, kk), n):
                    fails.append(f"t{i} n={n} k={kk}")
            for i in range(1, 2 * kk + 1):
                if sw.psi(f"x{i}", n, kk) != sw.psi_element(P.norm_X(i, kk), n):
                    fails.append(f"X{i} n={n} k={kk}")
    for label, l, r in P.relation_table("AffPrep", k, groups=[7]):
        done += 1
        if not sw.certify_identity(l, r, k):
            fails.append(f"certify {label}")
    return Check("5 Schur-Weyl", not fails, {"checks": done, "failures": fails})


@_timed
def affine_suite(k=2, k_big=3):
    fails = []
    rows = af.verify_relations(k)
    rows += af.verify_relations(k_big, targets=("pr", "tensor"), regular_n=())
    for label, target, ok in rows:
        if not ok:
            fails.append(f"{label} [{target}]")
    return Check("6 affine relation suite", not fails, {"checks": len(rows), "failures": fails})


@_timed
def embedding(samples=100, seed=0):
    ok = all(af.roundtrip_check(k, samples=samples, seed=seed + k) for k in (1, 2, 3))
    return Check("7 embedding", ok, {"samples_per_k": samples})


@_timed
def centrality(k=2, k_jm=3):
    fails = []
    evs = af.evaluators(k)
    gens = af.generators(k)
    for m in (1, 2):
        p = af.power_sum(m, k)
        for name, ev in evs:
            pv = ev(p)
            for g in gens:
                gv = ev(g)
                if pv * gv != gv * pv:
                    fails.append(f"p{m} {g!r} [{name}]")
    for kk in range(1, k_jm + 1):
        total = P.PAElement.zero(kk)
        for i in range(1, 2 * kk + 1):
            total = total + P.jm_L(i, kk)
        if not P.central_check(total):
            fails.append(f"sum L k={kk}")
    return Check("8 centrality", not fails, {"failures": fails})


@_timed
def independence():
    vecs = sw.witness_vectors(3, 5)
    rank = sw.exact_rank(vecs)
    ok = sw.witness_independence(3, k=2, n=5) and rank == 4
    return Check("9 independence witness", ok, {"rank": rank})


def _random_phi_word(k, rng, length):
    return af.random_word(k, length, rng, lmax=2)


@_timed
def heis_engine(confluence_samples=200, orders=5, seed=0, k_max=3):
    fails = []
    curls = H.left_curl_family(50)
    nonzero = [i for i, sd in enumerate(curls) if H.reduce(sd).terms]
    if nonzero:
        fails.append(f"left curls not zero: {nonzero}")
    if H.reduce(H.circle(clockwise=False)) != H.HeisMorphism.identity(()):
        fails.append("ccw circle")
    for k in range(1, k_max + 1):
        for inst in af.relations(k):
            if af.eval_phi(inst.lhs) != af.eval_phi(inst.rhs):
                fails.append(f"phi k={k} {inst.label}")
    rng = random.Random(seed)
    for idx in range(confluence_samples):
        k = 1 + idx % 2
        toks = list(_random_phi_word(k, rng, rng.randint(2, 6)).terms)[0]
        ref = H.phi_word(toks, k)
        for o in range(orders):
            eng = H.Engine(rng=random.Random(1000 * idx + o))
            if H.phi_word(toks, k, eng) != ref:
                fails.append(f"confluence {' '.join(toks)}")
                break
    return Check("10 Heisenberg engine", not fails,
                 {"left_curls": len(curls), "confluence_words": confluence_samples, "failures": fails})


@_timed
def surjectivity(k=2):
    w = H.up_down(k)
    fails = []
    diagrams = H.simple_diagrams(w, w)
    planar = H.planar_diagrams(k)
    for d in diagrams + planar:
        if af.eval_phi(H.decompose_endo(d)) != H.HeisMorphism.basis(d):
            fails.append(repr(d))
    return Check("11 surjectivity round trip", not fails,
                 {"simple": len(diagrams), "planar": len(planar), "failures": fails})


@_timed
def cross_oracle(samples=100, seed=1, n=4, module="V", k=2):
    rng = random.Random(seed)
    M = sw.stock_module(module, n)
    fails = []
    for _ in range(samples):
        u = af.random_word(k, rng.randint(1, 6), rng, lmax=3)
        pre = H.preimage(af.eval_phi(u))
        if af.eval_psi_M(pre, n, M) != af.eval_psi_M(u, n, M):
            fails.append(repr(u))
    return Check("12 cross-oracle", not fails, {"samples": samples, "failures": fails})


ALL = (worked_product, dimension_counts, presentations, jm_examples, schur_weyl_checks,
       affine_suite, embedding, centrality, independence, heis_engine, surjectivity,
       cross_oracle)


def run_all(k=3, n_max=4):
    """Every acceptance check; k caps the size used by the k-dependent ones."""
    out = [worked_product(), dimension_counts(), presentations(min(k, 3)), jm_examples(),
           schur_weyl_checks(n_max, min(k, 3)), affine_suite(min(k, 2), min(k, 3)),
           embedding(), centrality(min(k, 2), min(k, 3)), independence(),
           heis_engine(k_max=min(k, 3)), surjectivity(), cross_oracle(n=n_max)]
    return out
