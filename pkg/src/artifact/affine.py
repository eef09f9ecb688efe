"""The affine partition algebra as a presented algebra.

Elements are formal combinations of words in tau_i (token t{i}), e_j, x_r
and z_l. Equality is only ever tested through homomorphisms; one
substitution engine evaluates words given a table of generator images.
The token s{j} is shorthand for t{2j} t{2j+1} + e{2j}.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import palgebra as pa
from . import relations as rel
from . import schur_weyl as sw
from .hecke import HeckeElement, HeckeTensorElement
from .words import LinComb, format_lincomb, parse, split_token


def check_token(tok, k):
    name, i = split_token(tok)
    ok = {
        "t": lambda: i is not None and 2 <= i <= 2 * k - 1,
        "e": lambda: i is not None and 1 <= i <= 2 * k - 1,
        "x": lambda: i is not None and 1 <= i <= 2 * k,
        "z": lambda: i is not None and i >= 0,
        "s": lambda: i is not None and 1 <= i <= k - 1,
    }.get(name)
    if ok is None or not ok():
        raise ValueError(f"illegal generator {tok!r} for k={k}")


class AffineElement:
    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        self.terms = LinComb({w: Fraction(c) for w, c in (terms or {}).items() if c})
        for w in self.terms:
            for tok in w:
                check_token(tok, k)

    @classmethod
    def parse(cls, expr, k):
        return cls(k, parse(expr))

    @classmethod
    def word(cls, tokens, k):
        return cls(k, {tuple(tokens): 1})

    @classmethod
    def one(cls, k):
        return cls(k, {(): 1})

    def __add__(self, other):
        if not isinstance(other, AffineElement):
            other = AffineElement.one(self.k) * other
        return AffineElement(self.k, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return AffineElement(self.k, -self.terms)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AffineElement):
            return AffineElement(self.k, self.terms * other.terms)
        return AffineElement(self.k, self.terms * other)

    def __rmul__(self, c):
        return AffineElement(self.k, LinComb.scalar(c) * self.terms)

    def __eq__(self, other):
        """Formal equality of word combinations (not equality in the algebra)."""
        return isinstance(other, AffineElement) and self.k == other.k and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def star(self):
        """The anti-automorphism fixing every generator: reverse each word."""
        return AffineElement(self.k, self.terms.star())

    def to_json(self):
        return [[str(c) if Fraction(c).denominator != 1 else int(c), list(w)]
                for w, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data, k):
        t = LinComb()
        for c, w in data:
            t = t + LinComb({tuple(w): Fraction(c)})
        return cls(k, t)

    def __repr__(self):
        return format_lincomb(self.terms)


AffineGenerator = str


@dataclass(frozen=True)
class RelationInstance:
    label: str
    lhs: AffineElement
    rhs: AffineElement


class Substitution:
    """Evaluate words given images of t, e, x, z tokens; s is expanded."""

    def __init__(self, image, one):
        self.image = image
        self.one = one
        self.cache = {}

    def gen(self, tok):
        if tok not in self.cache:
            name, i = split_token(tok)
            if name == "s":
                val = self.gen(f"t{2*i}") * self.gen(f"t{2*i+1}") + self.gen(f"e{2*i}")
            else:
                val = self.image(tok)
            self.cache[tok] = val
        return self.cache[tok]

    def __call__(self, a):
        terms = a.terms if isinstance(a, AffineElement) else a
        prefix = {(): self.one}

        def prod(word):
            if word not in prefix:
                prefix[word] = prod(word[:-1]) * self.gen(word[-1])
            return prefix[word]
        total = self.one * 0
        for w in sorted(terms, key=lambda w: (len(w), w)):
            total = total + prod(w) * terms[w]
        return total


def _as_element(a, k):
    if isinstance(a, AffineElement):
        return a
    return AffineElement.parse(a, k)


def pr_map(k):
    return Substitution(lambda tok: pa.generator(tok, k), pa.one(k))


def eval_pr(a, k=None):
    a = _as_element(a, k)
    return pr_map(a.k)(a)


def default_lambda(l):
    return l + 1


def f_lambda_map(k, lam=None):
    lam = lam or default_lambda
    H = HeckeElement
    one = H.one(k)

    def image(tok):
        name, i = split_token(tok)
        if name == "t":
            if i % 2:
                return HeckeTensorElement.pure(H.s(i // 2, k), one)
            return HeckeTensorElement.pure(one, H.s(i // 2, k))
        if name == "e":
            return HeckeTensorElement(k)
        if name == "x":
            if i % 2:
                return HeckeTensorElement.pure(one, H.y((i + 1) // 2, k) * -1)
            return HeckeTensorElement.pure(H.y(i // 2, k), one)
        if name == "z":
            return HeckeTensorElement.one(k) * Fraction(lam(i))
        raise ValueError(tok)
    return Substitution(image, HeckeTensorElement.one(k))


def eval_f_lambda(a, lam=None, k=None):
    a = _as_element(a, k)
    if lam is not None and not callable(lam):
        seq = list(lam)
        lam_f = seq.__getitem__
    else:
        lam_f = lam
    return f_lambda_map(a.k, lam_f)(a)


def psi_M_map(n, k, module):
    return Substitution(lambda tok: sw.psi_M(tok, n, k, module), sw.TensorOperator.identity(n, k, module))


def eval_psi_M(a, n, module, k=None):
    a = _as_element(a, k)
    if isinstance(module, str):
        module = sw.stock_module(module, n)
    return psi_M_map(n, a.k, module)(a)


def phi_map(k):
    from . import heis
    return Substitution(lambda tok: heis.phi_generator(tok, k), heis.HeisMorphism.identity(heis.up_down(k)))


def eval_phi(a, k=None):
    a = _as_element(a, k)
    return phi_map(a.k)(a)


def eval_iota(hr_word, k):
    """Substitute z -> z0, s_i -> tau_{2i} tau_{2i+1} + e_{2i}, e -> e."""
    lc = parse(hr_word) if isinstance(hr_word, str) else hr_word
    out = LinComb()
    for w, c in lc.items():
        term = LinComb.scalar(c)
        for tok in w:
            name, i = split_token(tok)
            if name == "z" and i is None:
                term = term * LinComb.word("z0")
            elif name == "s":
                term = term * (LinComb.word(f"t{2*i}", f"t{2*i+1}") + LinComb.word(f"e{2*i}"))
            elif name == "e":
                term = term * LinComb.word(tok)
            else:
                raise ValueError(f"{tok!r} is not a partition algebra generator")
        out = out + term
    return AffineElement(k, out)


def random_hr_word(k, length, rng):
    gens = [f"s{i}" for i in range(1, k)] + [f"e{j}" for j in range(1, 2 * k)] + ["z"]
    return " ".join(rng.choice(gens) for _ in range(length)) or "1"


def roundtrip_check(k, samples=100, seed=0, max_len=6):
    """pr(iota(w)) equals the diagram value of w for generators and random words."""
    rng = random.Random(seed)
    words = [f"s{i}" for i in range(1, k)] + [f"e{j}" for j in range(1, 2 * k)] + ["z"]
    words += [random_hr_word(k, rng.randint(1, max_len), rng) for _ in range(samples)]
    for w in words:
        if eval_pr(eval_iota(w, k)) != pa.evaluate_expr(w, k):
            return False
    return True


def relations(k, nmax=3, lmax=3, include_derived=True):
    rows = rel.full_affine_suite(k, nmax, lmax) if include_derived else \
        [("rel " + a, b, c) for a, b, c in rel.defining_table(k, lmax)]
    return [RelationInstance(label, AffineElement.parse(l, k), AffineElement.parse(r, k))
            for label, l, r in rows]


def express_tau(i, k, method="recursive"):
    """tau_i as a combination of words in e, s, x only.

    "direct": solve the odd-x recursion (even i) or even-x recursion (odd i)
    for tau. "recursive": descend through the tau recursions to tau_2, tau_3.
    """
    if not 2 <= i <= 2 * k - 1:
        raise IndexError(f"tau_{i} needs 2 <= i <= {2 * k - 1}")
    h = i // 2
    if method == "direct" or i <= 3:
        if i % 2 == 0:
            expr = (f"s{h} x{2*h-1} s{h} + x{2*h} e{2*h} + e{2*h} x{2*h} - x{2*h-1} e{2*h}"
                    f" - x{2*h+1}")
        else:
            expr = (f"x{2*h+2} - s{h} x{2*h} s{h} + s{h} x{2*h} e{2*h} + e{2*h} x{2*h} s{h}"
                    f" - e{2*h} x{2*h} e{2*h+1} e{2*h}")
        return AffineElement.parse(expr, k)
    E, F, X = f"e{2*h-2}", f"e{2*h}", f"x{2*h-2}"
    si, sm = f"s{h}", f"s{h-1}"
    lower = express_tau(i - 2, k, method)
    left = AffineElement.parse(f"{sm} {si}", k)
    right = AffineElement.parse(f"{si} {sm}", k)
    if i % 2 == 0:
        rest = (f"{E} {X} {si} {E} {si} + {si} {E} {X} {si} {E}"
                f" - {E} {X} {sm} {F} e{2*h-1} {E} - {si} {E} e{2*h-1} {F} {sm} {X} {E} {si}")
    else:
        rest = (f"{si} {E} {X} {si} {E} {si} + {E} {X} {si} {E}"
                f" - {si} {E} {X} {sm} {F} e{2*h-1} {E} - {E} e{2*h-1} {F} {sm} {X} {E} {si}")
    return left * lower * right + AffineElement.parse(rest, k)


def power_sum(n, k):
    """p_n(x) = sum of odd x^n minus sum of even x^n."""
    parts = [("+ " if r % 2 else "- ") + f"x{r}^{n}" for r in range(1, 2 * k + 1)]
    return AffineElement.parse(" ".join(parts), k)


def generators(k, lmax=2):
    toks = ([f"t{i}" for i in range(2, 2 * k)] + [f"e{j}" for j in range(1, 2 * k)]
            + [f"x{r}" for r in range(1, 2 * k + 1)] + [f"z{l}" for l in range(lmax + 1)])
    return [AffineElement.word([t], k) for t in toks]


def random_word(k, length, rng, lmax=2):
    toks = ([f"t{i}" for i in range(2, 2 * k)] + [f"e{j}" for j in range(1, 2 * k)]
            + [f"x{r}" for r in range(1, 2 * k + 1)] + [f"z{l}" for l in range(lmax + 1)])
    return AffineElement.word([rng.choice(toks) for _ in range(length)], k)


TARGETS = ("pr", "hecke", "tensor", "heis")


def evaluators(k, targets=TARGETS, n_values=(2, 3, 4), modules=("trivial", "V"), regular_n=(3,)):
    """Named substitution maps for the requested targets."""
    out = []
    for tgt in targets:
        if tgt == "pr":
            out.append(("pr", pr_map(k)))
        elif tgt == "hecke":
            out.append(("hecke", f_lambda_map(k)))
        elif tgt == "tensor":
            for n in n_values:
                for m in modules:
                    out.append((f"psi n={n} M={m}", psi_M_map(n, k, sw.stock_module(m, n))))
            for n in regular_n:
                out.append((f"psi n={n} M=regular", psi_M_map(n, k, sw.regular_module(n))))
        elif tgt == "heis":
            out.append(("heis", phi_map(k)))
        else:
            raise ValueError(f"unknown target {tgt!r}")
    return out


def verify_relations(k, targets=TARGETS, instances=None, **kw):
    """[(label, target, passed)] for every relation instance and target."""
    instances = instances if instances is not None else relations(k)
    out = []
    for name, ev in evaluators(k, targets, **kw):
        for inst in instances:
            out.append((inst.label, name, ev(inst.lhs) == ev(inst.rhs)))
    return out
