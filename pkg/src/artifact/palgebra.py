"""The partition algebra A_2k(z) in the diagram basis."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from . import partition_core as pc
from . import relations as rel
from .poly import ONE, Poly, Z
from .words import LinComb, evaluate, parse, split_token

PolynomialZ = Poly


@lru_cache(maxsize=1 << 20)
def _compose(a, b):
    r = pc.compose(a, b)
    return r.diagram, r.middle_components


class PAElement:
    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        t = {}
        for d, p in (terms or {}).items():
            if not isinstance(p, Poly):
                p = Poly.const(p)
            if d.k != k:
                raise ValueError(f"size mismatch: {d.k} vs {k}")
            if p:
                t[d] = p
        self.terms = t

    @classmethod
    def diagram(cls, d, coeff=ONE):
        return cls(d.k, {d: coeff})

    @classmethod
    def one(cls, k):
        return cls(k, {pc.identity(k): ONE})

    @classmethod
    def zero(cls, k):
        return cls(k)

    @classmethod
    def scalar(cls, k, c):
        return cls(k, {pc.identity(k): c if isinstance(c, Poly) else Poly.const(c)})

    def _check(self, other):
        if self.k != other.k:
            raise ValueError(f"size mismatch: {self.k} vs {other.k}")

    def __add__(self, other):
        if not isinstance(other, PAElement):
            other = PAElement.scalar(self.k, other)
        self._check(other)
        t = dict(self.terms)
        for d, p in other.terms.items():
            q = t.get(d)
            t[d] = p if q is None else q + p
        return PAElement(self.k, t)

    __radd__ = __add__

    def __neg__(self):
        return PAElement(self.k, {d: -p for d, p in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PAElement):
            other = PAElement.scalar(self.k, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not isinstance(c, Poly):
            c = Poly.const(c)
        return PAElement(self.k, {d: p * c for d, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational, Poly)):
            return self.scale(other)
        self._check(other)
        out = {}
        for a, p in self.terms.items():
            for b, q in other.terms.items():
                d, m = _compose(a, b)
                c = (p * q).shift(m)
                r = out.get(d)
                out[d] = c if r is None else r + c
        return PAElement(self.k, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n):
        out = PAElement.one(self.k)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Rational, Poly)):
            other = PAElement.scalar(self.k, other)
        return isinstance(other, PAElement) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def star(self):
        return PAElement(self.k, {pc.flip(d): p for d, p in self.terms.items()})

    def specialize(self, delta):
        """Evaluate coefficients at z = delta; returns {diagram: number}."""
        out = {}
        for d, p in self.terms.items():
            v = p(Fraction(delta))
            if v:
                out[d] = v
        return SpecializedElement(self.k, out)

    def coefficient(self, d):
        return self.terms.get(d, Poly())

    def to_json(self):
        return {"k": self.k, "terms": [{"diagram": d.to_json()["blocks"], "poly": p.to_list()}
                                       for d, p in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data):
        k = int(data["k"])
        terms = {}
        for t in data["terms"]:
            d = pc.Diagram(k, tuple(tuple(b) for b in t["diagram"]))
            terms[d] = terms.get(d, Poly()) + Poly([Fraction(c) for c in t["poly"]])
        return cls(k, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for d, p in sorted(self.terms.items()):
            parts.append(f"({p}){d!r}" if p != ONE else repr(d))
        return " + ".join(parts)


class SpecializedElement:
    """An element of A_2k(delta): diagrams with numeric coefficients."""
    __slots__ = ("k", "terms")

    def __init__(self, k, terms):
        self.k = k
        self.terms = {d: c for d, c in terms.items() if c}

    def __mul__(self, other):
        raise NotImplementedError("specialize after multiplying")

    def __eq__(self, other):
        return isinstance(other, SpecializedElement) and self.k == other.k and self.terms == other.terms

    def __repr__(self):
        return " + ".join(f"{c}{d!r}" for d, c in sorted(self.terms.items())) or "0"


def specialize(a: PAElement, delta):
    return a.specialize(delta)


def star(a: PAElement) -> PAElement:
    return a.star()


# generators

def s(i, k):
    return PAElement.diagram(pc.s(i, k))


def e(j, k):
    if not 1 <= j <= 2 * k - 1:
        raise IndexError(f"e_{j} needs 1 <= j <= {2 * k - 1}")
    return PAElement.diagram(pc.e(j, k))


def one(k):
    return PAElement.one(k)


def zvar(k):
    return PAElement.scalar(k, Z)


class _JM:
    """Memoised L_i and sigma_i at a fixed k, following the mutual recursion."""

    def __init__(self, k):
        self.k = k
        self.L = {}
        self.S = {}

    def s(self, i):
        return s(i, self.k)

    def e(self, j):
        return e(j, self.k)

    def jm(self, n):
        k = self.k
        if not 1 <= n <= 2 * k:
            raise IndexError(f"L_{n} needs 1 <= n <= {2 * k}")
        if n in self.L:
            return self.L[n]
        if n == 1:
            v = PAElement.zero(k)
        elif n == 2:
            v = self.e(1)
        elif n % 2 == 0:
            i = (n - 2) // 2
            si, L, E, E1 = self.s(i), self.jm(2 * i), self.e(2 * i), self.e(2 * i + 1)
            v = si * L * si - si * L * E - E * L * si + E * L * E1 * E + self.sigma(2 * i + 1)
        else:
            i = (n - 1) // 2
            si, E = self.s(i), self.e(2 * i)
            Lm, L = self.jm(2 * i - 1), self.jm(2 * i)
            v = si * Lm * si - L * E - E * L + (zvar(k) - Lm) * E + self.sigma(2 * i)
        self.L[n] = v
        return v

    def sigma(self, n):
        k = self.k
        if not 2 <= n <= 2 * k - 1:
            raise IndexError(f"sigma_{n} needs 2 <= n <= {2 * k - 1}")
        if n in self.S:
            return self.S[n]
        if n == 2:
            v = one(k)
        elif n == 3:
            v = self.s(1)
        elif n % 2 == 1:
            i = (n - 1) // 2
            sm, si = self.s(i - 1), self.s(i)
            E, E1, E2 = self.e(2 * i - 2), self.e(2 * i - 1), self.e(2 * i)
            L = self.jm(2 * i - 2)
            v = (sm * si * self.sigma(2 * i - 1) * si * sm
                 + si * E * L * si * E * si
                 + E * L * si * E
                 - si * E * L * sm * E2 * E1 * E
                 - E * E1 * E2 * sm * L * E * si)
        else:
            i = n // 2
            sm, si = self.s(i - 1), self.s(i)
            E, E1, E2 = self.e(2 * i - 2), self.e(2 * i - 1), self.e(2 * i)
            L = self.jm(2 * i - 2)
            v = (sm * si * self.sigma(2 * i - 2) * si * sm
                 + E * L * si * E * si
                 + si * E * L * si * E
                 - E * L * sm * E2 * E1 * E
                 - si * E * E1 * E2 * sm * L * E * si)
        self.S[n] = v
        return v


@lru_cache(maxsize=None)
def _jm_state(k):
    return _JM(k)


def jm_L(i, k):
    return _jm_state(k).jm(i)


def enyang_sigma(i, k):
    return _jm_state(k).sigma(i)


def norm_X(i, k):
    L = jm_L(i, k)
    if i % 2:
        return zvar(k) - one(k) - L
    return L - one(k)


def norm_t(i, k):
    if not 2 <= i <= 2 * k - 1:
        raise IndexError(f"t_{i} needs 2 <= i <= {2 * k - 1}")
    sig = enyang_sigma(i, k)
    return sig - e(i if i % 2 == 0 else i - 1, k)


def generator(token, k):
    """Value of a word token in A_2k(z)."""
    name, idx = split_token(token)
    if name == "z":
        if idx is None:
            return zvar(k)
        return PAElement.scalar(k, Z * (Z - 1) ** idx)
    if idx is None:
        raise ValueError(f"token {token!r} needs an index")
    if name == "s":
        return s(idx, k)
    if name == "e":
        return e(idx, k)
    if name in ("t", "tau"):
        return norm_t(idx, k)
    if name in ("x", "X"):
        return norm_X(idx, k)
    if name == "L":
        return jm_L(idx, k)
    if name in ("S", "sigma"):
        return enyang_sigma(idx, k)
    raise ValueError(f"unknown token {token!r}")


def evaluate_expr(expr, k):
    lc = parse(expr) if isinstance(expr, str) else expr
    cache = {}

    def gen(tok):
        if tok not in cache:
            cache[tok] = generator(tok, k)
        return cache[tok]
    return evaluate(lc, gen, one(k))


def power_sum(n, k):
    """p_n(X_1..X_2k): odd X's count positively, even ones negatively."""
    out = PAElement.zero(k)
    for i in range(1, 2 * k + 1):
        term = norm_X(i, k) ** n
        out = out + term if i % 2 else out - term
    return out


def hr_generators(k):
    return [s(i, k) for i in range(1, k)] + [e(j, k) for j in range(1, 2 * k)]


def central_check(c: PAElement) -> bool:
    return all(c * g == g * c for g in hr_generators(c.k))


SUITES = ("HR", "Enyang", "AffPrep", "SkeinRels", "NewEnyMix", "AffCostCom")


def relation_table(name, k, groups=None):
    if name == "HR":
        return rel.hr(k)
    if name == "Enyang":
        return rel.enyang(k)
    if name == "AffPrep":
        return rel.affine_table(k, "pa", groups=groups)
    if name in ("SkeinRels", "Skein"):
        return rel.skein(k)
    if name == "NewEnyMix":
        return rel.new_eny_mix(k)
    if name == "AffCostCom":
        return rel.cost_com(k)
    raise ValueError(f"unknown suite {name!r}")


def relation_suite(name, k, groups=None):
    """Instantiated relations as (label, lhs, rhs) PAElements."""
    out = []
    for label, l, r in relation_table(name, k, groups):
        out.append((label, evaluate_expr(l, k), evaluate_expr(r, k)))
    return out


def verify_suite(name, k, groups=None):
    """[(label, passed)] for each instance."""
    return [(label, lhs == rhs) for label, lhs, rhs in relation_suite(name, k, groups)]


def from_lincomb(lc: LinComb, k):
    return evaluate_expr(lc, k)
