"""The degenerate affine Hecke algebra H_k and its tensor square.

Basis: y^alpha * w, with the polynomial part left of the permutation.
Defining relation: y_{i+1} = s_i y_i s_i + s_i, so s_i y_i = y_{i+1} s_i - 1.
Permutations are one-line tuples; (w v)(x) = w(v(x)).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational


def perm_mul(w, v):
    return tuple(w[x - 1] for x in v)


def perm_id(k):
    return tuple(range(1, k + 1))


def transposition(i, k):
    p = list(range(1, k + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def reduced_word(w):
    """Indices i with w = s_{i1} s_{i2} ... (bubble sort)."""
    p = list(w)
    word = []
    changed = True
    while changed:
        changed = False
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                p[j], p[j + 1] = p[j + 1], p[j]
                word.append(j + 1)
                changed = True
    # p = w * s_{j1} * s_{j2} ... = id, so w = ... s_{j2} s_{j1}
    return list(reversed(word))


@lru_cache(maxsize=None)
def _s_mono(i, mono):
    """s_i * y^mono as {(mono', has_s): coeff}."""
    if not any(mono):
        return {(mono, True): Fraction(1)}
    j = next(idx for idx, a in enumerate(mono) if a)  # 0-based
    rest = list(mono)
    rest[j] -= 1
    rest = tuple(rest)
    out = {}
    # s_i y_j = y_{s(j)} s_i + c_j
    jj = j + 1
    sj = i + 1 if jj == i else (i if jj == i + 1 else jj)
    for (m, has_s), c in _s_mono(i, rest).items():
        mm = list(m)
        mm[sj - 1] += 1
        key = (tuple(mm), has_s)
        out[key] = out.get(key, 0) + c
    cj = -1 if jj == i else (1 if jj == i + 1 else 0)
    if cj:
        key = (rest, False)
        out[key] = out.get(key, 0) + cj
    return {kk: v for kk, v in out.items() if v}


def _add(d, key, c):
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


@lru_cache(maxsize=None)
def _w_mono(w, mono):
    """w * y^mono as {(mono', perm): coeff}."""
    k = len(w)
    cur = {(mono, perm_id(k)): Fraction(1)}
    for i in reversed(reduced_word(w)):
        si = transposition(i, k)
        new = {}
        for (m, u), c in cur.items():
            for (m2, has_s), c2 in _s_mono(i, m).items():
                _add(new, (m2, perm_mul(si, u) if has_s else u), c * c2)
        cur = new
    return cur


class HeckeElement:
    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        self.terms = {key: Fraction(c) for key, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, k):
        return cls(k, {((0,) * k, perm_id(k)): 1})

    @classmethod
    def y(cls, i, k, power=1):
        m = [0] * k
        m[i - 1] = power
        return cls(k, {(tuple(m), perm_id(k)): 1})

    @classmethod
    def s(cls, i, k):
        if not 1 <= i <= k - 1:
            raise IndexError(f"s_{i} needs 1 <= i <= {k - 1}")
        return cls(k, {((0,) * k, transposition(i, k)): 1})

    @classmethod
    def perm(cls, w):
        return cls(len(w), {((0,) * len(w), tuple(w)): 1})

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement.one(self.k) * other
        t = dict(self.terms)
        for key, c in other.terms.items():
            _add(t, key, c)
        return HeckeElement(self.k, t)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.k, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return HeckeElement(self.k, {key: c * other for key, c in self.terms.items()})
        if self.k != other.k:
            raise ValueError(f"size mismatch: {self.k} vs {other.k}")
        out = {}
        for (a, w), c1 in self.terms.items():
            for (b, v), c2 in other.terms.items():
                for (g, u), c3 in _w_mono(w, b).items():
                    m = tuple(x + y for x, y in zip(a, g))
                    _add(out, (m, perm_mul(u, v)), c1 * c2 * c3)
        return HeckeElement(self.k, out)

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = HeckeElement.one(self.k) * other
        return isinstance(other, HeckeElement) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def to_json(self):
        return [{"y": list(m), "perm": list(w), "coeff": str(c)} for (m, w), c in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, w), c in sorted(self.terms.items()):
            ys = "".join(f"y{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(m) if a)
            ws = "" if w == perm_id(self.k) else "w" + "".join(map(str, w))
            body = (ys + ("*" if ys and ws else "") + ws) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


def hecke_mul(a, b):
    return a * b


class HeckeTensorElement:
    """Element of H_k (x) H_k; keys are pairs of HeckeElement basis keys."""
    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        self.terms = {key: Fraction(c) for key, c in (terms or {}).items() if c}

    @classmethod
    def pure(cls, a: HeckeElement, b: HeckeElement):
        t = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                _add(t, (ka, kb), ca * cb)
        return cls(a.k, t)

    @classmethod
    def one(cls, k):
        return cls.pure(HeckeElement.one(k), HeckeElement.one(k))

    def __add__(self, other):
        if not isinstance(other, HeckeTensorElement):
            other = HeckeTensorElement.one(self.k) * other
        t = dict(self.terms)
        for key, c in other.terms.items():
            _add(t, key, c)
        return HeckeTensorElement(self.k, t)

    __radd__ = __add__

    def __neg__(self):
        return HeckeTensorElement(self.k, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return HeckeTensorElement(self.k, {key: c * other for key, c in self.terms.items()})
        if self.k != other.k:
            raise ValueError(f"size mismatch: {self.k} vs {other.k}")
        out = {}
        k = self.k
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                L = HeckeElement(k, {l1: 1}) * HeckeElement(k, {l2: 1})
                R = HeckeElement(k, {r1: 1}) * HeckeElement(k, {r2: 1})
                for kl, cl in L.terms.items():
                    for kr, cr in R.terms.items():
                        _add(out, (kl, kr), c1 * c2 * cl * cr)
        return HeckeTensorElement(k, out)

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = HeckeTensorElement.one(self.k) * other
        return isinstance(other, HeckeTensorElement) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def to_json(self):
        return [{"left": {"y": list(a[0]), "perm": list(a[1])},
                 "right": {"y": list(b[0]), "perm": list(b[1])}, "coeff": str(c)}
                for (a, b), c in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        k = self.k
        return " + ".join(f"{c}*({HeckeElement(k, {a: 1})})(x)({HeckeElement(k, {b: 1})})"
                          for (a, b), c in sorted(self.terms.items()))


def tensor_mul(a, b):
    return a * b
