"""Symmetric groups, their modules, and the tensor-space actions.

psi_{n,k} sends A_2k(n) to End_{S(n)}(V^{(x)k}); psi_M extends it to the
affine algebra acting on M (x) V^{(x)k} for an S(n)-module M.
Permutations are one-line tuples with (w v)(x) = w(v(x)).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import sympy

from . import partition_core as pc
from .hecke import perm_id, perm_mul, reduced_word, transposition
from .palgebra import PAElement
from .words import LinComb, evaluate, parse, split_token


def swap(n, a, b):
    """The transposition (a, b) in S(n)."""
    p = list(range(1, n + 1))
    p[a - 1], p[b - 1] = b, a
    return tuple(p)


def perm_inv(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


class Permutation(tuple):
    """One-line notation; a thin tuple subclass kept for readability."""

    def __new__(cls, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    def __mul__(self, other):
        return Permutation(perm_mul(self, other))

    def inverse(self):
        return Permutation(perm_inv(self))


def _add(d, key, c):
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


class GroupAlgebraElement:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {tuple(p): Fraction(c) for p, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, n):
        return cls(n, {perm_id(n): 1})

    def __add__(self, other):
        t = dict(self.terms)
        for p, c in other.terms.items():
            _add(t, p, c)
        return GroupAlgebraElement(self.n, t)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return GroupAlgebraElement(self.n, {p: c * other for p, c in self.terms.items()})
        out = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                _add(out, perm_mul(p, q), c * d)
        return GroupAlgebraElement(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, m):
        out = GroupAlgebraElement.one(self.n)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return " + ".join(f"{c}*{p}" for p, c in sorted(self.terms.items())) or "0"


def T_element(n, b):
    """T_{n,b}: the sum of the transpositions (a, b), a != b."""
    return GroupAlgebraElement(n, {swap(n, a, b): 1 for a in range(1, n + 1) if a != b})


def Z_element(n, l):
    out = GroupAlgebraElement(n)
    for b in range(1, n + 1):
        out = out + T_element(n, b) ** l
    return out


def central_elements(n, b, l):
    if not 1 <= b <= n or l < 0:
        raise ValueError("need 1 <= b <= n and l >= 0")
    return T_element(n, b), Z_element(n, l)


def is_central(g: GroupAlgebraElement):
    n = g.n
    for i in range(1, n):
        s = GroupAlgebraElement(n, {transposition(i, n): 1})
        if s * g != g * s:
            return False
    return True


class SnModule:
    """A finite-dimensional S(n)-module given by its permutation action.

    action(perm, idx) returns {idx': coeff}. Stock modules: trivial, V, regular.
    """

    def __init__(self, n, dim, action, tag="custom", labels=None):
        self.n = n
        self.dim = dim
        self._action = action
        self.tag = tag
        self.labels = labels or list(range(dim))
        self._cache = {}

    def act(self, perm, idx):
        key = (perm, idx)
        if key not in self._cache:
            self._cache[key] = self._action(perm, idx)
        return self._cache[key]

    def act_group(self, g: GroupAlgebraElement, idx):
        out = {}
        for p, c in g.terms.items():
            for j, d in self.act(p, idx).items():
                _add(out, j, c * d)
        return out

    def generator_matrix(self, i):
        """Matrix of the adjacent transposition s_i (rows = output index)."""
        M = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        s = transposition(i, self.n)
        for col in range(self.dim):
            for row, c in self.act(s, col).items():
                M[row][col] = Fraction(c)
        return M

    def check_coxeter(self):
        n, d = self.n, self.dim

        def mat(i):
            return sympy.Matrix(self.generator_matrix(i))
        I = sympy.eye(d)
        for i in range(1, n):
            if mat(i) ** 2 != I:
                return False
            for j in range(i + 2, n):
                if mat(i) * mat(j) != mat(j) * mat(i):
                    return False
            if i + 1 < n and mat(i) * mat(i + 1) * mat(i) != mat(i + 1) * mat(i) * mat(i + 1):
                return False
        return True

    @classmethod
    def from_generators(cls, n, matrices, tag="custom"):
        """Module from matrices of s_1..s_{n-1}; validated on construction."""
        dim = len(matrices[0]) if matrices else 1
        mats = [sympy.Matrix(m) for m in matrices]

        def action(perm, idx):
            v = sympy.zeros(dim, 1)
            v[idx] = 1
            for i in reversed(reduced_word(perm)):
                v = mats[i - 1] * v
            return {r: Fraction(int(x.p), int(x.q)) for r, x in enumerate(v) if x != 0}
        mod = cls(n, dim, action, tag)
        if not mod.check_coxeter():
            raise ValueError("invalid module: Coxeter relations fail")
        return mod


def trivial_module(n):
    return SnModule(n, 1, lambda p, i: {0: 1}, "trivial")


def permutation_module(n):
    """V with basis v_1..v_n (index a-1) and pi v_a = v_{pi(a)}."""
    return SnModule(n, n, lambda p, i: {p[i] - 1: 1}, "V")


def regular_module(n):
    perms = sorted(itertools.permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(perms)}
    return SnModule(n, len(perms), lambda p, i: {index[perm_mul(p, perms[i])]: 1}, "regular", perms)


def stock_module(name, n):
    name = name.lower()
    if name in ("trivial", "triv", "1"):
        return trivial_module(n)
    if name in ("v", "perm", "permutation"):
        return permutation_module(n)
    if name in ("regular", "reg"):
        return regular_module(n)
    raise ValueError(f"unknown module {name!r}")


class TensorOperator:
    """A linear operator on M (x) V^{(x)k}, stored column by column.

    Basis keys are (a0, a) with a0 an index into M and a in [n]^k.
    A * B applies B first.
    """
    __slots__ = ("n", "k", "module", "cols")

    def __init__(self, n, k, module, cols):
        self.n, self.k, self.module = n, k, module
        self.cols = cols

    @staticmethod
    def keys(n, k, module):
        return _keys(n, k, module.dim)

    @classmethod
    def from_function(cls, n, k, module, f):
        return cls(n, k, module, {key: {kk: c for kk, c in f(key).items() if c}
                                  for key in _keys(n, k, module.dim)})

    @classmethod
    def identity(cls, n, k, module):
        return cls(n, k, module, {key: {key: 1} for key in _keys(n, k, module.dim)})

    @classmethod
    def zero(cls, n, k, module):
        return cls(n, k, module, {key: {} for key in _keys(n, k, module.dim)})

    def _like(self, cols):
        return TensorOperator(self.n, self.k, self.module, cols)

    def apply(self, vec):
        out = {}
        for key, c in vec.items():
            for kk, d in self.cols[key].items():
                _add(out, kk, c * d)
        return out

    def __add__(self, other):
        if not isinstance(other, TensorOperator):
            other = TensorOperator.identity(self.n, self.k, self.module) * other
        cols = {}
        for key, col in self.cols.items():
            new = dict(col)
            for kk, c in other.cols[key].items():
                _add(new, kk, c)
            cols[key] = new
        return self._like(cols)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                return self._like({key: {} for key in self.cols})
            return self._like({key: {kk: c * other for kk, c in col.items()} for key, col in self.cols.items()})
        return self._like({key: self.apply(col) for key, col in other.cols.items()})

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = TensorOperator.identity(self.n, self.k, self.module) * other
        return isinstance(other, TensorOperator) and self.cols == other.cols

    def __hash__(self):
        return hash(frozenset((k, frozenset(v.items())) for k, v in self.cols.items()))

    def is_zero(self):
        return all(not c for c in self.cols.values())


@lru_cache(maxsize=None)
def _keys(n, k, dim):
    return tuple((a0, a) for a0 in range(dim) for a in itertools.product(range(1, n + 1), repeat=k))


def _swap_values(vals, a, b):
    return tuple(b if x == a else a if x == b else x for x in vals)


def _transposition_part(n, module, a0, a, a_i, b, upto):
    """Apply (a_i, b) to m_{a0} and to entries 1..upto of a."""
    out = {}
    p = swap(n, a_i, b)
    head = _swap_values(a[:upto], a_i, b)
    for j, c in module.act(p, a0).items():
        out[(j, head + a[upto:])] = c
    return out


def psi_M(token, n, k, module):
    """Image of one generator token (t, e, x, z, s) under psi^(M)_{n,k}."""
    name, i = split_token(token)
    if name == "z":
        if i is None:
            return TensorOperator.identity(n, k, module) * n
        Zl = Z_element(n, i)
        return TensorOperator.from_function(
            n, k, module, lambda key: {(j, key[1]): c for j, c in module.act_group(Zl, key[0]).items()})
    if i is None:
        raise ValueError(f"token {token!r} needs an index")
    if name == "e":
        if not 1 <= i <= 2 * k - 1:
            raise IndexError(f"e_{i} out of range for k={k}")
        if i % 2:
            j = (i + 1) // 2

            def f(key):
                a0, a = key
                return {(a0, a[:j - 1] + (b,) + a[j:]): 1 for b in range(1, n + 1)}
        else:
            j = i // 2

            def f(key):
                a0, a = key
                return {key: 1} if a[j - 1] == a[j] else {}
        return TensorOperator.from_function(n, k, module, f)
    if name == "s":
        if not 1 <= i <= k - 1:
            raise IndexError(f"s_{i} out of range for k={k}")

        def f(key):
            a0, a = key
            b = list(a)
            b[i - 1], b[i] = b[i], b[i - 1]
            return {(a0, tuple(b)): 1}
        return TensorOperator.from_function(n, k, module, f)
    if name in ("t", "tau"):
        if not 2 <= i <= 2 * k - 1:
            raise IndexError(f"t_{i} out of range for k={k}")
        half = i // 2
        upto = half - 1 if i % 2 == 0 else half + 1

        def f(key):
            a0, a = key
            x, y = a[half - 1], a[half]
            if x == y:
                return {}
            return _transposition_part(n, module, a0, a, x, y, upto)
        return TensorOperator.from_function(n, k, module, f)
    if name in ("x", "X"):
        if not 1 <= i <= 2 * k:
            raise IndexError(f"x_{i} out of range for k={k}")
        pos = (i + 1) // 2
        upto = pos - 1 if i % 2 else pos

        def f(key):
            a0, a = key
            out = {}
            ai = a[pos - 1]
            for b in range(1, n + 1):
                if b != ai:
                    for kk, c in _transposition_part(n, module, a0, a, ai, b, upto).items():
                        _add(out, kk, c)
            return out
        return TensorOperator.from_function(n, k, module, f)
    raise ValueError(f"unknown token {token!r}")


def psi(token, n, k):
    """Finite Schur-Weyl image of s, e, t, X, z on V^{(x)k}."""
    return psi_M(token, n, k, trivial_module(n))


def diagram_operator(d, n, module=None):
    """Set-partition matrix rule: labels constant on each block."""
    k = d.k
    module = module or trivial_module(n)

    def f(key):
        a0, b = key
        fixed = {}
        free = []
        for blk in d.blocks:
            bottoms = [b[-v - 1] for v in blk if v < 0]
            if bottoms:
                if any(x != bottoms[0] for x in bottoms):
                    return {}
                val = bottoms[0]
                for v in blk:
                    if v > 0:
                        fixed[v] = val
            else:
                free.append([v for v in blk if v > 0])
        out = {}
        for choice in itertools.product(range(1, n + 1), repeat=len(free)):
            top = dict(fixed)
            for blk, c in zip(free, choice):
                for v in blk:
                    top[v] = c
            out[(a0, tuple(top[i] for i in range(1, k + 1)))] = 1
        return out
    return TensorOperator.from_function(n, k, module, f)


def psi_element(a: PAElement, n, module=None, route="matrix"):
    """psi_{n,k}(a) with z -> n; route "matrix" or "generators"."""
    module = module or trivial_module(n)
    k = a.k
    out = TensorOperator.zero(n, k, module)
    for d, p in a.terms.items():
        c = p(n)
        if route == "matrix":
            op = diagram_operator(d, n, module)
        else:
            word, m = pc.factorize(d)
            op = TensorOperator.identity(n, k, module)
            for tok in word:
                op = op * psi_M(tok, n, k, module)
            if m:
                c = Fraction(c, n ** m)
        out = out + op * c
    return out


def evaluate_psi_M(expr, n, k, module):
    """Evaluate a token expression under psi^(M); s-tokens are Coxeter swaps."""
    lc = parse(expr) if isinstance(expr, str) else expr
    cache = {}

    def gen(tok):
        if tok not in cache:
            cache[tok] = psi_M(tok, n, k, module)
        return cache[tok]
    return evaluate(lc, gen, TensorOperator.identity(n, k, module))


def _zdeg(x):
    if isinstance(x, PAElement):
        return max((p.degree for p in x.terms.values()), default=0)
    return max((len([t for t in w if t == "z"]) for w in x), default=0)


def certify_identity(lhs, rhs, k):
    """Decide lhs == rhs in A_2k(z) from psi_{n,k}, n = 2k .. 2k + D.

    Sides are PAElements (matrix rule) or token expressions (generator
    formulas, so no diagram-basis computation is involved).
    """
    if isinstance(lhs, str):
        lhs = parse(lhs)
    if isinstance(rhs, str):
        rhs = parse(rhs)
    D = max(_zdeg(lhs), _zdeg(rhs))
    for n in range(2 * k, 2 * k + D + 1):
        ops = []
        for side in (lhs, rhs):
            if isinstance(side, PAElement):
                ops.append(psi_element(side, n))
            else:
                ops.append(evaluate_psi_M(side, n, k, trivial_module(n)))
        if ops[0] != ops[1]:
            return False
    return True


def diagonal_action(perm, n, k, module):
    return TensorOperator.from_function(
        n, k, module,
        lambda key: {(j, tuple(perm[x - 1] for x in key[1])): c for j, c in module.act(perm, key[0]).items()})


def is_equivariant(op: TensorOperator):
    for i in range(1, op.n):
        g = diagonal_action(transposition(i, op.n), op.n, op.k, op.module)
        if g * op != op * g:
            return False
    return True


def exact_rank(rows):
    return sympy.Matrix(rows).rank()


def witness_vectors(max_m, n, a=(1, 2)):
    """Coefficient vectors of psi_M(x1^m e2 e1)(id (x) v_a) in M = CS(n).

    The proof's display gives (T_{n,a2}^m id) (x) v_{a2} (x) v_{a2}; we read
    off the M-component at v_{a2} (x) v_{a2}.
    """
    module = regular_module(n)
    k = 2
    idx = module.labels.index(perm_id(n))
    vecs = []
    e21 = psi_M("e2", n, k, module) * psi_M("e1", n, k, module)
    x1 = psi_M("x1", n, k, module)
    op = e21
    for m in range(max_m + 1):
        out = op.apply({(idx, tuple(a)): 1})
        target = (a[1], a[1])
        vec = [Fraction(0)] * module.dim
        for (j, aa), c in out.items():
            if aa != target:
                raise AssertionError("unexpected tensor component in d_m image")
            vec[j] += c
        vecs.append(vec)
        op = x1 * op
    return vecs


def witness_independence(max_m, k=2, n=None):
    if k != 2:
        raise ValueError("the witness is built at k = 2")
    if n is None or n <= max_m + 1:
        raise ValueError("need n > max_m + 1")
    vecs = witness_vectors(max_m, n)
    return exact_rank(vecs) == max_m + 1


def group_algebra_rank(elements):
    n = elements[0].n
    perms = sorted(itertools.permutations(range(1, n + 1)))
    return exact_rank([[g.terms.get(p, 0) for p in perms] for g in elements])


def apply_to_basis(op: TensorOperator, a0, a):
    return op.apply({(a0, tuple(a)): 1})


def format_vector(vec):
    """JSON-ready {"(a0|a1,...,ak)": coeff} with sorted keys."""
    out = {}
    for (a0, a), c in sorted(vec.items()):
        c = Fraction(c)
        out[f"({a0}|{','.join(map(str, a))})"] = int(c) if c.denominator == 1 else str(c)
    return out
