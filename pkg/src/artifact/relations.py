"""Relation tables as data: (label, lhs, rhs) with expressions as strings.

Token language shared by every evaluator:
  t{i}  Enyang generator t_i (tau_i in the affine algebra)
  e{j}  idempotent generator
  x{r}  normalised JM element X_r (affine generator x_r)
  s{i}  Coxeter generator (a macro in the affine algebra)
  S{i}  sigma_i, L{i} the JM element L_i (partition algebra only)
  z     the parameter; z{l} the central generator z_l
Instances are emitted only when every index they mention is legal.
"""
from __future__ import annotations


class _Table:
    def __init__(self):
        self.rows = []

    def add(self, label, lhs, rhs):
        self.rows.append((label, lhs, rhs))

    def commute(self, label, a, b):
        self.add(label, f"{a} {b}", f"{b} {a}")


def _pairs(xs, ys, cond, symmetric):
    seen = set()
    for i in xs:
        for j in ys:
            if not cond(i, j):
                continue
            key = frozenset((i, j)) if symmetric else (i, j)
            if key in seen:
                continue
            seen.add(key)
            yield i, j


def hr(k):
    """Coxeter-type presentation in s_i, e_j."""
    T = _Table()
    S = range(1, k)
    for i in S:
        T.add(f"(HR1)(i) i={i}", f"s{i}^2", "1")
    # printed quantifier is j != i+1; read as |i-j| >= 2
    for i, j in _pairs(S, S, lambda i, j: abs(i - j) >= 2, True):
        T.commute(f"(HR1)(ii) i={i} j={j}", f"s{i}", f"s{j}")
    for i in range(1, k - 1):
        T.add(f"(HR1)(iii) i={i}", f"s{i} s{i+1} s{i}", f"s{i+1} s{i} s{i+1}")
    for i in range(1, k + 1):
        T.add(f"(HR2)(i) i={i}", f"e{2*i-1}^2", f"z e{2*i-1}")
    for i in S:
        T.add(f"(HR2)(ii) i={i}", f"e{2*i}^2", f"e{2*i}")
        T.add(f"(HR2)(iii) i={i} left", f"s{i} e{2*i}", f"e{2*i}")
        T.add(f"(HR2)(iii) i={i} right", f"e{2*i} s{i}", f"e{2*i}")
        T.add(f"(HR2)(iv) i={i} left", f"s{i} e{2*i-1} e{2*i+1}", f"e{2*i-1} e{2*i+1}")
        T.add(f"(HR2)(iv) i={i} right", f"e{2*i-1} e{2*i+1} s{i}", f"e{2*i-1} e{2*i+1}")
    K = range(1, k + 1)
    for i, j in _pairs(K, K, lambda i, j: i != j, True):
        T.commute(f"(HR3)(i) i={i} j={j}", f"e{2*i-1}", f"e{2*j-1}")
    for i, j in _pairs(S, S, lambda i, j: i != j, True):
        T.commute(f"(HR3)(ii) i={i} j={j}", f"e{2*i}", f"e{2*j}")
    for i, j in _pairs(K, S, lambda i, j: j not in (i - 1, i), False):
        T.commute(f"(HR3)(iii) i={i} j={j}", f"e{2*i-1}", f"e{2*j}")
    for i, j in _pairs(S, K, lambda i, j: j not in (i, i + 1), False):
        T.commute(f"(HR3)(iv) i={i} j={j}", f"s{i}", f"e{2*j-1}")
    for i, j in _pairs(S, S, lambda i, j: j not in (i - 1, i + 1), False):
        T.commute(f"(HR3)(v) i={i} j={j}", f"s{i}", f"e{2*j}")
    for i in S:
        T.add(f"(HR3)(vi) i={i}", f"s{i} e{2*i-1} s{i}", f"e{2*i+1}")
        if i >= 2:
            T.add(f"(HR3)(vii) i={i}", f"s{i} e{2*i-2} s{i}", f"s{i-1} e{2*i} s{i-1}")
    for i in range(1, 2 * k - 1):
        T.add(f"(HR4)(i) i={i}", f"e{i} e{i+1} e{i}", f"e{i}")
        T.add(f"(HR4)(ii) i={i}", f"e{i+1} e{i} e{i+1}", f"e{i+1}")
    return T.rows


def enyang(k):
    """Presentation in sigma_i (3 <= i <= 2k-1) and e_j."""
    T = _Table()
    sl = lambda i: 3 <= i <= 2 * k - 1  # noqa: E731
    el = lambda j: 1 <= j <= 2 * k - 1  # noqa: E731
    I = range(0, k + 1)
    for i in range(1, k - 1):
        T.add(f"(E1)(i) i={i}", f"S{2*i+2}^2", "1")
    for i in range(1, k):
        T.add(f"(E1)(ii) i={i}", f"S{2*i+1}^2", "1")
    for i, j in _pairs(I, I, lambda i, j: sl(2 * i + 1) and sl(2 * j) and j != i + 1, False):
        T.commute(f"(E2)(i) i={i} j={j}", f"S{2*i+1}", f"S{2*j}")
    for i, j in _pairs(I, I, lambda i, j: sl(2 * i + 1) and sl(2 * j + 1) and i != j and abs(i - j) != 1, True):
        T.commute(f"(E2)(ii) i={i} j={j}", f"S{2*i+1}", f"S{2*j+1}")
    for i, j in _pairs(I, I, lambda i, j: sl(2 * i) and sl(2 * j) and i != j and abs(i - j) != 1, True):
        T.commute(f"(E2)(iii) i={i} j={j}", f"S{2*i}", f"S{2*j}")

    def sj(j):
        return "S3" if j == 1 else f"(S{2*j} S{2*j+1})"
    for i in range(1, k - 1):
        a, b = sj(i), sj(i + 1)
        T.add(f"(E2)(iv) i={i}", f"{a} {b} {a}", f"{b} {a} {b}")
    for i in range(1, k + 1):
        T.add(f"(E3)(i) i={i}", f"e{2*i-1}^2", f"z e{2*i-1}")
    # printed range "2 >= i <= k-1" is read as i in [k-1]
    for i in range(1, k):
        T.add(f"(E3)(ii) i={i}", f"e{2*i}^2", f"e{2*i}")
        T.add(f"(E3)(iii) i={i} left", f"S{2*i+1} e{2*i}", f"e{2*i}")
        T.add(f"(E3)(iii) i={i} right", f"e{2*i} S{2*i+1}", f"e{2*i}")
    for i in range(2, k):
        T.add(f"(E3)(iv) i={i} left", f"S{2*i} e{2*i}", f"e{2*i}")
        T.add(f"(E3)(iv) i={i} right", f"e{2*i} S{2*i}", f"e{2*i}")
        T.add(f"(E3)(v) i={i}", f"S{2*i} e{2*i-1} e{2*i+1}", f"S{2*i+1} e{2*i-1} e{2*i+1}")
        T.add(f"(E3)(vi) i={i}", f"e{2*i+1} e{2*i-1} S{2*i}", f"e{2*i+1} e{2*i-1} S{2*i+1}")
    _commutations(T, "E4", k, "S", sl, el)
    for i in range(1, 2 * k - 1):
        T.add(f"(E5)(i) i={i} a", f"e{i} e{i+1} e{i}", f"e{i}")
        T.add(f"(E5)(i) i={i} b", f"e{i+1} e{i} e{i+1}", f"e{i+1}")
    for i in range(2, k):
        T.add(f"(E5)(ii) i={i}", f"S{2*i} e{2*i-1} S{2*i}", f"S{2*i+1} e{2*i+1} S{2*i+1}")
        T.add(f"(E5)(iii) i={i}", f"S{2*i} e{2*i-2} S{2*i}", f"S{2*i-1} e{2*i} S{2*i-1}")
    return T.rows


def _commutations(T, tag, k, g, gl, el):
    J = range(0, 2 * k + 1)
    for i in range(2 * k - 1 + 1):
        for j in range(i + 2, 2 * k):
            if el(i) and el(j):
                T.commute(f"({tag})(i) i={i} j={j}", f"e{i}", f"e{j}")
    for i, j in _pairs(J, J, lambda i, j: gl(2 * i - 1) and el(2 * j - 1) and j not in (i - 1, i), False):
        T.commute(f"({tag})(ii) i={i} j={j}", f"{g}{2*i-1}", f"e{2*j-1}")
    for i, j in _pairs(J, J, lambda i, j: gl(2 * i - 1) and el(2 * j) and j != i, False):
        T.commute(f"({tag})(iii) i={i} j={j}", f"{g}{2*i-1}", f"e{2*j}")
    for i, j in _pairs(J, J, lambda i, j: gl(2 * i) and el(2 * j - 1) and j not in (i, i + 1), False):
        T.commute(f"({tag})(iv) i={i} j={j}", f"{g}{2*i}", f"e{2*j-1}")
    for i, j in _pairs(J, J, lambda i, j: gl(2 * i) and el(2 * j) and j != i - 1, False):
        T.commute(f"({tag})(v) i={i} j={j}", f"{g}{2*i}", f"e{2*j}")


def affine_table(k, flavor="aff", groups=None, lmax=3):
    """Relations (1)-(10) in t, e, x.

    flavor "pa": the finite presentation (t_i for 3 <= i <= 2k-1, scalar z).
    flavor "aff": the affine presentation (tau_i for 2 <= i <= 2k-1, z_l).
    groups: optional set of group numbers 1..10 to emit.
    """
    T = _Table()
    aff = flavor == "aff"
    tmin = 2 if aff else 3
    tl = lambda i: tmin <= i <= 2 * k - 1  # noqa: E731
    el = lambda j: 1 <= j <= 2 * k - 1  # noqa: E731
    xl = lambda r: 1 <= r <= 2 * k  # noqa: E731
    Z0 = "z0" if aff else "z"
    want = (lambda g: True) if groups is None else (lambda g: g in groups)
    I = range(0, k + 1)

    if want(1):
        for i in range(0, k):
            if tl(2 * i + 2) and el(2 * i + 2):
                # printed as 1 - e_{2i} in the finite version; e_{2i+2} is what holds
                T.add(f"(1)(i) t{2*i+2}", f"t{2*i+2}^2", f"1 - e{2*i+2}")
        for i in range(1, k):
            T.add(f"(1)(ii) i={i}", f"t{2*i+1}^2", f"1 - e{2*i}")
    if want(2):
        for i, j in _pairs(I, I, lambda i, j: tl(2 * i + 1) and tl(2 * j) and j != i + 1, False):
            T.commute(f"(2)(i) i={i} j={j}", f"t{2*i+1}", f"t{2*j}")
        for i, j in _pairs(I, I, lambda i, j: tl(2 * i + 1) and tl(2 * j + 1) and i != j and abs(i - j) != 1, True):
            T.commute(f"(2)(ii) i={i} j={j}", f"t{2*i+1}", f"t{2*j+1}")
        for i, j in _pairs(I, I, lambda i, j: tl(2 * i) and tl(2 * j) and i != j and abs(i - j) != 1, True):
            T.commute(f"(2)(iii) i={i} j={j}", f"t{2*i}", f"t{2*j}")

        def sj(j):
            if j == 1 and not aff:
                return "(t3 + e2)"
            return f"(t{2*j} t{2*j+1} + e{2*j})"
        for i in range(1, k - 1):
            a, b = sj(i), sj(i + 1)
            T.add(f"(2)(iv) i={i}", f"{a} {b} {a}", f"{b} {a} {b}")
    if want(3):
        for i in range(1, k + 1):
            T.add(f"(3)(i) i={i}", f"e{2*i-1}^2", f"{Z0} e{2*i-1}")
        for i in range(1, k):
            T.add(f"(3)(ii) i={i}", f"e{2*i}^2", f"e{2*i}")
            T.add(f"(3)(iii) i={i} left", f"t{2*i+1} e{2*i}", "0")
            T.add(f"(3)(iii) i={i} right", f"e{2*i} t{2*i+1}", "0")
        for i in range(1, k):
            if not tl(2 * i):
                continue
            T.add(f"(3)(iv) i={i} left", f"t{2*i} e{2*i}", "0")
            T.add(f"(3)(iv) i={i} right", f"e{2*i} t{2*i}", "0")
            T.add(f"(3)(v) i={i}", f"t{2*i} e{2*i-1} e{2*i+1}", f"t{2*i+1} e{2*i-1} e{2*i+1}")
            T.add(f"(3)(vi) i={i}", f"e{2*i+1} e{2*i-1} t{2*i}", f"e{2*i+1} e{2*i-1} t{2*i+1}")
    if want(4):
        _commutations(T, "4", k, "t", tl, el)
    if want(5):
        # the affine table prints [2n-2]; n is k here
        for i in range(1, 2 * k - 1):
            T.add(f"(5)(i) i={i} a", f"e{i} e{i+1} e{i}", f"e{i}")
            T.add(f"(5)(i) i={i} b", f"e{i+1} e{i} e{i+1}", f"e{i+1}")
        for i in range(1, k):
            if tl(2 * i):
                T.add(f"(5)(ii) i={i}", f"t{2*i} e{2*i-1} t{2*i}", f"t{2*i+1} e{2*i+1} t{2*i+1}")
        for i in range(2, k):
            T.add(f"(5)(iii) i={i}", f"t{2*i} e{2*i-2} t{2*i}", f"t{2*i-1} e{2*i} t{2*i-1}")
    if want(6):
        R = range(1, 2 * k + 1)
        for i, j in _pairs(R, R, lambda i, j: i < j, False):
            T.commute(f"(6)(i) i={i} j={j}", f"x{i}", f"x{j}")
        for i in range(tmin, 2 * k):
            for j in R:
                if j not in (i - 1, i, i + 1):
                    T.commute(f"(6)(ii) i={i} j={j}", f"t{i}", f"x{j}")
        for i in range(1, 2 * k):
            for j in R:
                if j not in (i, i + 1):
                    T.commute(f"(6)(iii) i={i} j={j}", f"e{i}", f"x{j}")
    if want(7):
        for i in range(1, k + 1):
            if tl(2 * i - 2) and tl(2 * i):
                T.add(f"(7)(i) i={i}", f"t{2*i-2} t{2*i} t{2*i-2}",
                      f"t{2*i} t{2*i-2} t{2*i} (1 - e{2*i-2})")
            if tl(2 * i + 1) and tl(2 * i - 1):
                T.add(f"(7)(ii) i={i}", f"t{2*i+1} t{2*i-1} t{2*i+1}",
                      f"t{2*i-1} t{2*i+1} t{2*i-1} (1 - e{2*i})")
            if tl(2 * i - 1) and tl(2 * i) and el(2 * i - 2):
                T.add(f"(7)(iii) i={i}", f"t{2*i-1} t{2*i} t{2*i-1}",
                      f"t{2*i} - e{2*i-2} t{2*i} - t{2*i} e{2*i-2}")
            if tl(2 * i - 1) and tl(2 * i) and el(2 * i):
                T.add(f"(7)(iv) i={i}", f"t{2*i} t{2*i-1} t{2*i}",
                      f"t{2*i-1} - e{2*i} t{2*i-1} - t{2*i-1} e{2*i}")
    if want(8):
        for i in range(1, k):
            if tl(2 * i):
                T.add(f"(8)(i) i={i}", f"x{2*i+1}",
                      f"t{2*i} x{2*i-1} t{2*i} + e{2*i} e{2*i-1} t{2*i} + t{2*i} e{2*i-1} e{2*i} - t{2*i}")
            T.add(f"(8)(ii) i={i}", f"x{2*i+2}",
                  f"t{2*i+1} x{2*i} t{2*i+1} + e{2*i} e{2*i+1} t{2*i+1} e{2*i+1} e{2*i} + t{2*i+1}")
            if tl(2 * i):
                T.add(f"(8)(iii) i={i}", f"x{2*i}",
                      f"t{2*i} x{2*i} t{2*i} + e{2*i} e{2*i-1} t{2*i} + t{2*i} e{2*i-1} e{2*i}")
            T.add(f"(8)(iv) i={i}", f"x{2*i+1}",
                  f"t{2*i+1} x{2*i+1} t{2*i+1} + e{2*i} e{2*i+1} t{2*i+1} + t{2*i+1} e{2*i+1} e{2*i}")
    if want(9):
        for i in range(1, 2 * k):
            T.add(f"(9)(i) i={i}", f"e{i} (x{i} - x{i+1})", "0")
            T.add(f"(9)(ii) i={i}", f"(x{i} - x{i+1}) e{i}", "0")
    if want(10):
        for l in range(0, lmax + 1):
            rhs = f"z{l} e1" if aff else f"z (z - 1)^{l} e1"
            T.add(f"(10)(i) l={l}", f"e1 x1^{l} e1", rhs)
        if aff:
            gens = _generators(k)
            for l in range(0, 3):
                for g in gens:
                    T.commute(f"(10)(ii) l={l} {g}", f"z{l}", g)
    return T.rows


def _generators(k):
    return ([f"t{i}" for i in range(2, 2 * k)] + [f"e{j}" for j in range(1, 2 * k)]
            + [f"x{r}" for r in range(1, 2 * k + 1)])


def skein(k):
    """L/sigma skein relations (sigma_2 = 1 allowed)."""
    T = _Table()
    for i in range(1, k):
        T.add(f"(i) i={i}", f"L{2*i+1}",
              f"S{2*i} L{2*i-1} S{2*i} - e{2*i} e{2*i-1} S{2*i} - S{2*i} e{2*i-1} e{2*i}"
              f" + e{2*i} e{2*i+1} S{2*i} e{2*i+1} e{2*i} + S{2*i}")
        T.add(f"(ii) i={i}", f"L{2*i+2}",
              f"S{2*i+1} L{2*i} S{2*i+1} - e{2*i} e{2*i+1} - e{2*i+1} e{2*i}"
              f" + e{2*i} e{2*i+1} S{2*i+1} e{2*i+1} e{2*i} + S{2*i+1}")
        # trailing pair is e_{2i}e_{2i-1} + e_{2i-1}e_{2i}, as the derivation gives
        T.add(f"(iii) i={i}", f"L{2*i}",
              f"S{2*i} L{2*i} S{2*i} + e{2*i} e{2*i-1} S{2*i} + S{2*i} e{2*i-1} e{2*i}"
              f" - e{2*i} e{2*i-1} - e{2*i-1} e{2*i}")
        T.add(f"(iv) i={i}", f"L{2*i+1}",
              f"S{2*i+1} L{2*i+1} S{2*i+1} - e{2*i} e{2*i+1} S{2*i+1} - S{2*i+1} e{2*i+1} e{2*i}"
              f" + e{2*i} e{2*i+1} + e{2*i+1} e{2*i}")
    return T.rows


def new_eny_mix(k):
    """Mixed t/e/X identities (t_2 = 1 - e_2 allowed)."""
    T = _Table()
    for i in range(1, k):
        T.add(f"(i) i={i}", f"e{2*i+1} t{2*i} e{2*i+1}", f"x{2*i-1} e{2*i+1}")
        T.add(f"(ii) i={i} a", f"t{2*i} e{2*i-1} e{2*i}", f"x{2*i} e{2*i}")
        T.add(f"(ii) i={i} b", f"e{2*i} e{2*i-1} t{2*i}", f"e{2*i} x{2*i}")
        T.add(f"(iii) i={i} a", f"t{2*i+1} e{2*i+1} e{2*i}", f"x{2*i} e{2*i}")
        T.add(f"(iii) i={i} b", f"e{2*i} e{2*i+1} t{2*i+1}", f"e{2*i} x{2*i}")
    return T.rows


def cost_com(k):
    """t/x commutation-with-correction identities (first powers)."""
    T = _Table()
    for i in range(1, k):
        T.add(f"(i) i={i}", f"t{2*i} x{2*i+1}", f"x{2*i-1} t{2*i} + e{2*i-1} e{2*i} - 1")
        T.add(f"(ii) i={i}", f"t{2*i+1} x{2*i+2}", f"x{2*i} t{2*i+1} - e{2*i} e{2*i+1} + 1")
        T.add(f"(iii) i={i}", f"t{2*i} x{2*i}", f"x{2*i} t{2*i} + e{2*i-1} e{2*i} - e{2*i} e{2*i-1}")
        T.add(f"(iv) i={i}", f"t{2*i+1} x{2*i+1}", f"x{2*i+1} t{2*i+1} - e{2*i} e{2*i+1} + e{2*i+1} e{2*i}")
    return T.rows


def _psum(a, mid, b, n):
    terms = [f"{a}^{p} ({mid}) {b}^{n-1-p}" for p in range(n)]
    return " + ".join(terms)


def cost_com_powers(k, nmax=3):
    T = _Table()
    for i in range(1, k):
        for n in range(1, nmax + 1):
            x1, x2, x3, x4 = (f"x{2*i-1}", f"x{2*i}", f"x{2*i+1}", f"x{2*i+2}")
            T.add(f"(i) i={i} n={n}", f"t{2*i} {x3}^{n}",
                  f"{x1}^{n} t{2*i} + " + _psum(x1, f"e{2*i-1} e{2*i} - 1", x3, n))
            T.add(f"(ii) i={i} n={n}", f"t{2*i} {x2}^{n}",
                  f"{x2}^{n} t{2*i} + " + _psum(x2, f"e{2*i-1} e{2*i} - e{2*i} e{2*i-1}", x2, n))
            T.add(f"(iii) i={i} n={n}", f"t{2*i+1} {x4}^{n}",
                  f"{x2}^{n} t{2*i+1} + " + _psum(x2, f"- e{2*i} e{2*i+1} + 1", x4, n))
            T.add(f"(iv) i={i} n={n}", f"t{2*i+1} {x3}^{n}",
                  f"{x3}^{n} t{2*i+1} + " + _psum(x3, f"- e{2*i} e{2*i+1} + e{2*i+1} e{2*i}", x3, n))
    return T.rows


def s_macro(j):
    return f"(t{2*j} t{2*j+1} + e{2*j})"


def affine_derived(k, nmax=3):
    """Derived identities in the affine algebra; s_j is the tau macro."""
    T = _Table()
    s = s_macro
    for i in range(1, k):
        a, b, c = 2 * i - 1, 2 * i, 2 * i + 1
        T.add(f"mix (i) i={i} a", f"e{b} x{b}", f"e{b} e{a} t{b}")
        T.add(f"mix (i) i={i} b", f"x{b} e{b}", f"t{b} e{a} e{b}")
        T.add(f"mix (ii) i={i} a", f"e{b} x{c}", f"e{b} e{c} t{c}")
        T.add(f"mix (ii) i={i} b", f"x{c} e{b}", f"t{c} e{c} e{b}")
        T.add(f"mix (iii) i={i} a", f"e{b} e{a} t{b}", f"e{b} e{c} t{c}")
        T.add(f"mix (iii) i={i} b", f"t{b} e{a} e{b}", f"t{c} e{c} e{b}")
        T.add(f"rec (i) i={i}", f"x{2*i+1}",
              f"{s(i)} x{2*i-1} {s(i)} + x{2*i} e{2*i} + e{2*i} x{2*i} - x{2*i-1} e{2*i} - t{2*i}")
        T.add(f"rec (ii) i={i}", f"x{2*i+2}",
              f"{s(i)} x{2*i} {s(i)} - {s(i)} x{2*i} e{2*i} - e{2*i} x{2*i} {s(i)}"
              f" + e{2*i} x{2*i} e{2*i+1} e{2*i} + t{2*i+1}")
        T.add(f"prep (i) i={i}", f"e{2*i} x{2*i} e{2*i}", "0")
    for i in range(2, k):
        si, sm = s(i), s(i - 1)
        E, F = f"e{2*i-2}", f"e{2*i}"
        X = f"x{2*i-2}"
        T.add(f"prep (ii) i={i}", f"{F} t{2*i-1} {F}", "0")
        T.add(f"prep (iii) i={i}", f"{E} t{2*i} {E}", "0")
        T.add(f"prep (iv) i={i}", f"{E} t{2*i}", f"{E} {X} {si} {E} {si}")
        T.add(f"prep (v) i={i}", f"t{2*i} {E}", f"{si} {E} {si} {X} {E}")
        T.add(f"prep (vi) i={i}", f"t{2*i} t{2*i-2} t{2*i} {E}",
              f"{E} {X} {sm} {F} e{2*i-1} {E}")
        T.add(f"prep (vii) i={i}", f"t{2*i-1} {F} {sm}",
              f"{si} {E} e{2*i-1} {F} {sm} {X} {E} {si}")
        T.add(f"prep (viii) i={i}", f"t{2*i} t{2*i-2} t{2*i} {E}", f"{E} t{2*i} t{2*i-2} t{2*i}")
        T.add(f"tau rec even i={i}", f"t{2*i}",
              f"{sm} {si} t{2*i-2} {si} {sm} + {E} {X} {si} {E} {si} + {si} {E} {X} {si} {E}"
              f" - {E} {X} {sm} {F} e{2*i-1} {E} - {si} {E} e{2*i-1} {F} {sm} {X} {E} {si}")
        T.add(f"tau rec odd i={i}", f"t{2*i+1}",
              f"{sm} {si} t{2*i-1} {si} {sm} + {si} {E} {X} {si} {E} {si} + {E} {X} {si} {E}"
              f" - {si} {E} {X} {sm} {F} e{2*i-1} {E} - {E} e{2*i-1} {F} {sm} {X} {E} {si}")
    for label, l, r in cost_com(k):
        T.add("costcom " + label, l, r)
    for label, l, r in cost_com_powers(k, nmax):
        T.add("powers " + label, l, r)
    return T.rows


def defining_table(k, lmax=3):
    return affine_table(k, "aff", lmax=lmax)


def full_affine_suite(k, nmax=3, lmax=3):
    return ([("rel " + a, b, c) for a, b, c in defining_table(k, lmax)]
            + [("derived " + a, b, c) for a, b, c in affine_derived(k, nmax)])
