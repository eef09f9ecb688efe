"""The Heisenberg diagram category: oriented string diagrams reduced to the
normal-form basis of bubbles, dotted targets and simple diagrams.

Objects are tuples over UP = 1 and DOWN = -1. A basis diagram stores its
matching with endpoint codes: top position i (0-based) is ``i`` and bottom
position j is ``~j``. Public JSON and layer formats use 1-based positions.

Reduction folds elementary layers (crossing, cup, cap, dot) one at a time
onto normal forms. Each fold peels a layer off the normal form, applies a
local relation, and recurses on a smaller diagram. Layers below a diagram
are handled through the 180 degree rotation symmetry.
"""
from __future__ import annotations

import itertools
import json
import os
import random
import sys
from fractions import Fraction

UP, DOWN = 1, -1


class RelationBudgetExceeded(RuntimeError):
    pass


class MalformedDiagram(ValueError):
    pass


def word(spec) -> tuple:
    """Object word from a string over u/d (or arrows) or a sequence of +-1."""
    if isinstance(spec, str):
        table = {"u": UP, "U": UP, "↑": UP, "d": DOWN, "D": DOWN, "↓": DOWN}
        try:
            return tuple(table[ch] for ch in spec if not ch.isspace())
        except KeyError as exc:
            raise MalformedDiagram(f"bad object word {spec!r}") from exc
    out = tuple(int(x) for x in spec)
    if any(x not in (UP, DOWN) for x in out):
        raise MalformedDiagram(f"bad object word {spec!r}")
    return out


def word_str(w) -> str:
    return "".join("u" if x == UP else "d" for x in w)


def up_down(k: int) -> tuple:
    return (UP, DOWN) * k


def _rot_word(w):
    return tuple(-x for x in reversed(w))


def _bmul(b1, b2):
    if not b2:
        return b1
    if not b1:
        return b2
    return tuple(sorted(b1 + b2))


class BasisDiagram:
    """Dotted simple diagram r^s alpha r^t; dots sit on target endpoints."""

    __slots__ = ("top", "bottom", "tp", "bp", "td", "bd", "_h")

    def __init__(self, top, bottom, tp, bp, td, bd):
        self.top, self.bottom = top, bottom
        self.tp, self.bp, self.td, self.bd = tp, bp, td, bd
        self._h = hash((top, bottom, tp, bp, td, bd))

    def _key(self):
        return (self.top, self.bottom, self.tp, self.bp, self.td, self.bd)

    def __eq__(self, other):
        return isinstance(other, BasisDiagram) and self._key() == other._key()

    def __hash__(self):
        return self._h

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self.top), len(self.bottom), self.top, self.bottom, self.tp, self.bp,
                self.td, self.bd)

    @classmethod
    def build(cls, top, bottom, pairs, td=None, bd=None):
        n, m = len(top), len(bottom)
        tp, bp = [None] * n, [None] * m
        for e, f in pairs:
            for x, y in ((e, f), (f, e)):
                if x >= 0:
                    tp[x] = y
                else:
                    bp[~x] = y
        td = tuple(td) if td is not None else (0,) * n
        bd = tuple(bd) if bd is not None else (0,) * m
        return cls(tuple(top), tuple(bottom), tuple(tp), tuple(bp), td, bd)

    @classmethod
    def identity(cls, w):
        w = tuple(w)
        return cls.build(w, w, [(i, ~i) for i in range(len(w))])

    @classmethod
    def from_matching(cls, top, bottom, pairs, top_dots=None, bottom_dots=None):
        """Pairs of 1-based endpoints (pos, row), row 1 top and row 0 bottom."""
        top, bottom = word(top), word(bottom)
        codes = []
        seen = set()
        for pair in pairs:
            if len(pair) != 2:
                raise MalformedDiagram(f"bad pair {pair!r}")
            cc = []
            for pos, row in pair:
                pos, row = int(pos), int(row)
                size = len(top) if row == 1 else len(bottom)
                if row not in (0, 1) or not 1 <= pos <= size:
                    raise MalformedDiagram(f"endpoint {(pos, row)} out of range")
                c = pos - 1 if row == 1 else ~(pos - 1)
                if c in seen:
                    raise MalformedDiagram(f"endpoint {(pos, row)} repeated")
                seen.add(c)
                cc.append(c)
            codes.append(tuple(cc))
        if len(seen) != len(top) + len(bottom):
            raise MalformedDiagram("matching does not cover every endpoint")
        d = cls.build(top, bottom, codes, top_dots, bottom_dots)
        d.check()
        return d

    def arrow(self, e):
        return self.top[e] if e >= 0 else self.bottom[~e]

    def is_target(self, e):
        return self.top[e] == UP if e >= 0 else self.bottom[~e] == DOWN

    def partner(self, e):
        return self.tp[e] if e >= 0 else self.bp[~e]

    def check(self):
        for e, f in self.pairs():
            same_row = (e >= 0) == (f >= 0)
            if same_row == (self.arrow(e) == self.arrow(f)):
                raise MalformedDiagram("matching violates the orientation condition")
        for i, d in enumerate(self.td):
            if d < 0 or (d and not self.is_target(i)):
                raise MalformedDiagram(f"top dots at source endpoint {i + 1}")
        for j, d in enumerate(self.bd):
            if d < 0 or (d and not self.is_target(~j)):
                raise MalformedDiagram(f"bottom dots at source endpoint {j + 1}")

    def pairs(self):
        out = []
        for i, f in enumerate(self.tp):
            if f < 0 or f > i:
                out.append((i, f))
        for j, f in enumerate(self.bp):
            if f < 0 and ~f > j:
                out.append((~j, f))
        return out

    def _cpos(self, e):
        return e if e >= 0 else len(self.top) + len(self.bottom) - 1 - ~e

    def crosses(self, e, f):
        """Whether the chords through endpoints e and f cross."""
        a1, b1 = sorted((self._cpos(e), self._cpos(self.partner(e))))
        a2, b2 = sorted((self._cpos(f), self._cpos(self.partner(f))))
        return (a1 < a2 < b1) != (a1 < b2 < b1)

    def chord_crossed(self, e):
        pe = self.partner(e)
        return any(f not in (e, pe) and self.crosses(e, f) for f, _ in self.pairs())

    def crossing_count(self):
        ps = self.pairs()
        return sum(1 for a, b in itertools.combinations(ps, 2) if self.crosses(a[0], b[0]))

    def has_crossing(self):
        ps = self.pairs()
        return any(self.crosses(a[0], b[0]) for a, b in itertools.combinations(ps, 2))

    def top_crossing(self, q):
        return self.tp[q] != q + 1 and self.crosses(q, q + 1)

    def is_dotless(self):
        return not any(self.td) and not any(self.bd)

    def dotless(self):
        n, m = len(self.top), len(self.bottom)
        return BasisDiagram(self.top, self.bottom, self.tp, self.bp, (0,) * n, (0,) * m)

    # edits

    def _remap(self, top, f_top, td, pairs_extra=()):
        pairs = []
        for e, g in self.pairs():
            e2 = f_top(e) if e >= 0 else e
            g2 = f_top(g) if g >= 0 else g
            if e2 is None or g2 is None:
                continue
            pairs.append((e2, g2))
        pairs.extend(pairs_extra)
        return BasisDiagram.build(top, self.bottom, pairs, td, self.bd)

    def with_top_dot(self, i, delta):
        td = list(self.td)
        td[i] += delta
        return BasisDiagram(self.top, self.bottom, self.tp, self.bp, tuple(td), self.bd)

    def add_dot(self, e):
        if e >= 0:
            return self.with_top_dot(e, 1)
        bd = list(self.bd)
        bd[~e] += 1
        return BasisDiagram(self.top, self.bottom, self.tp, self.bp, self.td, tuple(bd))

    def strip_top_dots(self):
        return BasisDiagram(self.top, self.bottom, self.tp, self.bp, (0,) * len(self.top), self.bd)

    def swap_top(self, q):
        def f(e):
            return q + 1 if e == q else q if e == q + 1 else e
        top = list(self.top)
        top[q], top[q + 1] = top[q + 1], top[q]
        td = list(self.td)
        td[q], td[q + 1] = td[q + 1], td[q]
        return self._remap(tuple(top), f, td)

    def remove_top_arc(self, q):
        def f(e):
            return None if e in (q, q + 1) else (e - 2 if e > q + 1 else e)
        top = self.top[:q] + self.top[q + 2:]
        td = self.td[:q] + self.td[q + 2:]
        return self._remap(top, f, td)

    def insert_top_arc(self, q, left):
        top = self.top[:q] + (left, -left) + self.top[q:]
        td = self.td[:q] + (0, 0) + self.td[q:]
        return self._remap(top, lambda e: e + 2 if e >= q else e, td, [(q, q + 1)])

    def join_top(self, q):
        s, t = self.tp[q], self.tp[q + 1]
        s2 = s if s < 0 else (s - 2 if s > q + 1 else s)
        t2 = t if t < 0 else (t - 2 if t > q + 1 else t)
        top = self.top[:q] + self.top[q + 2:]
        td = self.td[:q] + self.td[q + 2:]
        pairs = []
        for e, g in self.pairs():
            if e in (q, q + 1) or g in (q, q + 1):
                continue
            pairs.append(((e - 2 if e > q + 1 else e), (g - 2 if g > q + 1 else g)))
        pairs.append((s2, t2))
        return BasisDiagram.build(top, self.bottom, pairs, td, self.bd)

    def rotate(self):
        n, m = len(self.top), len(self.bottom)

        def f(e):
            return ~(n - 1 - e) if e >= 0 else m - 1 - ~e
        pairs = [(f(e), f(g)) for e, g in self.pairs()]
        return BasisDiagram.build(_rot_word(self.bottom), _rot_word(self.top), pairs,
                                  tuple(reversed(self.bd)), tuple(reversed(self.td)))

    def tensor(self, other):
        n, m = len(self.top), len(self.bottom)

        def f(e):
            return e + n if e >= 0 else ~(~e + m)
        pairs = self.pairs() + [(f(e), f(g)) for e, g in other.pairs()]
        return BasisDiagram.build(self.top + other.top, self.bottom + other.bottom, pairs,
                                  self.td + other.td, self.bd + other.bd)

    def top_peels(self):
        """Elementary layers L with self = L o rest, as (layer, rest)."""
        out = []
        n = len(self.top)
        for q in range(n):
            if self.td[q]:
                out.append((("dot", q), self.with_top_dot(q, -1)))
        for q in range(n - 1):
            if self.td[q] or self.td[q + 1]:
                continue
            if self.tp[q] == q + 1:
                out.append((("cup", q, self.top[q]), self.remove_top_arc(q)))
            elif self.crosses(q, q + 1):
                out.append((("X", q), self.swap_top(q)))
        return out

    # public views

    def matching(self):
        """Pairs of 1-based endpoints (pos, row), canonically sorted."""
        def ep(e):
            return (e + 1, 1) if e >= 0 else (~e + 1, 0)
        return sorted(tuple(sorted((ep(e), ep(f)), key=lambda p: (-p[1], p[0])))
                      for e, f in self.pairs())

    @property
    def top_dots(self):
        return self.td

    @property
    def bottom_dots(self):
        return self.bd

    def to_json(self):
        return {"top": word_str(self.top), "bottom": word_str(self.bottom),
                "matching": [[list(a), list(b)] for a, b in self.matching()],
                "top_dots": list(self.td), "bottom_dots": list(self.bd)}

    @classmethod
    def from_json(cls, data):
        return cls.from_matching(data["top"], data["bottom"], data["matching"],
                                 data.get("top_dots"), data.get("bottom_dots"))

    def __repr__(self):
        dots = ""
        if any(self.td) or any(self.bd):
            dots = f" td={list(self.td)} bd={list(self.bd)}"
        return (f"<{word_str(self.bottom)}->{word_str(self.top)} "
                f"{self.matching()}{dots}>")


def _acc(out, comb, coef=1, bub=()):
    for (b, d), c in comb.items():
        key = (_bmul(b, bub), d)
        v = out.get(key, 0) + c * coef
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def _slide_coef(u, v, which):
    """c in X o dot_below = dot_above o X + c Res, for the strand starting at
    bottom position q + which of a crossing with bottom word (u, v)."""
    da = (1, 1) if u == UP else (-1, -1)
    db = (-1, 1) if v == UP else (1, -1)
    s, t = (da, db) if which == 0 else (db, da)
    sgn = 1 if s[0] * t[1] - s[1] * t[0] > 0 else -1
    return sgn if (u if which == 0 else v) == UP else -sgn


_CCW = {0: {(): 1}, 1: {}}


def ccw_table(w):
    """Anticlockwise w-dotted bubble as {cw monomial: coef}, from
    C~(t) = 1 + t^2 C~(t) C(t)."""
    if w not in _CCW:
        out = {}
        for a in range(w - 1):
            for mono, c in ccw_table(a).items():
                _acc_mono(out, _bmul(mono, (w - 2 - a,)), c)
        _CCW[w] = out
    return _CCW[w]


def _acc_mono(out, mono, c):
    v = out.get(mono, 0) + c
    if v:
        out[mono] = v
    else:
        out.pop(mono, None)


def default_budget():
    raw = os.environ.get("RELATION_STEP_BUDGET", "")
    try:
        return int(raw) if raw.strip() else 10 ** 6
    except ValueError:
        return 10 ** 6


class Engine:
    """Local-relation rewriting with memoised layer application.

    With an ``rng``, the choice among valid peels is randomised; every
    choice is sound, so results must agree with the deterministic engine.
    """

    def __init__(self, budget=None, rng=None):
        self.budget = budget
        self.rng = rng
        self.memo = {}
        self.steps = 0
        self.depth = 0
        if sys.getrecursionlimit() < 20000:
            sys.setrecursionlimit(20000)

    def __enter__(self):
        if self.depth == 0:
            self.steps = 0
        self.depth += 1
        return self

    def __exit__(self, *exc):
        self.depth -= 1
        return False

    def _tick(self):
        self.steps += 1
        budget = self.budget if self.budget is not None else default_budget()
        if self.steps > budget:
            raise RelationBudgetExceeded(
                f"rewriting exceeded the step budget of {budget} steps")

    def _choose(self, options):
        if self.rng is None or len(options) == 1:
            return options[0]
        return self.rng.choice(options)

    def then(self, layer, comb):
        out = {}
        for (b, d), c in comb.items():
            _acc(out, self.top(layer, d), c, b)
        return out

    def rotate(self, comb):
        """Rotate each term; bubbles land on the far right and slide back."""
        out = {}
        for (b, d), c in comb.items():
            r = d.rotate()
            _acc(out, self.bubbles(b, len(r.top), r) if b else {((), r): 1}, c)
        return out

    def below(self, layer_r, comb):
        """Apply a layer underneath, given as a top layer of the rotation."""
        out = {}
        for (b, d), c in comb.items():
            _acc(out, self.rotate(self.top(layer_r, d.rotate())), c, b)
        return out

    def top(self, layer, d):
        key = (layer, d)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        kind = layer[0]
        if kind == "dot":
            res = self._dot(layer[1], d)
        elif kind == "X":
            res = self._cross(layer[1], d)
        elif kind == "cap":
            res = self._cap(layer[1], d)
        elif kind == "cup":
            res = {((), d.insert_top_arc(layer[1], layer[2])): 1}
        else:
            raise MalformedDiagram(f"unknown layer {layer!r}")
        self.memo[key] = res
        return res

    def _reapply_dots(self, res, dots):
        for q, cnt in dots:
            for _ in range(cnt):
                res = self.then(("dot", q), res)
        return res

    def _res(self, q, d):
        u, v = d.top[q], d.top[q + 1]
        if u == v:
            return {((), d): 1}
        return self.then(("cup", q, v), self.top(("cap", q), d))

    def _bottom_options(self, d):
        r = d.rotate()
        return [("bottom", lr, r1.rotate()) for lr, r1 in r.top_peels()]

    def _dot(self, i, d):
        if d.top[i] == UP:
            return {((), d.with_top_dot(i, 1)): 1}
        if any(d.td):
            res = self.top(("dot", i), d.strip_top_dots())
            return self._reapply_dots(res, [(q, c) for q, c in enumerate(d.td) if c])
        if not d.chord_crossed(i):
            return {((), d.add_dot(d.tp[i])): 1}
        n = len(d.top)
        options = [("adj", q) for q in (i, i - 1) if 0 <= q < n - 1 and d.top_crossing(q)]
        for q in range(n - 1):
            if i in (q, q + 1):
                continue
            if d.tp[q] == q + 1:
                options.append(("cup", q))
            elif d.crosses(q, q + 1):
                options.append(("X", q))
        options += self._bottom_options(d)
        opt = self._choose(options)
        if opt[0] == "adj":
            q = opt[1]
            d1 = d.swap_top(q)
            ip = 2 * q + 1 - i
            c = _slide_coef(d1.top[q], d1.top[q + 1], ip - q)
            res = self.then(("X", q), self.top(("dot", ip), d1))
            return _acc(res, self._res(q, d1), -c)
        if opt[0] == "cup":
            q = opt[1]
            d1 = d.remove_top_arc(q)
            i2 = i if i < q else i - 2
            return self.then(("cup", q, d.top[q]), self.top(("dot", i2), d1))
        if opt[0] == "X":
            q = opt[1]
            return self.then(("X", q), self.top(("dot", i), d.swap_top(q)))
        _, lr, d1 = opt
        return self.below(lr, self.top(("dot", i), d1))

    def _cross(self, p, d):
        u, v = d.top[p], d.top[p + 1]
        for which in (0, 1):
            pos = p + which
            if d.td[pos]:
                d1 = d.with_top_dot(pos, -1)
                res = self.then(("dot", p + 1 - which), self.top(("X", p), d1))
                return _acc(res, self._res(p, d1), _slide_coef(u, v, which))
        if d.tp[p] == p + 1:
            if u != UP:
                return {}
            new = d.remove_top_arc(p).insert_top_arc(p, v)
            return self.top(("dot", p if v == UP else p + 1), new)
        d1 = d.swap_top(p)
        if not d.crosses(p, p + 1):
            return {((), d1): 1}
        if (v, u) != (DOWN, UP):
            return {((), d1): 1}
        res = {((), d1): 1}
        return _acc(res, self.then(("cup", p, DOWN), self.top(("cap", p), d1)), -1)

    def _cap(self, p, d):
        if d.top[p] != -d.top[p + 1]:
            raise MalformedDiagram(f"cap at {p + 1} needs opposite arrows")
        if d.tp[p] == p + 1:
            dots = d.td[p] + d.td[p + 1]
            d1 = d.remove_top_arc(p)
            if d.top[p] == UP:
                return self.bubble(dots, p, d1)
            out = {}
            for mono, c in ccw_table(dots).items():
                _acc(out, self.bubbles(mono, p, d1), c)
            return out
        t = p if d.top[p] == UP else p + 1
        s = 2 * p + 1 - t
        if d.td[t]:
            return self.then(("cap", p), self.top(("dot", s), d.with_top_dot(t, -1)))
        if any(d.td):
            res = self.top(("cap", p), d.strip_top_dots())
            dots = [(q if q < p else q - 2, c) for q, c in enumerate(d.td) if c]
            return self._reapply_dots(res, dots)
        if d.crosses(p, p + 1):
            if d.top[p] != UP:
                return {}
            return self.then(("cap", p), self.top(("dot", p), d.swap_top(p)))
        if not d.has_crossing():
            return {((), d.join_top(p)): 1}
        n = len(d.top)
        for q in (p - 1, p + 1):
            if 0 <= q < n - 1 and d.tp[q] == q + 1:
                return {((), d.remove_top_arc(q)): 1}
        options = []
        for q in range(n - 1):
            if not (q + 1 < p or q > p + 1):
                continue
            if d.tp[q] == q + 1:
                options.append(("cup", q))
            elif d.crosses(q, q + 1):
                options.append(("X", q))
        options += self._bottom_options(d)
        if options:
            opt = self._choose(options)
            if opt[0] in ("cup", "X"):
                q = opt[1]
                q2 = q if q < p else q - 2
                if opt[0] == "cup":
                    p2 = p - 2 if q < p else p
                    return self.then(("cup", q2, d.top[q]), self.top(("cap", p2), d.remove_top_arc(q)))
                return self.then(("X", q2), self.top(("cap", p), d.swap_top(q)))
            _, lr, d1 = opt
            return self.below(lr, self.top(("cap", p), d1))
        if p + 2 < n and d.top_crossing(p + 1):
            return self.then(("cap", p + 1), self.top(("X", p), d.swap_top(p + 1)))
        if p >= 1 and d.top_crossing(p - 1):
            return self.then(("cap", p - 1), self.top(("X", p), d.swap_top(p - 1)))
        raise RuntimeError(f"no rewriting move for cap at {p + 1} on {d!r}")

    def bubble(self, w, g, d):
        """A clockwise w-dotted bubble placed at top gap g of d, slid left."""
        key = (("bub", w, g), d)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        if g == 0:
            res = {((w,), d): 1}
        else:
            i = g - 1
            one = {((), d): 1}

            def dots(cnt, comb):
                for _ in range(cnt):
                    comb = self.then(("dot", i), comb)
                return comb
            res = dict(self.bubble(w, g - 1, d))
            if d.top[i] == UP:
                _acc(res, dots(w, one), -(w + 1))
                for j in range(w - 1):
                    _acc(res, dots(w - 2 - j, self.bubble(j, g, d)), w - 1 - j)
            else:
                _acc(res, dots(w, one), w + 1)
                for j in range(w - 1):
                    _acc(res, dots(w - 2 - j, self.bubble(j, g - 1, d)), -(w - 1 - j))
        self.memo[key] = res
        return res

    def bubbles(self, mono, g, d):
        comb = {((), d): 1}
        for w in mono:
            out = {}
            for (b, dd), c in comb.items():
                _acc(out, self.bubble(w, g, dd), c, b)
            comb = out
        return comb

    def fold(self, layers, comb):
        with self:
            for layer in layers:
                comb = self.then(layer, comb)
        return comb


_ENGINE = Engine()


def default_engine():
    return _ENGINE


def _rot_layer(layer, n):
    """Rotation of a top layer acting on a word of length n, as a layer
    acting on top of the rotated word."""
    kind = layer[0]
    if kind == "X":
        return ("X", n - 2 - layer[1])
    if kind == "dot":
        return ("dot", n - 1 - layer[1])
    if kind == "cup":
        return ("cap", n - layer[1])
    raise ValueError(f"cannot rotate {layer!r}")


def _layer_out(layer, w):
    """Codomain word of a layer applied to word w; raises if ill-formed."""
    kind, p = layer[0], layer[1]
    n = len(w)
    if kind == "X":
        if not 0 <= p < n - 1:
            raise MalformedDiagram(f"crossing at {p + 1} outside a word of length {n}")
        return w[:p] + (w[p + 1], w[p]) + w[p + 2:]
    if kind == "dot":
        if not 0 <= p < n:
            raise MalformedDiagram(f"dot at {p + 1} outside a word of length {n}")
        return w
    if kind == "cup":
        if not 0 <= p <= n or layer[2] not in (UP, DOWN):
            raise MalformedDiagram(f"bad cup {layer!r} on a word of length {n}")
        return w[:p] + (layer[2], -layer[2]) + w[p:]
    if kind == "cap":
        if not 0 <= p < n - 1 or w[p] != -w[p + 1]:
            raise MalformedDiagram(f"cap at {p + 1} needs opposite arrows")
        return w[:p] + w[p + 2:]
    raise MalformedDiagram(f"unknown layer {layer!r}")


_LAYER_NAMES = {"X": "cross", "dot": "dot", "cup": "cup", "cap": "cap"}


class SliceDiagram:
    """A diagram as a bottom-to-top list of elementary layers."""

    def __init__(self, domain, layers=()):
        self.domain = word(domain)
        self.layers = tuple(tuple(x) for x in layers)
        w = self.domain
        for layer in self.layers:
            w = _layer_out(layer, w)
        self.codomain = w

    def then(self, other):
        """other stacked on top of self."""
        if other.domain != self.codomain:
            raise MalformedDiagram("slice boundaries do not match")
        return SliceDiagram(self.domain, self.layers + other.layers)

    def to_json(self):
        out = []
        for layer in self.layers:
            item = {"op": _LAYER_NAMES[layer[0]], "at": layer[1] + 1}
            if layer[0] == "cup":
                item["left"] = "u" if layer[2] == UP else "d"
            out.append(item)
        return {"domain": word_str(self.domain), "layers": out}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            layers = []
            for item in data["layers"]:
                op, at = item["op"], int(item["at"]) - 1
                if op == "cross":
                    layers.append(("X", at))
                elif op in ("dot", "cap"):
                    layers.append((op, at))
                elif op == "cup":
                    layers.append(("cup", at, word(item["left"])[0]))
                else:
                    raise MalformedDiagram(f"unknown op {op!r}")
            return cls(data.get("domain", ""), layers)
        except (KeyError, TypeError, IndexError) as exc:
            raise MalformedDiagram(f"bad slice diagram: {exc}") from exc

    def __repr__(self):
        return f"SliceDiagram({word_str(self.domain)!r}, {list(self.layers)})"


def circle(clockwise=True, dots=0):
    """A closed loop on the empty object."""
    left = UP if clockwise else DOWN
    layers = [("cup", 0, left)] + [("dot", 0)] * dots + [("cap", 0)]
    return SliceDiagram((), layers)


class HeisMorphism:
    """Integer combination of bubble monomials times basis diagrams."""

    __slots__ = ("dom", "cod", "terms")

    def __init__(self, dom, cod, terms=None):
        self.dom, self.cod = tuple(dom), tuple(cod)
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def identity(cls, w):
        w = word(w) if isinstance(w, str) else tuple(w)
        return cls(w, w, {((), BasisDiagram.identity(w)): 1})

    @classmethod
    def zero(cls, dom, cod):
        return cls(dom, cod)

    @classmethod
    def basis(cls, d, bubbles=(), coef=1):
        return cls(d.bottom, d.top, {(tuple(sorted(bubbles)), d): coef})

    @classmethod
    def bubble(cls, w):
        return cls((), (), {((w,), BasisDiagram.identity(())): 1})

    def _like(self, terms):
        return HeisMorphism(self.dom, self.cod, terms)

    def __add__(self, other):
        if not isinstance(other, HeisMorphism):
            if other == 0:
                return self
            other = HeisMorphism.identity(self.dom) * other
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise MalformedDiagram("cannot add morphisms of different types")
        return self._like(_acc(dict(self.terms), other.terms))

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HeisMorphism):
            return compose(self, other)
        return self._like({k: v * other for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self._like({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, HeisMorphism):
            return (self.dom, self.cod) == (other.dom, other.cod) and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def rotate(self, engine=None):
        eng = engine or _ENGINE
        with eng:
            terms = eng.rotate(self.terms)
        return HeisMorphism(_rot_word(self.cod), _rot_word(self.dom), terms)

    def tensor(self, other):
        return tensor(self, other)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key()))

    def to_json(self):
        rows = []
        for (b, d), c in self.sorted_terms():
            c = Fraction(c)
            row = d.to_json()
            row.pop("top")
            row.pop("bottom")
            row["bubbles"] = list(b)
            row["coef"] = int(c) if c.denominator == 1 else str(c)
            rows.append(row)
        return {"domain": word_str(self.dom), "codomain": word_str(self.cod), "terms": rows}

    @classmethod
    def from_json(cls, data):
        dom, cod = word(data["domain"]), word(data["codomain"])
        terms = {}
        for row in data["terms"]:
            d = BasisDiagram.from_matching(cod, dom, row["matching"], row.get("top_dots"),
                                           row.get("bottom_dots"))
            key = (tuple(sorted(row.get("bubbles", []))), d)
            terms[key] = terms.get(key, 0) + Fraction(row.get("coef", 1))
        return cls(dom, cod, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (b, d), c in self.sorted_terms():
            bub = "".join(f"c{w}" for w in b)
            parts.append(f"{c}*{bub}{d!r}")
        return " + ".join(parts)


_SLICE_CACHE = {}


def slice_word(d: BasisDiagram):
    """Elementary layers (bottom to top) whose composite is d."""
    hit = _SLICE_CACHE.get(d)
    if hit is not None:
        return hit
    cur = d
    upper, lower = [], []
    while True:
        peels = cur.top_peels()
        if peels:
            layer, cur = peels[0]
            upper.append(layer)
            continue
        rp = cur.rotate().top_peels()
        if rp:
            lr, rest = rp[0]
            lower.append(_rot_layer(lr, len(rest.top)))
            cur = rest.rotate()
            continue
        break
    if cur != BasisDiagram.identity(cur.top):
        raise RuntimeError(f"peeling stalled at {cur!r}")
    out = (d.bottom, tuple(lower + upper[::-1]))
    _SLICE_CACHE[d] = out
    return out


def to_slice(d: BasisDiagram) -> SliceDiagram:
    dom, layers = slice_word(d)
    return SliceDiagram(dom, layers)


def reduce(x, engine=None) -> HeisMorphism:
    """Normal form of a SliceDiagram or a list of (coef, SliceDiagram)."""
    eng = engine or _ENGINE
    if isinstance(x, SliceDiagram):
        x = [(1, x)]
    x = list(x)
    if not x:
        raise MalformedDiagram("empty combination")
    dom, cod = x[0][1].domain, x[0][1].codomain
    out = {}
    with eng:
        for coef, sd in x:
            if (sd.domain, sd.codomain) != (dom, cod):
                raise MalformedDiagram("summands have different boundaries")
            start = {((), BasisDiagram.identity(sd.domain)): 1}
            _acc(out, eng.fold(sd.layers, start), coef)
    return HeisMorphism(dom, cod, out)


def _fold_onto(f, g, eng):
    out = {}
    for (bf, df), cf in f.terms.items():
        _, layers = slice_word(df)
        _acc(out, eng.fold(layers, g.terms), cf, bf)
    return out


def compose(f: HeisMorphism, g: HeisMorphism, engine=None) -> HeisMorphism:
    """f o g: f stacked on top of g."""
    if f.dom != g.cod:
        raise MalformedDiagram(
            f"boundary mismatch: {word_str(f.dom)} vs {word_str(g.cod)}")
    eng = engine or _ENGINE
    if not f.terms or not g.terms:
        return HeisMorphism(g.dom, f.cod)
    cost_f = sum(len(slice_word(d)[1]) for _, d in f.terms) * len(g.terms)
    cost_g = sum(len(slice_word(d)[1]) for _, d in g.terms) * len(f.terms)
    with eng:
        if cost_f <= cost_g:
            return HeisMorphism(g.dom, f.cod, _fold_onto(f, g, eng))
        rot = _fold_onto(g.rotate(eng), f.rotate(eng), eng)
        return HeisMorphism(g.dom, f.cod, eng.rotate(rot))


def tensor(f: HeisMorphism, g: HeisMorphism, engine=None) -> HeisMorphism:
    """f to the left of g. Bubbles of g are slid left across f."""
    eng = engine or _ENGINE
    out = {}
    with eng:
        for (bf, df), cf in f.terms.items():
            gap = len(df.top)
            for (bg, dg), cg in g.terms.items():
                comb = eng.bubbles(bg, gap, df.tensor(dg))
                _acc(out, comb, cf * cg, bf)
    return HeisMorphism(f.dom + g.dom, f.cod + g.cod, out)


def ccw_bubble_convert(w: int) -> HeisMorphism:
    """The anticlockwise w-dotted bubble in terms of clockwise bubbles."""
    if w < 0:
        raise ValueError("dot count must be non-negative")
    empty = BasisDiagram.identity(())
    return HeisMorphism((), (), {(mono, empty): c for mono, c in ccw_table(w).items()})


# images of the affine generators


def _split(tok):
    from .words import split_token
    return split_token(tok)


def phi_generator(tok: str, k: int) -> HeisMorphism:
    name, i = _split(tok)
    w = up_down(k)
    n = 2 * k
    ident = [(a, ~a) for a in range(n)]

    def with_pairs(drop, extra, td=None, bd=None):
        pairs = [pr for pr in ident if pr[0] not in drop] + extra
        return HeisMorphism.basis(BasisDiagram.build(w, w, pairs, td, bd))

    if name == "e" and i is not None and 1 <= i <= n - 1:
        a = i - 1
        return with_pairs({a, a + 1}, [(a, a + 1), (~a, ~(a + 1))])
    if name == "x" and i is not None and 1 <= i <= n:
        a = i - 1
        dots = [0] * n
        dots[a] = 1
        if i % 2:
            return with_pairs(set(), [], td=dots)
        return with_pairs(set(), [], bd=dots)
    if name == "t" and i is not None and 2 <= i <= n - 1:
        a = i - 2
        return with_pairs({a, a + 1, a + 2}, [(a + 2, ~a), (a, ~(a + 2)), (a + 1, ~(a + 1))])
    if name == "z" and i is not None and i >= 0:
        return HeisMorphism(w, w, {((i,), BasisDiagram.identity(w)): 1})
    if name == "s" and i is not None and 1 <= i <= k - 1:
        return phi_generator(f"t{2*i}", k) * phi_generator(f"t{2*i+1}", k) + \
            phi_generator(f"e{2*i}", k)
    raise ValueError(f"illegal generator {tok!r} for k={k}")


def phi_word(tokens, k, engine=None) -> HeisMorphism:
    out = HeisMorphism.identity(up_down(k))
    for tok in tokens:
        out = compose(out, phi_generator(tok, k), engine)
    return out


# combinatorics of simple diagrams


def simple_diagrams(a, b) -> list:
    """One dotless simple (a, b)-diagram per matching; a is the bottom word."""
    a, b = word(a) if isinstance(a, str) else tuple(a), word(b) if isinstance(b, str) else tuple(b)
    sources = [~j for j, x in enumerate(a) if x == UP] + [i for i, x in enumerate(b) if x == DOWN]
    targets = [~j for j, x in enumerate(a) if x == DOWN] + [i for i, x in enumerate(b) if x == UP]
    if len(sources) != len(targets):
        return []
    out = [BasisDiagram.build(b, a, list(zip(sources, perm)))
           for perm in itertools.permutations(targets)]
    return sorted(out)


def degree(d: BasisDiagram):
    """(number of arcs, number of clockwise arcs)."""
    arcs = cw = 0
    for e, f in d.pairs():
        if (e >= 0) != (f >= 0):
            continue
        arcs += 1
        if e >= 0:
            left = min(e, f)
            cw += d.top[left] == UP
        else:
            left = min(~e, ~f)
            cw += d.bottom[left] == UP
    return (arcs, cw)


def filtration_key(d: BasisDiagram):
    """Order under which correction terms of a split product rise: more arcs,
    then fewer clockwise arcs. Ordering by degree itself fails from k = 3."""
    arcs, cw = degree(d)
    return (arcs, -cw)


def is_planar(d: BasisDiagram) -> bool:
    return not d.has_crossing()


def cycle_to_perm(cycle, k):
    """One-line tuple of a single cycle such as (1, 2, 3) in S(k)."""
    img = list(range(1, k + 1))
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        img[a - 1] = b
    return tuple(img)


def pi_up(perm) -> BasisDiagram:
    """Pairs (2i-1, bottom) with (2 perm(i) - 1, top); even strands vertical."""
    k = len(perm)
    pairs = [(2 * perm[i] - 2, ~(2 * i)) for i in range(k)] + [(2 * i + 1, ~(2 * i + 1)) for i in range(k)]
    return BasisDiagram.build(up_down(k), up_down(k), pairs)


def pi_down(perm) -> BasisDiagram:
    """Pairs (2 perm(i), bottom) with (2i, top); odd strands vertical."""
    k = len(perm)
    pairs = [(2 * i + 1, ~(2 * perm[i] - 1)) for i in range(k)] + [(2 * i, ~(2 * i)) for i in range(k)]
    return BasisDiagram.build(up_down(k), up_down(k), pairs)


# surjectivity: explicit preimages under phi


_EXACT_WORDS = {}


def _exact_words(k, tokens):
    """Breadth-first search over words in the given phi-generators; keeps
    the first word whose product is a single basis diagram with coefficient
    one and no bubbles."""
    key = (k, tuple(tokens))
    if key in _EXACT_WORDS:
        return _EXACT_WORDS[key]
    gens = [(tok, phi_generator(tok, k)) for tok in tokens]
    start = BasisDiagram.identity(up_down(k))
    found = {start: ()}
    frontier = [(start, HeisMorphism.basis(start))]
    while frontier:
        nxt = []
        for d, mor in frontier:
            for tok, g in gens:
                prod = compose(mor, g)
                if len(prod.terms) != 1:
                    continue
                (b, d2), c = next(iter(prod.terms.items()))
                if b or c != 1 or d2 in found:
                    continue
                found[d2] = found[d] + (tok,)
                nxt.append((d2, prod))
        frontier = nxt
    _EXACT_WORDS[key] = found
    return found


def jones_planar_factorize(beta: BasisDiagram) -> list:
    """Tokens e_j whose phi-product is exactly the planar diagram beta."""
    if not beta.is_dotless() or beta.has_crossing():
        raise ValueError("input is not a planar dotless diagram")
    n = len(beta.top)
    if n % 2 or beta.top != up_down(n // 2) or beta.bottom != beta.top:
        raise ValueError("planar factorisation is implemented for End((ud)^k)")
    k = n // 2
    words = _exact_words(k, [f"e{j}" for j in range(1, 2 * k)])
    if beta not in words:
        raise ValueError(f"no bubble-free e-word found for {beta!r}")
    return list(words[beta])


def planar_diagrams(k):
    return [d for d in simple_diagrams(up_down(k), up_down(k)) if not d.has_crossing()]


def _perm_word(perm, kind):
    k = len(perm)
    if kind == "up":
        toks, target = [f"t{2*i}" for i in range(1, k)], pi_up(perm)
    else:
        toks, target = [f"t{2*i+1}" for i in range(1, k)], pi_down(perm)
    words = _exact_words(k, toks)
    if target not in words:
        raise ValueError(f"no correction-free word for {target!r}")
    return list(words[target])


def _swap_values(perm, m):
    return tuple(m + 1 if v == m else m if v == m + 1 else v for v in perm)


def decreasing_reduced_word(perm):
    """Indices m of s_m, grouped in increasing runs m..n whose ends n strictly
    decrease, such that applying the value swaps s_m left to right to the
    identity gives perm (one-line notation)."""
    perm = tuple(perm)
    k = len(perm)
    length = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])

    def search(cur, word, maxn):
        if cur == perm:
            return word
        if len(word) >= length:
            return None
        for n in range(maxn, 0, -1):
            for m in range(n, 0, -1):
                run = list(range(m, n + 1))
                p = cur
                for r in run:
                    p = _swap_values(p, r)
                found = search(p, word + run, n - 1)
                if found is not None:
                    return found
        return None
    return search(tuple(range(1, k + 1)), [], k - 1)


def split_permutations(alpha: BasisDiagram):
    """(pi, sigma, beta) with beta planar and alpha the simple diagram of
    pi^up beta sigma^down, keeping every arc orientation. Permutations are
    tried in lexicographic order."""
    n = len(alpha.top)
    k = n // 2
    perms = list(itertools.permutations(range(1, k + 1)))
    for pi in perms:
        for sigma in perms:
            beta = _unpermute(alpha, pi, sigma)
            if beta is not None:
                return pi, sigma, beta
    raise RuntimeError(f"no splitting found for {alpha!r}")


def _unpermute(alpha, pi, sigma):
    k = len(pi)

    def f(e):
        # alpha endpoint -> beta endpoint
        if e >= 0:
            if e % 2 == 0:
                return 2 * pi.index(e // 2 + 1)
            return e
        j = ~e
        if j % 2 == 1:
            return ~(2 * sigma.index((j + 1) // 2) + 1)
        return e
    pairs = []
    for e, g in alpha.pairs():
        e2, g2 = f(e), f(g)
        if (e >= 0) == (g >= 0):
            # an arc must keep its orientation, so its ends keep their order
            lo, hi = (e, g) if (e >= 0 and e < g) or (e < 0 and ~e < ~g) else (g, e)
            lo2, hi2 = f(lo), f(hi)
            if (lo2 if lo2 >= 0 else ~lo2) > (hi2 if hi2 >= 0 else ~hi2):
                return None
        pairs.append((e2, g2))
    beta = BasisDiagram.build(alpha.top, alpha.bottom, pairs)
    return None if beta.has_crossing() else beta


_DECOMP = {}


def decompose_endo(alpha: BasisDiagram, engine=None):
    """An affine element w with phi(w) equal to the simple diagram alpha."""
    from .affine import AffineElement
    if not alpha.is_dotless():
        raise ValueError("decompose_endo takes a dotless simple diagram")
    n = len(alpha.top)
    k = n // 2
    if n % 2 or alpha.top != up_down(k) or alpha.bottom != alpha.top:
        raise ValueError("decompose_endo works in End((ud)^k)")
    if alpha in _DECOMP:
        return _DECOMP[alpha]
    if not alpha.has_crossing():
        out = AffineElement.word(jones_planar_factorize(alpha), k)
        _DECOMP[alpha] = out
        return out
    pi, sigma, beta = split_permutations(alpha)
    toks = _perm_word(pi, "up") + jones_planar_factorize(beta) + _perm_word(sigma, "down")
    u = AffineElement.word(toks, k)
    prod = phi_word(toks, k, engine)
    if prod.terms.get(((), alpha)) != 1:
        raise RuntimeError(f"leading term missing in the product for {alpha!r}")
    deg = filtration_key(alpha)
    out = u
    for (b, d), c in prod.terms.items():
        if (b, d) == ((), alpha):
            continue
        if filtration_key(d.dotless()) <= deg:
            raise RuntimeError(f"correction term {d!r} does not raise the degree")
        out = out - preimage_term(b, d, engine) * c
    _DECOMP[alpha] = out
    return out


def preimage_term(bubbles, d, engine=None):
    """z-monomial * x^s * decompose_endo(alpha) * x^t for one basis term."""
    from .affine import AffineElement
    k = len(d.top) // 2
    left = [f"z{w}" for w in bubbles]
    for i, cnt in enumerate(d.td):
        left += [f"x{i + 1}"] * cnt
    right = []
    for j, cnt in enumerate(d.bd):
        right += [f"x{j + 1}"] * cnt
    core = decompose_endo(d.dotless(), engine)
    return AffineElement.word(left, k) * core * AffineElement.word(right, k)


def preimage(f: HeisMorphism, engine=None):
    """An affine element whose phi-image is f (f in End((ud)^k))."""
    from .affine import AffineElement
    k = len(f.dom) // 2
    out = AffineElement(k)
    for (b, d), c in f.sorted_terms():
        out = out + preimage_term(b, d, engine) * c
    return out


# generated families for property tests


def threaded_curl(threads, clockwise=False, left=()):
    """A curl on one strand whose loop encloses vertical strands of the
    given orientations, with extra vertical strands on its left. The
    anticlockwise curl is a left curl."""
    m, o = len(threads), len(left)
    if clockwise:
        layers = [("cup", o, UP)]
        layers += [("X", o + j) for j in range(1, m + 2)]
        layers += [("X", o + j) for j in range(1, m + 1)]
        layers += [("cap", o + m + 1)]
        return SliceDiagram(tuple(left) + (UP,) + tuple(threads), layers)
    layers = [("cup", o + m + 1, DOWN)]
    layers += [("X", o + j) for j in range(m, 0, -1)]
    layers += [("X", o + j) for j in range(m + 1, 0, -1)]
    layers += [("cap", o)]
    return SliceDiagram(tuple(left) + (DOWN,) + tuple(threads), layers)


def word_preserving_layers(w, length, rng):
    """Random dots and same-orientation crossings; the word is unchanged."""
    opts = [("dot", p) for p in range(len(w))]
    opts += [("X", p) for p in range(len(w) - 1) if w[p] == w[p + 1]]
    return [rng.choice(opts) for _ in range(length)] if opts else []


def random_layers(w, length, rng, allow_caps=True):
    """Random well-formed layers starting from word w."""
    layers = []
    w = tuple(w)
    for _ in range(length):
        n = len(w)
        opts = [("X", p) for p in range(n - 1)] + [("dot", p) for p in range(n)]
        if allow_caps:
            opts += [("cap", p) for p in range(n - 1) if w[p] == -w[p + 1]]
            if n < 4:
                opts += [("cup", p, a) for p in range(n + 1) for a in (UP, DOWN)]
        if not opts:
            break
        layer = rng.choice(opts)
        layers.append(layer)
        w = _layer_out(layer, w)
    return layers


def left_curl_family(count=50, seed=0):
    """Left curls threaded by 0-3 strands, with strands on the left and
    random word-preserving layers above and below."""
    rng = random.Random(seed)
    out = []
    for idx in range(count):
        threads = tuple(rng.choice((UP, DOWN)) for _ in range(idx % 4))
        left = tuple(rng.choice((UP, DOWN)) for _ in range(rng.randint(0, 2)))
        core = threaded_curl(threads, left=left)
        below = word_preserving_layers(core.domain, rng.randint(0, 3), rng)
        above = word_preserving_layers(core.codomain, rng.randint(0, 3), rng)
        out.append(SliceDiagram(core.domain, tuple(below) + core.layers + tuple(above)))
    return out
