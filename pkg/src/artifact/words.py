"""Noncommutative linear combinations of generator words.

Expressions are written as strings such as ``"t4 X3 t4 + e4 e3 t4 - 2 t4"``
or ``"t2 t4 t2 (1 - e2)"``. Adjacent factors multiply, ``^n`` is a power.
Tokens are an alphabetic name followed by an optional index, e.g. ``t4``,
``e3``, ``x2``, ``z1``, ``z``.
"""
from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z]+\d*)|(.))")


class ParseError(ValueError):
    pass


def _lex(text):
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {text[pos:]!r}")
        num, name, sym = m.groups()
        if num is not None:
            try:
                out.append(("num", Fraction(num)))
            except ZeroDivisionError as exc:
                raise ParseError(f"zero denominator in {num!r}") from exc
        elif name is not None:
            out.append(("gen", name))
        elif sym.strip():
            if sym not in "+-()^*":
                raise ParseError(f"unexpected character {sym!r}")
            out.append(("sym", sym))
        pos = m.end()
    return out


class LinComb(dict):
    """dict word(tuple of str) -> Fraction."""

    @classmethod
    def scalar(cls, c):
        return cls({(): Fraction(c)}) if c else cls()

    @classmethod
    def word(cls, *tokens):
        return cls({tuple(tokens): Fraction(1)})

    def __add__(self, other):
        out = LinComb(self)
        for w, c in other.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return out

    def __neg__(self):
        return LinComb({w: -c for w, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LinComb):
            other = LinComb.scalar(other)
        out = LinComb()
        for w1, c1 in self.items():
            for w2, c2 in other.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return out

    def __rmul__(self, c):
        return LinComb.scalar(c) * self

    def star(self):
        """Reverse every word."""
        return LinComb({tuple(reversed(w)): c for w, c in self.items()})

    def tokens(self):
        return {t for w in self for t in w}

    def __repr__(self):
        return format_lincomb(self)


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self):
        acc = LinComb()
        sign = 1
        kind, val = self.peek()
        if (kind, val) in (("sym", "+"), ("sym", "-")):
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val = self.peek()
            if (kind, val) == ("sym", "+"):
                self.take()
                acc = acc + self.term()
            elif (kind, val) == ("sym", "-"):
                self.take()
                acc = acc - self.term()
            else:
                return acc

    def term(self):
        acc = None
        while True:
            kind, val = self.peek()
            if (kind, val) == ("sym", "*"):
                self.take()
                kind, val = self.peek()
                if acc is None or not (kind in ("num", "gen") or (kind, val) == ("sym", "(")):
                    raise ParseError("'*' needs a factor on both sides")
                continue
            if kind == "num" or kind == "gen" or (kind, val) == ("sym", "("):
                f = self.factor()
                acc = f if acc is None else acc * f
            else:
                break
        if acc is None:
            raise ParseError("empty term")
        return acc

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            base = LinComb.scalar(val)
        elif kind == "gen":
            base = LinComb.word(val)
        else:
            base = self.expr()
            if self.take() != ("sym", ")"):
                raise ParseError("missing ')'")
        if self.peek() == ("sym", "^"):
            self.take()
            kind, n = self.take()
            if kind != "num" or n.denominator != 1 or n < 0:
                raise ParseError("exponent must be a non-negative integer")
            out = LinComb.scalar(1)
            for _ in range(int(n)):
                out = out * base
            return out
        return base


def parse(text: str) -> LinComb:
    p = _Parser(_lex(text))
    out = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return out


def split_token(tok: str):
    """'t12' -> ('t', 12); 'z' -> ('z', None)."""
    m = re.fullmatch(r"([A-Za-z]+?)(\d*)", tok)
    if not m:
        raise ParseError(f"bad token {tok!r}")
    name, idx = m.groups()
    return name, (int(idx) if idx else None)


def evaluate(lc: LinComb, gen, one):
    """Evaluate in any algebra: gen(token) gives an element, one is the unit."""
    cache = {(): one}

    def prod(word):
        if word in cache:
            return cache[word]
        val = prod(word[:-1]) * gen(word[-1])
        cache[word] = val
        return val

    total = None
    for w in sorted(lc, key=lambda w: (len(w), w)):
        term = prod(w) * lc[w] if lc[w] != 1 else prod(w)
        total = term if total is None else total + term
    if total is None:
        total = one * 0
    return total


def format_lincomb(lc) -> str:
    if not lc:
        return "0"
    parts = []
    for w in sorted(lc, key=lambda w: (len(w), w)):
        c = lc[w]
        body = " ".join(w)
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{c} {body}")
    return " + ".join(parts).replace("+ -", "- ")
