"""Dense univariate polynomials in z with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Poly:
    __slots__ = ("c", "_h")

    def __init__(self, coeffs=()):
        c = [_norm(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)
        self._h = None

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def z(cls, power=1):
        return cls((0,) * power + (1,))

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.c or not other.c:
            return Poly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def shift(self, m):
        """Multiply by z**m."""
        if m == 0 or not self.c:
            return self
        return Poly((0,) * m + self.c)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return _norm(Fraction(acc)) if isinstance(acc, Fraction) else acc

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = Poly((other,))
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        if self._h is None:
            self._h = hash(self.c)
        return self._h

    def to_list(self):
        return [x if isinstance(x, int) else str(x) for x in self.c]

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and a == 1:
                parts.append(mono)
            elif mono and a == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{a}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Poly()
ONE = Poly((1,))
Z = Poly.z()
