"""Exact arithmetic in Q(zeta_m): polynomials in zeta modulo the m-th
cyclotomic polynomial, with Fraction coefficients.

Good enough for character theory of small groups; m is the exponent of
whatever group is in play and all values in one computation share it.
"""

from fractions import Fraction

import sympy

_RED_CACHE = {}


def _reduction_data(m):
    """(degree d, rows r[k] expressing zeta^(d+k) for k < d-1 in the basis)."""
    if m in _RED_CACHE:
        return _RED_CACHE[m]
    x = sympy.symbols("x")
    coeffs = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()
    coeffs = [int(c) for c in reversed(coeffs)]  # little-endian, monic
    d = len(coeffs) - 1
    rows = []
    # zeta^d = -sum coeffs[i] zeta^i
    prev = [Fraction(-c) for c in coeffs[:d]]
    rows.append(tuple(prev))
    for _ in range(d - 2):
        shifted = [Fraction(0)] + prev[:-1]
        lead = prev[-1]
        if lead:
            shifted = [s + lead * r for s, r in zip(shifted, rows[0])]
        rows.append(tuple(shifted))
        prev = shifted
    _RED_CACHE[m] = (d, rows)
    return d, rows


class CycloRational:
    """An element of Q(zeta_m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        d, _ = _reduction_data(m)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) < d:
            cs += [Fraction(0)] * (d - len(cs))
        if len(cs) != d:
            raise ValueError("expected %d coefficients for m=%d" % (d, m))
        self.m = m
        self.coeffs = tuple(cs)

    @classmethod
    def from_rational(cls, m, value):
        return cls(m, [Fraction(value)])

    @classmethod
    def zeta(cls, m, k=1):
        """zeta_m^k."""
        k %= m
        d, _ = _reduction_data(m)
        if k < d:
            cs = [Fraction(0)] * d
            cs[k] = Fraction(1)
            return cls(m, cs)
        out = cls.from_rational(m, 1)
        gen = cls(m, [0, 1]) if d > 1 else cls.from_rational(m, -1 if m == 2 else 1)
        for _ in range(k):
            out = out * gen
        return out

    def _check(self, other):
        if isinstance(other, CycloRational):
            if other.m != self.m:
                raise ValueError("mixing Q(zeta_%d) and Q(zeta_%d)" % (self.m, other.m))
            return other
        return CycloRational.from_rational(self.m, other)

    def __add__(self, other):
        other = self._check(other)
        return CycloRational(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloRational(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        d, rows = _reduction_data(self.m)
        conv = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = rows[k - d]
                out = [o + c * r for o, r in zip(out, row)]
        return CycloRational(self.m, out)

    __rmul__ = __mul__

    def inverse(self):
        """Extended Euclid against the cyclotomic polynomial over Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.m)
        d, _ = _reduction_data(self.m)
        if d == 1:
            return CycloRational(self.m, [1 / self.coeffs[0]])
        x = sympy.symbols("x")
        phi = sympy.Poly(sympy.cyclotomic_poly(self.m, x), x, domain="QQ")
        me = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator)
                                       for c in self.coeffs])), x, domain="QQ")
        s, _, h = sympy.gcdex(me.as_expr(), phi.as_expr(), x)
        hp = sympy.Poly(h, x, domain="QQ")
        if hp.degree() != 0:
            raise ZeroDivisionError("not invertible modulo the cyclotomic polynomial")
        inv = sympy.Poly(s / hp.all_coeffs()[0], x, domain="QQ")
        cs = [Fraction(str(c)) for c in reversed(inv.all_coeffs())]
        return CycloRational(self.m, cs)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) / self

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^(m-1)."""
        out = CycloRational.from_rational(self.m, 0)
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + CycloRational.zeta(self.m, (-k) % self.m) * c
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloRational.from_rational(self.m, other)
        return (isinstance(other, CycloRational) and self.m == other.m
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("value is irrational: %r" % (self,))
        return self.coeffs[0]

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        bits = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                bits.append(str(c))
            else:
                z = "z%d" % self.m if k == 1 else "z%d^%d" % (self.m, k)
                bits.append(z if c == 1 else "%s*%s" % (c, z))
        return "+".join(bits) if bits else "0"

    def to_json(self):
        if self.is_rational():
            v = self.coeffs[0]
            return {"num": v.numerator, "den": v.denominator}
        return {"zeta_order": self.m,
                "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}
