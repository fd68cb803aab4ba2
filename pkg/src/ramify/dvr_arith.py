"""Complete discrete valuation rings at a fixed finite working precision.

Two models, both with perfect residue field and a distinguished uniformizer:

* equal characteristic: F_q[t] / t^N, uniformizer t;
* mixed characteristic: ZZ / p^N, uniformizer p.

Elements are canonical representatives mod pi^N, so equality is decidable
and every valuation query answers either an exact integer < N or "at least
N" (the truncation bound).  Anything that would need to look past the bound
raises PrecisionLoss rather than guessing.
"""

from dataclasses import dataclass

import sympy

from .errors import NotFiniteLength, PrecisionLoss
from .finite_field import GFq


@dataclass(frozen=True)
class Valuation:
    """Either an exact valuation (exact=True) or a lower bound 'at least
    value' when the element is indistinguishable from 0 at this precision."""

    value: int
    exact: bool = True

    def __repr__(self):
        return str(self.value) if self.exact else "AtLeast(%d)" % self.value

    def at_least(self, n):
        return self.value >= n

    def equals(self, n):
        return self.exact and self.value == n


class DVRSpec:
    """Description of a truncated DVR; hashable, interned per parameters."""

    _cache = {}

    def __new__(cls, kind, char, precision):
        key = (kind, char, precision)
        if key in cls._cache:
            return cls._cache[key]
        if precision < 2:
            raise ValueError("precision must be at least 2")
        self = object.__new__(cls)
        self.kind = kind
        self.precision = precision
        if kind == "equal":
            self.q = char
            self.residue = GFq(char)  # validates prime power
            self.p = self.residue.p
        elif kind == "mixed":
            if not sympy.isprime(char):
                raise ValueError("p must be prime, got %r" % (char,))
            self.p = char
            self.q = char
            self.residue = GFq(char)
            self.pmod = char ** precision
        else:
            raise ValueError("kind must be 'equal' or 'mixed'")
        cls._cache[key] = self
        return self

    @classmethod
    def equal_char(cls, q, precision):
        return cls("equal", q, precision)

    @classmethod
    def mixed_char(cls, p, precision):
        return cls("mixed", p, precision)

    def __repr__(self):
        if self.kind == "equal":
            return "DVRSpec(equal q=%d N=%d)" % (self.q, self.precision)
        return "DVRSpec(mixed p=%d N=%d)" % (self.p, self.precision)

    def with_precision(self, n):
        return DVRSpec(self.kind, self.q if self.kind == "equal" else self.p, n)

    # -- element constructors -------------------------------------------

    def zero(self):
        if self.kind == "equal":
            return DVRElement(self, (self.residue.zero,) * self.precision)
        return DVRElement(self, 0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        if self.kind == "equal":
            digits = (self.residue.from_int(n),) + (self.residue.zero,) * (self.precision - 1)
            return DVRElement(self, digits)
        return DVRElement(self, n % self.pmod)

    def uniformizer(self):
        if self.kind == "equal":
            digits = [self.residue.zero] * self.precision
            digits[1] = self.residue.one
            return DVRElement(self, tuple(digits))
        return self.from_int(self.p)

    def from_t_coeffs(self, coeffs):
        """Equal characteristic: element sum coeffs[i] * t^i, ints."""
        if self.kind != "equal":
            raise ValueError("t-expansions only make sense in equal characteristic")
        digits = [self.residue.zero] * self.precision
        for i, c in enumerate(coeffs):
            if i < self.precision:
                digits[i] = self.residue.from_int(c)
        return DVRElement(self, tuple(digits))

    def from_residue(self, r):
        """Lift of a residue-field element (Teichmueller-free: the obvious
        constant in equal characteristic, the integer code in mixed)."""
        if self.kind == "equal":
            digits = (r,) + (self.residue.zero,) * (self.precision - 1)
            return DVRElement(self, digits)
        return self.from_int(self.residue.encode(r))

    def residue_digits(self):
        """Lifts of all residue-field elements (the digit set for searches)."""
        return [self.from_residue(r) for r in self.residue.elements()]

    def to_json(self):
        if self.kind == "equal":
            return {"kind": "equal", "q": self.q, "precision": self.precision}
        return {"kind": "mixed", "p": self.p, "precision": self.precision}

    @classmethod
    def from_json(cls, data):
        if data["kind"] == "equal":
            return cls.equal_char(data["q"], data["precision"])
        return cls.mixed_char(data["p"], data["precision"])


class DVRElement:
    """A canonical representative mod pi^N.

    Equal characteristic: tuple of N residue-field digits (little-endian in
    t).  Mixed characteristic: an int in [0, p^N).
    """

    __slots__ = ("spec", "data")

    def __init__(self, spec, data):
        self.spec = spec
        self.data = data

    def __eq__(self, other):
        return (isinstance(other, DVRElement) and self.spec is other.spec
                and self.data == other.data)

    def __hash__(self):
        return hash((id(self.spec), self.data))

    def __repr__(self):
        return "<%s in %r>" % (self.pretty(), self.spec)

    def pretty(self):
        if self.spec.kind == "mixed":
            return str(self.data)
        F = self.spec.residue
        bits = []
        for i, d in enumerate(self.data):
            if d == F.zero:
                continue
            c = F.encode(d)
            if i == 0:
                bits.append(str(c))
            elif i == 1:
                bits.append("t" if c == 1 else "%d*t" % c)
            else:
                bits.append("t^%d" % i if c == 1 else "%d*t^%d" % (c, i))
        return "+".join(bits) if bits else "0"

    def is_zero(self):
        if self.spec.kind == "equal":
            return all(d == self.spec.residue.zero for d in self.data)
        return self.data == 0

    def is_one(self):
        return self == self.spec.one()

    def __add__(self, other):
        s = self.spec
        if s.kind == "equal":
            F = s.residue
            if F.f == 1:
                p = F.p
                return DVRElement(
                    s, tuple(((a[0] + b[0]) % p,) for a, b in zip(self.data, other.data))
                )
            return DVRElement(s, tuple(F.add(a, b) for a, b in zip(self.data, other.data)))
        return DVRElement(s, (self.data + other.data) % s.pmod)

    def __neg__(self):
        s = self.spec
        if s.kind == "equal":
            F = s.residue
            return DVRElement(s, tuple(F.neg(a) for a in self.data))
        return DVRElement(s, (-self.data) % s.pmod)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        s = self.spec
        if s.kind == "equal":
            F = s.residue
            n = s.precision
            if F.f == 1:
                p = F.p
                acc = [0] * n
                for i, a in enumerate(self.data):
                    a0 = a[0]
                    if a0:
                        for j in range(n - i):
                            b0 = other.data[j][0]
                            if b0:
                                acc[i + j] += a0 * b0
                return DVRElement(s, tuple((c % p,) for c in acc))
            out = [F.zero] * n
            for i, a in enumerate(self.data):
                if a == F.zero:
                    continue
                for j in range(n - i):
                    b = other.data[j]
                    if b != F.zero:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
            return DVRElement(s, tuple(out))
        return DVRElement(s, (self.data * other.data) % s.pmod)

    def scale_int(self, n):
        return self * self.spec.from_int(n)

    def valuation(self):
        s = self.spec
        if s.kind == "equal":
            for i, d in enumerate(self.data):
                if d != s.residue.zero:
                    return Valuation(i)
            return Valuation(s.precision, exact=False)
        if self.data == 0:
            return Valuation(s.precision, exact=False)
        v, n = 0, self.data
        while n % s.p == 0:
            n //= s.p
            v += 1
        return Valuation(v)

    def shift_down(self, k):
        """Representative of self / pi^k with the missing top digits set to
        zero; only exact when valuation(self) >= k."""
        s = self.spec
        if s.kind == "equal":
            digits = self.data[k:] + (s.residue.zero,) * k
            return DVRElement(s, digits)
        return DVRElement(s, self.data // (s.p ** k))

    def shift_up(self, k):
        """self * pi^k."""
        s = self.spec
        if s.kind == "equal":
            digits = (s.residue.zero,) * k + self.data[: s.precision - k]
            return DVRElement(s, digits)
        return DVRElement(s, (self.data * s.p ** k) % s.pmod)

    def unit_inverse(self):
        """Inverse of a unit (valuation 0)."""
        s = self.spec
        v = self.valuation()
        if not v.equals(0):
            raise ZeroDivisionError("not a unit at this precision")
        if s.kind == "mixed":
            return DVRElement(s, pow(self.data, -1, s.pmod))
        # power-series inversion, digit by digit
        F = s.residue
        u0 = F.inv(self.data[0])
        out = [F.zero] * s.precision
        out[0] = u0
        for n in range(1, s.precision):
            acc = F.zero
            for i in range(1, n + 1):
                acc = F.add(acc, F.mul(self.data[i], out[n - i]))
            out[n] = F.neg(F.mul(u0, acc))
        return DVRElement(s, tuple(out))

    def residue_digit(self):
        """Residue-field image of the constant digit."""
        s = self.spec
        if s.kind == "equal":
            return self.data[0]
        return s.residue.from_int(self.data % s.p)

    def to_json(self):
        s = self.spec
        if s.kind == "equal":
            return [s.residue.encode(d) for d in self.data]
        digits, n = [], self.data
        for _ in range(s.precision):
            digits.append(n % s.p)
            n //= s.p
        return digits


def divide_exact(x, y):
    """z with z * y == x mod pi^N, requires v(y) <= v(x) and y != 0.

    z is well defined mod pi^(N - v(y)); the representative returned has its
    top v(y) digits zeroed.  Products of z with anything of valuation
    >= v(y) are exact, which is the only way elimination uses it.
    """
    vy = y.valuation()
    if not vy.exact:
        raise PrecisionLoss("division by an element indistinguishable from 0")
    vx = x.valuation()
    if vx.exact and vx.value < vy.value:
        raise ValueError("not divisible: v(x) < v(y)")
    if not vx.exact:
        return x.spec.zero()
    xu = x.shift_down(vy.value)
    return xu * y.shift_down(vy.value).unit_inverse()


class DVRPoly:
    """Dense univariate polynomial over a DVRSpec (little-endian coeffs)."""

    def __init__(self, spec, coeffs):
        self.spec = spec
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_int_coeffs(cls, spec, coeffs):
        return cls(spec, [spec.from_int(c) for c in coeffs])

    @classmethod
    def from_intpoly(cls, spec, poly, var="x"):
        """Build from an exact integer polynomial in {var, t}."""
        used = poly.used_vars()
        bad = used - {var, "t"}
        if bad:
            raise ValueError("unexpected variables %s in Eisenstein input" % sorted(bad))
        if "t" in used and spec.kind == "mixed":
            raise ValueError("t has no meaning over a mixed-characteristic base")
        deg = poly.degree_in(var)
        out = []
        for i in range(deg + 1):
            cp = poly.coeff_poly(var, i)  # polynomial in t (and dead vars)
            ti = cp.vars.index("t")
            if spec.kind == "equal":
                tcoeffs = {}
                for m, c in cp.terms.items():
                    tcoeffs[m[ti]] = tcoeffs.get(m[ti], 0) + c
                out.append(spec.from_t_coeffs(
                    [tcoeffs.get(j, 0) for j in range(max(tcoeffs, default=0) + 1)]))
            else:
                out.append(spec.from_int(sum(cp.terms.values())))
        return cls(spec, out)

    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        if i < len(self.coeffs):
            return self.coeffs[i]
        return self.spec.zero()

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def evaluate(self, x, mul, add, lift):
        """Horner evaluation in any ring given its ops and a lift of base
        coefficients; used to evaluate E at extension elements/matrices."""
        acc = lift(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = add(mul(acc, x), lift(c))
        return acc

    def derivative(self):
        s = self.spec
        return DVRPoly(s, [self.coeffs[i].scale_int(i) for i in range(1, len(self.coeffs))])

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        bits = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            head = c.pretty()
            if i == 0:
                bits.append(head)
            else:
                var = "x" if i == 1 else "x^%d" % i
                bits.append(var if head == "1" else "(%s)*%s" % (head, var))
        return "+".join(bits) if bits else "0"


def valuation(x):
    """Valuation of a DVR element: exact int below N, else AtLeast(N)."""
    return x.valuation()


def is_eisenstein(e_poly):
    """True iff monic of degree >= 1, all lower coefficients have valuation
    >= 1, and the constant term has valuation exactly 1.

    With canonical representatives every comparison here is decidable: a
    representative-zero constant term has valuation >= N >= 2, hence != 1.
    """
    if not e_poly.is_monic() or e_poly.degree() < 1:
        return False
    for i in range(e_poly.degree()):
        if e_poly.coeff(i).valuation().exact and e_poly.coeff(i).valuation().value < 1:
            return False
    return e_poly.coeff(0).valuation().equals(1)


def quotient_length(matrix, spec=None):
    """Length over A of coker(A^cols -> A^rows) presented by the matrix.

    Smith-style elimination with valuation-minimal pivots; the sum of pivot
    valuations is the length.  Raises NotFiniteLength when the shape alone
    certifies a free summand (fewer columns than rows), PrecisionLoss when a
    needed pivot is indistinguishable from zero at precision N.
    """
    rows = len(matrix)
    if rows == 0:
        return 0
    cols = len(matrix[0])
    if cols < rows:
        raise NotFiniteLength("presentation has fewer relations than generators")
    m = [list(r) for r in matrix]
    if spec is None:
        spec = m[0][0].spec
    total = 0
    r0 = 0
    c0 = 0
    while r0 < rows:
        best = None
        best_v = None
        for i in range(r0, rows):
            for j in range(c0, cols):
                v = m[i][j].valuation()
                if v.exact and (best_v is None or v.value < best_v):
                    best_v = v.value
                    best = (i, j)
                    if best_v == 0:
                        break
            if best_v == 0:
                break
        if best is None:
            raise PrecisionLoss(
                "remaining block vanishes at precision %d; pivot undecidable"
                % spec.precision)
        i, j = best
        m[r0], m[i] = m[i], m[r0]
        for row in m:
            row[c0], row[j] = row[j], row[c0]
        pivot = m[r0][c0]
        # row clears below, column clears to the right; the pivot has minimal
        # valuation so all factors are ring elements and products are exact
        for i in range(r0 + 1, rows):
            if not m[i][c0].is_zero():
                f = divide_exact(m[i][c0], pivot)
                for j in range(c0, cols):
                    m[i][j] = m[i][j] - f * m[r0][j]
        for j in range(c0 + 1, cols):
            if not m[r0][j].is_zero():
                f = divide_exact(m[r0][j], pivot)
                for i in range(r0, rows):
                    m[i][j] = m[i][j] - f * m[i][c0]
        total += best_v
        r0 += 1
        c0 += 1
        if c0 > cols - (rows - r0):
            # cannot happen: cols >= rows and we consume one of each
            raise NotFiniteLength("ran out of relations")  # pragma: no cover
    return total
