"""Arithmetic in finite fields F_q (q a prime power) and in F_q[y].

Elements of GF(q) are tuples of ints mod p, length f, little-endian in a
fixed irreducible modulus found by deterministic search.  Tuples keep
everything hashable so field elements can be dict keys.

F_q[y] (class Fp below, used as both k[t] and k[x]) is the Euclidean ring
the Smith-normal-form machinery in euclid.py runs over.
"""

from fractions import Fraction

import sympy


def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mulmod(a, b, mod, p):
    # a, b, mod: int lists little-endian; mod monic
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_rem(out, mod, p)


def _poly_rem(a, mod, p):
    a = list(a)
    d = len(mod) - 1
    while len(a) > d:
        c = a[-1] % p
        if c:
            for i in range(d + 1):
                a[len(a) - 1 - d + i] = (a[len(a) - 1 - d + i] - c * mod[i]) % p
        a.pop()
    return _poly_trim(tuple(c % p for c in a))


def _poly_powmod(base, exp, mod, p):
    result = (1,)
    base = _poly_rem(base, mod, p)
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        exp >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(tuple(a)), _poly_trim(tuple(b))
    while b:
        # make b monic, then reduce a mod b
        inv = pow(b[-1], p - 2, p)
        bm = tuple(c * inv % p for c in b)
        a, b = b, _poly_rem(a, bm, p)
    return a


def _is_irreducible(mod, p, f):
    # mod monic of degree f over F_p: irreducible iff y^(p^f) == y (mod mod)
    # and gcd(y^(p^(f/r)) - y, mod) = 1 for every prime r | f.
    y = (0, 1)
    if _poly_powmod(y, p ** f, mod, p) != y:
        return False
    for r in sorted({int(r) for r in sympy.factorint(f)}):
        g = _poly_powmod(y, p ** (f // r), mod, p)
        diff = list(g) + [0] * (2 - len(g))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(diff, mod, p)
        if len(g) != 1:
            return False
    return True


def _find_modulus(p, f):
    # deterministic: first monic irreducible of degree f in lexicographic
    # order of the low coefficients
    if f == 1:
        return (0, 1)
    n = p ** f
    for code in range(n):
        low = []
        c = code
        for _ in range(f):
            low.append(c % p)
            c //= p
        mod = tuple(low) + (1,)
        if _is_irreducible(mod, p, f):
            return mod
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


_FIELD_CACHE = {}


class GFq:
    """The finite field with q = p^f elements.

    Elements are tuples of f ints in [0, p).  For f = 1 the modulus is y
    itself and elements are 1-tuples.
    """

    def __new__(cls, q):
        if q in _FIELD_CACHE:
            return _FIELD_CACHE[q]
        fac = sympy.factorint(q)
        if len(fac) != 1 or q < 2:
            raise ValueError("q must be a prime power, got %r" % (q,))
        (p, f), = fac.items()
        self = object.__new__(cls)
        self.q = q
        self.p = int(p)
        self.f = int(f)
        self.modulus = _find_modulus(self.p, self.f)
        self.zero = (0,) * self.f
        self.one = (1,) + (0,) * (self.f - 1)
        _FIELD_CACHE[q] = self
        return self

    def __repr__(self):
        return "GFq(%d)" % self.q

    def from_int(self, n):
        """Image of the integer n under ZZ -> F_p -> F_q."""
        return (n % self.p,) + (0,) * (self.f - 1)

    def encode(self, a):
        """Canonical integer code sum(a_i * p^i), used in serializations."""
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def decode(self, n):
        out = []
        for _ in range(self.f):
            out.append(n % self.p)
            n //= self.p
        return tuple(out)

    def elements(self):
        for n in range(self.q):
            yield self.decode(n)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        if self.f == 1:
            return (a[0] * b[0] % self.p,)
        prod = _poly_mulmod(a, b, self.modulus, self.p)
        return tuple(prod) + (0,) * (self.f - len(prod))

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        # a^(q-2); q is small here so this is fine
        return self.pow(a, self.q - 2)

    def pow(self, a, n):
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, a):
        return a == self.zero


class FqPolyRing:
    """Polynomials over GF(q) in one variable, as a Euclidean ring adapter.

    Elements are tuples of GFq elements, little-endian, trimmed (no trailing
    zeros); the zero polynomial is the empty tuple.  Satisfies the ring
    protocol expected by euclid.py.
    """

    def __init__(self, field, var="t"):
        self.field = field
        self.var = var
        self.zero = ()
        self.one = (field.one,)

    def __repr__(self):
        return "FqPolyRing(GF(%d), %r)" % (self.field.q, self.var)

    def __eq__(self, other):
        return (isinstance(other, FqPolyRing) and other.field is self.field
                and other.var == self.var)

    def __hash__(self):
        return hash((self.field.q, self.var))

    def from_int(self, n):
        c = self.field.from_int(n)
        return () if c == self.field.zero else (c,)

    def from_int_coeffs(self, coeffs):
        return self.trim(tuple(self.field.from_int(c) for c in coeffs))

    def gen(self):
        return (self.field.zero, self.field.one)

    def trim(self, a):
        a = tuple(a)
        while a and a[-1] == self.field.zero:
            a = a[:-1]
        return a

    def is_zero(self, a):
        return not a

    def degree(self, a):
        return len(a) - 1 if a else -1

    def norm(self, a):
        # Euclidean size used for pivot selection
        return len(a) - 1

    def add(self, a, b):
        F = self.field
        n = max(len(a), len(b))
        out = []
        for i in range(n):
            x = a[i] if i < len(a) else F.zero
            y = b[i] if i < len(b) else F.zero
            out.append(F.add(x, y))
        return self.trim(out)

    def neg(self, a):
        return tuple(self.field.neg(x) for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        F = self.field
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x != F.zero:
                for j, y in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return self.trim(out)

    def scal(self, c, a):
        return self.trim(tuple(self.field.mul(c, x) for x in a))

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        inv = F.inv(b[-1])
        rem = list(a)
        quo = [F.zero] * max(0, len(a) - len(b) + 1)
        while len(rem) >= len(b):
            c = F.mul(rem[-1], inv)
            k = len(rem) - len(b)
            quo[k] = c
            for i in range(len(b)):
                rem[k + i] = F.sub(rem[k + i], F.mul(c, b[i]))
            while rem and rem[-1] == F.zero:
                rem.pop()
        return self.trim(quo), self.trim(rem)

    def is_unit(self, a):
        return len(a) == 1

    def canon(self, a):
        """Unit-normalize: make monic.  Returns (unit, canonical)."""
        if not a:
            return self.one, ()
        inv = self.field.inv(a[-1])
        return (a[-1],), self.scal(inv, a)

    def pi_valuation(self, a):
        """Order of vanishing at the uniformizer (the variable itself)."""
        if not a:
            return None
        for i, c in enumerate(a):
            if c != self.field.zero:
                return i
        return None  # pragma: no cover

    def k_dimension(self, a):
        """dim_k of ring/(a) for a != 0: the degree."""
        return len(a) - 1

    def eq(self, a, b):
        return a == b

    def pretty(self, a):
        if not a:
            return "0"
        F = self.field
        parts = []
        for i, c in enumerate(a):
            if c == F.zero:
                continue
            code = F.encode(c)
            if i == 0:
                parts.append(str(code))
            else:
                head = "" if code == 1 else "%d*" % code
                parts.append("%s%s^%d" % (head, self.var, i) if i > 1
                             else "%s%s" % (head, self.var))
        return "+".join(parts)


class ZRing:
    """The integers as a Euclidean ring adapter (mixed characteristic base)."""

    zero = 0
    one = 1

    def __init__(self, p=None):
        # p only matters for pi_valuation
        self.p = p
        self.var = None

    def __repr__(self):
        return "ZRing(p=%r)" % self.p

    def __eq__(self, other):
        return isinstance(other, ZRing) and other.p == self.p

    def __hash__(self):
        return hash(("ZRing", self.p))

    def from_int(self, n):
        return n

    def is_zero(self, a):
        return a == 0

    def norm(self, a):
        return abs(a)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def divmod(self, a, b):
        q, r = divmod(a, b)
        # symmetric remainder keeps entries small
        if r and abs(r) > abs(b) // 2:
            q += 1 if b > 0 else -1
            r -= b if b > 0 else -b
        return q, r

    def is_unit(self, a):
        return a in (1, -1)

    def canon(self, a):
        if a < 0:
            return -1, -a
        return 1, a

    def pi_valuation(self, a):
        if a == 0:
            return None
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def k_dimension(self, a):
        # dim over F_p of ZZ/(a) localized at p
        return self.pi_valuation(a)

    def eq(self, a, b):
        return a == b

    def pretty(self, a):
        return str(a)


class QRing:
    """Rationals (a field) under the same adapter protocol; handy in tests."""

    zero = Fraction(0)
    one = Fraction(1)
    p = None
    var = None

    def from_int(self, n):
        return Fraction(n)

    def is_zero(self, a):
        return a == 0

    def norm(self, a):
        return 0 if a == 0 else 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def divmod(self, a, b):
        return a / b, Fraction(0)

    def is_unit(self, a):
        return a != 0

    def canon(self, a):
        if a == 0:
            return Fraction(1), Fraction(0)
        return a, Fraction(1)

    def eq(self, a, b):
        return a == b
