"""Exact multivariate polynomials with integer coefficients, plus the
minimal infix grammar used by the command line.

Variables come from the fixed universe {t, x, x0..x9}.  These exact forms
are what extensions and hypersurfaces keep around so that precision can be
escalated later (truncated coefficients cannot be re-lifted).
"""

import re

from .errors import ParseError

VARS = ("t", "x") + tuple("x%d" % i for i in range(10))


class IntPoly:
    """dict from exponent tuples (aligned with `vars`) to nonzero ints."""

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        ts = {}
        for mono, c in (terms or {}).items():
            if c:
                ts[tuple(mono)] = c
        self.terms = ts

    @classmethod
    def constant(cls, variables, c):
        z = (0,) * len(variables)
        return cls(variables, {z: c} if c else {})

    @classmethod
    def variable(cls, variables, name):
        i = variables.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {mono: 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, IntPoly) and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return IntPoly(self.vars, out)

    def __neg__(self):
        return IntPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return IntPoly(self.vars, out)

    def scale(self, c):
        return IntPoly(self.vars, {m: c * x for m, x in self.terms.items()})

    def __pow__(self, n):
        result = IntPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degree_in(self, name):
        i = self.vars.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def total_degree_in(self, names):
        idx = [self.vars.index(n) for n in names]
        return max((sum(m[i] for i in idx) for m in self.terms), default=-1)

    def used_vars(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.vars[i])
        return used

    def coeff_poly(self, name, power):
        """Coefficient of name^power, as a polynomial in the other vars."""
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        out = {}
        for m, c in self.terms.items():
            if m[i] == power:
                rm = tuple(e for j, e in enumerate(m) if j != i)
                out[rm] = out.get(rm, 0) + c
        return IntPoly(rest, out)

    def substitute(self, assignment):
        """Substitute IntPoly values for variables; all vars must be covered."""
        some = next(iter(assignment.values()))
        result = IntPoly.constant(some.vars, 0)
        for m, c in self.terms.items():
            term = IntPoly.constant(some.vars, c)
            for i, e in enumerate(m):
                if e:
                    term = term * (assignment[self.vars[i]] ** e)
            result = result + term
        return result

    def derivative(self, name):
        i = self.vars.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                dm = tuple(e - 1 if j == i else e for j, e in enumerate(m))
                out[dm] = out.get(dm, 0) + c * m[i]
        return IntPoly(self.vars, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            factors = []
            for v, e in zip(self.vars, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append("%s^%d" % (v, e))
            if not factors:
                bits.append(str(c))
            elif c == 1:
                bits.append("*".join(factors))
            elif c == -1:
                bits.append("-" + "*".join(factors))
            else:
                bits.append("%d*%s" % (c, "*".join(factors)))
        s = "+".join(bits)
        return s.replace("+-", "-")


_TOKEN = re.compile(r"\s*(\d+|x\d|[xt]|\*\*|[-+*^()])")


def tokenize(text):
    out = []
    text = text.strip()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("bad character in polynomial at %r" % text[pos:])
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    """expr := term ((+|-) term)*; term := atom (* atom)*;
    atom := base (^ INT)?; base := INT | VAR | - atom | ( expr )"""

    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.atom()
        while self.peek() == "*":
            self.next()
            node = node * self.atom()
        return node

    def atom(self):
        node = self.base()
        if self.peek() == "^":
            self.next()
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            node = node ** int(tok)
        return node

    def base(self):
        tok = self.next()
        if tok is None:
            raise ParseError("unexpected end of polynomial")
        if tok == "-":
            return -self.atom()
        if tok == "+":
            return self.atom()
        if tok.isdigit():
            return IntPoly.constant(VARS, int(tok))
        if tok in VARS:
            return IntPoly.variable(VARS, tok)
        if tok == "(":
            node = self.expr()
            if self.next() != ")":
                raise ParseError("unbalanced parentheses")
            return node
        raise ParseError("unexpected token %r" % tok)


def parse_poly(text):
    """Parse the minimal infix grammar over {t, x, x0..x9} with integer
    coefficients; operators + - * ^ and parentheses, no implicit products."""
    if not text or not text.strip():
        raise ParseError("empty polynomial")
    p = _Parser(tokenize(text))
    node = p.expr()
    if p.peek() is not None:
        raise ParseError("trailing input %r" % p.toks[p.i:])
    return node
