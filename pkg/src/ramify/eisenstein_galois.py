"""Totally ramified extensions A' = A[x]/E(x) for Eisenstein E, their
automorphisms, and the ramification characters ar and sw.

The extension is monogenic with uniformizer pi_L = x; elements are written
in the basis {1, x, ..., x^(e-1)} over A, which is also the pi_L-adic digit
basis, so valuations read off coefficientwise:

    v_L(sum c_i x^i) = min_i (e * v_K(c_i) + i)

and the minimum is exact because the candidate values are distinct mod e.

Automorphisms are the roots of E in A', found by digit-by-digit search with
valuation pruning: a prefix r agreeing with a true root through pi-adic
level m satisfies v_L(E(r)) >= m + e (each of the other e-1 conjugate
factors contributes at least 1).  Survivors are verified by evaluating E.
"""

from .dvr_arith import DVRPoly, Valuation, divide_exact, is_eisenstein
from .errors import DegreeOne, NotEisenstein, NotGalois, PrecisionLoss
from .groups import FiniteGroup


class ExtElt:
    """Element of A' as a coefficient tuple in the x-power basis."""

    __slots__ = ("ext", "coeffs")

    def __init__(self, ext, coeffs):
        self.ext = ext
        self.coeffs = tuple(coeffs)

    def __eq__(self, other):
        return (isinstance(other, ExtElt) and self.ext is other.ext
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(tuple(c.data for c in self.coeffs))

    def __add__(self, other):
        return ExtElt(self.ext, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return ExtElt(self.ext, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return ExtElt(self.ext, [-a for a in self.coeffs])

    def __mul__(self, other):
        return self.ext.mul(self, other)

    def scale(self, base_elt):
        return ExtElt(self.ext, [c * base_elt for c in self.coeffs])

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def valuation(self):
        """pi_L-adic valuation; AtLeast(e*N) when representative zero."""
        e = self.ext.e
        bound = e * self.ext.base.precision
        best = None
        for i, c in enumerate(self.coeffs):
            v = c.valuation()
            if v.exact:
                cand = e * v.value + i
                if best is None or cand < best:
                    best = cand
        if best is None:
            return Valuation(bound, exact=False)
        return Valuation(best)

    def pretty(self):
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

    def __repr__(self):
        return "<%s>" % self.pretty()

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def digit_expansion(self):
        """pi_L-adic digits (residue-field codes), little-endian, length e*N."""
        ext = self.ext
        bound = ext.e * ext.base.precision
        digits = [0] * bound
        r = self
        while True:
            v = r.valuation()
            if not v.exact:
                return digits
            unit = r.coeffs[v.value % ext.e].shift_down(v.value // ext.e)
            d = unit.residue_digit()
            digits[v.value] = ext.base.residue.encode(d)
            r = r - ext.pi_power(v.value).scale(ext.base.from_residue(d))


class EisensteinExtension:
    def __init__(self, base, e_poly, exact_poly=None):
        if not is_eisenstein(e_poly):
            raise NotEisenstein("polynomial is not Eisenstein over the base: %r" % e_poly)
        if e_poly.degree() < 2:
            raise DegreeOne("extension degree must be at least 2")
        self.base = base
        self.E = e_poly
        self.e = e_poly.degree()
        self.exact_E = exact_poly
        # reduction table: x^k for k in [e, 2e-2] in the power basis
        zero = base.zero()
        top = [(-e_poly.coeff(i)) for i in range(self.e)]
        self._red = {self.e: tuple(top)}
        for k in range(self.e + 1, 2 * self.e - 1):
            prev = self._red[k - 1]
            shifted = [zero] + list(prev[:-1])
            lead = prev[-1]
            if not lead.is_zero():
                shifted = [s + t * lead for s, t in zip(shifted, top)]
            self._red[k] = tuple(shifted)
        self._pi_powers = None

    def __repr__(self):
        return "EisensteinExtension(%r, E=%r)" % (self.base, self.E)

    # -- element construction -------------------------------------------

    def zero(self):
        return ExtElt(self, [self.base.zero()] * self.e)

    def one(self):
        return self.from_base(self.base.one())

    def from_base(self, c):
        return ExtElt(self, [c] + [self.base.zero()] * (self.e - 1))

    def uniformizer(self):
        cs = [self.base.zero()] * self.e
        cs[1] = self.base.one()
        return ExtElt(self, cs)

    def from_coeffs(self, coeffs):
        cs = list(coeffs) + [self.base.zero()] * (self.e - len(coeffs))
        return ExtElt(self, cs[: self.e])

    def pi_power(self, j):
        """pi_L^j for 0 <= j < e*N, precomputed on first use."""
        if self._pi_powers is None:
            bound = self.e * self.base.precision
            powers = [self.one()]
            x = self.uniformizer()
            for _ in range(1, bound):
                powers.append(self.mul(powers[-1], x))
            self._pi_powers = powers
        return self._pi_powers[j]

    # -- arithmetic ------------------------------------------------------

    def mul(self, a, b):
        e = self.e
        zero = self.base.zero()
        conv = [zero] * (2 * e - 1)
        for i, ca in enumerate(a.coeffs):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b.coeffs):
                if not cb.is_zero():
                    conv[i + j] = conv[i + j] + ca * cb
        out = list(conv[:e])
        for k in range(e, 2 * e - 1):
            c = conv[k]
            if not c.is_zero():
                red = self._red[k]
                out = [o + r * c for o, r in zip(out, red)]
        return ExtElt(self, out)

    def evaluate_poly(self, poly, point):
        """Evaluate a DVRPoly over the base at an element of A' (Horner)."""
        acc = self.from_base(poly.coeffs[-1]) if poly.coeffs else self.zero()
        for c in reversed(poly.coeffs[:-1]):
            acc = self.mul(acc, point) + self.from_base(c)
        return acc

    def evaluate_at_root(self, elem, root):
        """Image of elem = P(pi_L) under pi_L -> root, i.e. P(root)."""
        acc = self.zero()
        for c in reversed(elem.coeffs):
            acc = self.mul(acc, root) + self.from_base(c)
        return acc

    def to_json(self):
        return {"base": self.base.to_json(), "E": self.E.to_json()}


def extend(base, e_poly, exact_poly=None):
    """Build the totally ramified extension A[x]/E(x).

    e_poly may be a DVRPoly over base, or an exact IntPoly in {x, t} (kept
    for later precision escalation).  Checks v_L(pi_K) = e and E(pi_L) = 0.
    """
    if not isinstance(e_poly, DVRPoly):
        exact_poly = e_poly
        e_poly = DVRPoly.from_intpoly(base, e_poly)
    ext = EisensteinExtension(base, e_poly, exact_poly)
    pk = ext.from_base(base.uniformizer())
    if not pk.valuation().equals(ext.e):
        raise PrecisionLoss("v_L(pi_K) != e at this precision")  # pragma: no cover
    if not ext.evaluate_poly(ext.E, ext.uniformizer()).is_zero():
        raise RuntimeError("E(pi_L) != 0; reduction table broken")  # pragma: no cover
    return ext


def _passes(ext, value, threshold):
    v = value.valuation()
    return (not v.exact) or v.value >= threshold


def root_tolerance(ext):
    """Roots of E in the truncation come in cosets r + pi^(bound-d) A' with
    d = v_L(E'(pi_L)); representatives agreeing past bound - d describe the
    same automorphism.  Returns that tolerance level, insisting on enough
    precision to keep distinct automorphisms apart."""
    bound = ext.e * ext.base.precision
    d = different_valuation(ext)
    if bound <= 2 * d:
        raise PrecisionLoss("precision too low to separate automorphisms; "
                            "need e*N > 2*%d" % d)
    return bound - d


def find_roots(ext):
    """All roots of E in A', by pruned digit search, one canonical
    representative per sub-resolution coset."""
    base = ext.base
    e = ext.e
    bound = e * base.precision
    tol = root_tolerance(ext)
    eprime = ext.E.derivative()
    nonzero_digits = [d for d in base.residue_digits() if not d.is_zero()]
    all_digits = base.residue_digits()

    # survivors: (r, E(r), E'(r)) with the cached values exact
    survivors = []
    pi = ext.uniformizer()
    for d in nonzero_digits:
        r = pi.scale(d)
        val = ext.evaluate_poly(ext.E, r)
        if _passes(ext, val, 1 + e):
            survivors.append((r, val, ext.evaluate_poly(eprime, r)))

    for m in range(2, bound):
        threshold = m + e
        nxt = []
        use_linear = 2 * m >= threshold  # s^2 terms cannot affect the test
        for (r, er, epr) in survivors:
            er_exact = er.valuation().exact
            for d in all_digits:
                if d.is_zero():
                    if _passes(ext, er, threshold):
                        nxt.append((r, er, epr))
                    continue
                if not er_exact:
                    # r is already a root to working precision.  A nonzero
                    # digit is either a genuinely different root (E picks up
                    # an exact value, or the digit sits below level tol) or
                    # a sub-resolution shadow of r, which we drop in favour
                    # of the canonical zero-tail representative.
                    dv = epr.valuation()
                    if not dv.exact:
                        raise PrecisionLoss(
                            "derivative of E below resolution at a root")
                    r2 = r + ext.pi_power(m).scale(d)
                    er2 = ext.evaluate_poly(ext.E, r2)
                    if not _passes(ext, er2, threshold):
                        continue
                    if not er2.valuation().exact and m >= tol:
                        continue
                    nxt.append((r2, er2, ext.evaluate_poly(eprime, r2)))
                    continue
                s = ext.pi_power(m).scale(d)
                if use_linear:
                    approx = er + ext.mul(epr, s)
                    if not _passes(ext, approx, threshold):
                        continue
                    r2 = r + s
                    # accepted: refresh the caches exactly
                    er2 = ext.evaluate_poly(ext.E, r2)
                    if not _passes(ext, er2, threshold):
                        continue
                    nxt.append((r2, er2, ext.evaluate_poly(eprime, r2)))
                else:
                    r2 = r + s
                    er2 = ext.evaluate_poly(ext.E, r2)
                    if _passes(ext, er2, threshold):
                        nxt.append((r2, er2, ext.evaluate_poly(eprime, r2)))
        if len(nxt) > 4 * e * base.residue.q:
            raise PrecisionLoss("root search explosion; raise the precision")
        survivors = nxt
        if not survivors:
            break

    roots = []
    for (r, _, _) in survivors:
        if not ext.evaluate_poly(ext.E, r).is_zero():
            continue
        if any(_same_root(r, s, tol) for s in roots):
            continue
        roots.append(r)
    if len(roots) > e:
        raise PrecisionLoss("more roots than the degree; raise the precision")
    pi = ext.uniformizer()
    if not any(_same_root(pi, r, tol) for r in roots):
        raise RuntimeError("identity root missing")  # pragma: no cover
    roots.sort(key=lambda r: (not _same_root(r, pi, tol), r.digit_expansion()))
    return roots


def _same_root(a, b, tol):
    v = (a - b).valuation()
    return (not v.exact) or v.value >= tol


class GaloisData:
    """Automorphisms of A'/A with their composition table.

    is_galois is true when the count equals the degree; the ramification
    characters below require it.
    """

    def __init__(self, ext, roots):
        self.ext = ext
        self.roots = tuple(roots)
        self.is_galois = len(roots) == ext.e
        tol = root_tolerance(ext)
        table = []
        for ri in self.roots:
            row = []
            for rj in self.roots:
                composed = ext.evaluate_at_root(rj, ri)
                hits = [k for k, r in enumerate(self.roots)
                        if _same_root(composed, r, tol)]
                if len(hits) != 1:
                    raise PrecisionLoss(
                        "automorphism composition left the root set")
                row.append(hits[0])
            table.append(row)
        self.group = FiniteGroup(table)
        self.identity = self.group.identity
        p = ext.base.residue.p
        self.p_sylow = self.group.elements_of_p_power_order(p)
        if not self.group.is_subgroup(self.p_sylow):
            raise PrecisionLoss("wild inertia is not a subgroup")  # pragma: no cover

    def require_galois(self):
        if not self.is_galois:
            raise NotGalois(
                "only %d of %d automorphisms exist over this base"
                % (len(self.roots), self.ext.e))

    def apply(self, g, elem):
        return self.ext.evaluate_at_root(elem, self.roots[g])

    def to_json(self):
        return {
            "extension": self.ext.to_json(),
            "galois": self.is_galois,
            "automorphisms": [r.digit_expansion() for r in self.roots],
        }


def automorphism_group(ext):
    return GaloisData(ext, find_roots(ext))


def different_valuation(ext):
    """v_L(E'(pi_L)), the valuation of the different."""
    val = ext.evaluate_poly(ext.E.derivative(), ext.uniformizer()).valuation()
    if not val.exact:
        raise PrecisionLoss("different valuation reaches the precision bound")
    return val.value


def artin_character(gdata, g):
    """ar(id) = v_L(E'(pi_L)); ar(g) = -v_L(g(pi_L) - pi_L) otherwise."""
    gdata.require_galois()
    ext = gdata.ext
    if g == gdata.identity:
        return different_valuation(ext)
    diff = gdata.roots[g] - ext.uniformizer()
    v = diff.valuation()
    if not v.exact:
        raise PrecisionLoss("root separation reaches the precision bound")
    return -v.value


def swan_character(gdata, g):
    """sw = ar - (regular character) + (trivial character), elementwise."""
    ar = artin_character(gdata, g)
    if g == gdata.identity:
        return ar - gdata.ext.e + 1
    return ar + 1


class CharacterTable:
    """ar and sw on every group element, cross-checked on construction."""

    def __init__(self, gdata):
        gdata.require_galois()
        self.gdata = gdata
        self.ar = tuple(artin_character(gdata, g) for g in range(gdata.ext.e))
        self.sw = tuple(swan_character(gdata, g) for g in range(gdata.ext.e))
        if sum(self.ar) != 0:
            raise PrecisionLoss("sum of ar over the group is %d, expected 0"
                                % sum(self.ar))
        p = gdata.ext.base.residue.p
        for g in range(gdata.ext.e):
            if g not in gdata.p_sylow and self.sw[g] != 0:
                raise PrecisionLoss("sw does not vanish off the wild subgroup")

    def to_json(self):
        names = self.gdata.group.names
        return {
            "ar": {names[g]: self.ar[g] for g in range(len(self.ar))},
            "sw": {names[g]: self.sw[g] for g in range(len(self.sw))},
        }


def character_table(gdata):
    return CharacterTable(gdata)
