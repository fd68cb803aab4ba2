"""Descent structure on tensor powers of a monogenic extension.

Tensor powers A'^{(x)k} of A' = A[x]/E are presented as polynomial
quotients A[x_1..x_k] modulo E(x_i); ring maps between them are given by
generator images.  The pair (A', A'(x)A') carries unit maps from both
sides, a counit, a comultiplication inserting a middle tensor factor,
and the flip antipode.  `check_hopf_axioms` verifies the groupoid-style
axioms as exact identities of composite ring maps and names any failure,
so a tampered structure is detected rather than silently accepted.

`exterior_model` builds the rank-2^k exterior Koszul complex on k copies
of the uniformizer with its contracting homotopy, as a strict dg module.
"""

from itertools import combinations
from math import comb

from ..errors import RamifyError
from .koszul import KModule, model_uniformizer


class PolyQuotient:
    """A[x_1..x_k] / (E(x_1), ..., E(x_k)) with exact base coefficients.

    Monomials with all exponents below deg E form a free base-module
    basis, so equality of reduced elements is literal.
    """

    def __init__(self, spec, e_poly, nvars):
        if not e_poly.is_monic():
            raise ValueError("defining polynomial must be monic")
        self.spec = spec
        self.E = e_poly
        self.e = e_poly.degree()
        self.nvars = nvars
        # dense reductions of x^j for j = 0 .. 2e-2, little-endian length e
        e = self.e
        rows = []
        for j in range(e):
            row = [spec.zero()] * e
            row[j] = spec.one()
            rows.append(row)
        top = [spec.zero() - e_poly.coeff(i) for i in range(e)]
        rows.append(list(top))
        for _ in range(e - 2):
            prev = rows[-1]
            row = [spec.zero()] * e
            for i in range(e - 1):
                row[i + 1] = prev[i]
            lead = prev[e - 1]
            for i in range(e):
                row[i] = row[i] + lead * top[i]
            rows.append(row)
        self._pow = rows

    def same_ring(self, other):
        return (self.spec is other.spec and self.nvars == other.nvars
                and self.E.coeffs == other.E.coeffs)

    def element(self, coeffs):
        return PQElt(self, coeffs)

    def zero(self):
        return PQElt(self, {})

    def one(self):
        return self.from_base(self.spec.one())

    def from_base(self, c):
        return PQElt(self, {(0,) * self.nvars: c})

    def gen(self, i):
        if not 0 <= i < self.nvars:
            raise ValueError("no such generator")
        exp = [0] * self.nvars
        exp[i] = 1
        return PQElt(self, {tuple(exp): self.spec.one()})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def __repr__(self):
        return "PolyQuotient(e=%d, vars=%d)" % (self.e, self.nvars)


class PQElt:
    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, PQElt) and self.ring.same_ring(other.ring)
                and self.coeffs == other.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return PQElt(self.ring, out)

    def __neg__(self):
        z = self.ring.spec.zero()
        return PQElt(self.ring, {k: z - v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return PQElt(self.ring, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        ring = self.ring
        pow_tab = ring._pow
        out = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                c = ca * cb
                if c.is_zero():
                    continue
                # reduce each variable's exponent through the power table
                terms = [((), c)]
                for i in range(ring.nvars):
                    j = ea[i] + eb[i]
                    nxt = []
                    for pref, cc in terms:
                        for d, w in enumerate(pow_tab[j]):
                            if w.is_zero():
                                continue
                            nxt.append((pref + (d,), cc * w))
                    terms = nxt
                for exp, cc in terms:
                    out[exp] = out[exp] + cc if exp in out else cc
        return PQElt(ring, out)

    def pretty(self):
        bits = []
        for exp in sorted(self.coeffs):
            head = self.coeffs[exp].pretty()
            mono = "*".join("x%d^%d" % (i + 1, p) if p > 1 else "x%d" % (i + 1)
                            for i, p in enumerate(exp) if p)
            if not mono:
                bits.append(head)
            elif head == "1":
                bits.append(mono)
            else:
                bits.append("(%s)*%s" % (head, mono))
        return " + ".join(bits) if bits else "0"

    def __repr__(self):
        return "<%s>" % self.pretty()


class RingMap:
    """Base-algebra map between polynomial quotients, by generator images."""

    def __init__(self, source, target, images, check=True):
        if len(images) != source.nvars:
            raise ValueError("need one image per generator")
        self.source = source
        self.target = target
        self.images = list(images)
        if check:
            for im in self.images:
                acc = target.zero()
                for i in range(source.e, -1, -1):
                    acc = acc * im + target.from_base(source.E.coeff(i))
                if not acc.is_zero():
                    raise ValueError("images do not satisfy the defining "
                                     "relation; map is not well defined")
        self._img_pows = None

    def apply(self, elt):
        if not elt.ring.same_ring(self.source):
            raise ValueError("element not in the source ring")
        if self._img_pows is None:
            tabs = []
            for im in self.images:
                row = [self.target.one()]
                for _ in range(self.source.e - 1):
                    row.append(row[-1] * im)
                tabs.append(row)
            self._img_pows = tabs
        out = self.target.zero()
        for exp, c in elt.coeffs.items():
            term = self.target.from_base(c)
            for i, p in enumerate(exp):
                if p:
                    term = term * self._img_pows[i][p]
            out = out + term
        return out

    def then(self, other):
        """Composite: apply self first, then other."""
        if not self.target.same_ring(other.source):
            raise ValueError("maps do not compose")
        return RingMap(self.source, other.target,
                       [other.apply(im) for im in self.images], check=False)

    def __eq__(self, other):
        return (isinstance(other, RingMap)
                and self.source.same_ring(other.source)
                and self.target.same_ring(other.target)
                and all(a == b for a, b in zip(self.images, other.images)))


def identity_map(q):
    return RingMap(q, q, q.gens(), check=False)


class DescentStructure:
    """Unit maps, counit, comultiplication and flip on A' (x) A'."""

    def __init__(self, spec, e_poly):
        self.spec = spec
        self.q1 = PolyQuotient(spec, e_poly, 1)
        self.q2 = PolyQuotient(spec, e_poly, 2)
        self.q3 = PolyQuotient(spec, e_poly, 3)
        self.q4 = PolyQuotient(spec, e_poly, 4)
        g2, g3, g4 = self.q2.gens(), self.q3.gens(), self.q4.gens()
        self.source = RingMap(self.q1, self.q2, [g2[0]])
        self.target = RingMap(self.q1, self.q2, [g2[1]])
        self.counit = RingMap(self.q2, self.q1, [self.q1.gen(0)] * 2)
        self.comul = RingMap(self.q2, self.q3, [g3[0], g3[2]])
        self.antipode = RingMap(self.q2, self.q2, [g2[1], g2[0]])
        # expansions Q3 -> Q4 refining either half of the middle slot
        self.expand_first = RingMap(self.q3, self.q4, [g4[0], g4[2], g4[3]])
        self.expand_second = RingMap(self.q3, self.q4, [g4[0], g4[1], g4[3]])
        # collapses Q3 -> Q2 applying the counit to either adjacent pair
        self.collapse_first = RingMap(self.q3, self.q2, [g2[0], g2[0], g2[1]])
        self.collapse_second = RingMap(self.q3, self.q2, [g2[0], g2[1], g2[1]])

    def with_antipode(self, amap):
        other = DescentStructure.__new__(DescentStructure)
        other.__dict__.update(self.__dict__)
        other.antipode = amap
        return other


class AxiomReport:
    def __init__(self, results):
        self.results = results
        self.failures = [name for name, ok in results if not ok]
        self.ok = not self.failures

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "AxiomReport(ok)"
        return "AxiomReport(failed: %s)" % ", ".join(self.failures)

    def to_json(self):
        return {"ok": self.ok,
                "axioms": {name: ok for name, ok in self.results},
                "failures": list(self.failures)}


def check_hopf_axioms(h):
    """Verify the groupoid-algebra axioms; the report names any failure."""
    id1 = identity_map(h.q1)
    id2 = identity_map(h.q2)
    results = [
        ("counit retracts the left unit", h.source.then(h.counit) == id1),
        ("counit retracts the right unit", h.target.then(h.counit) == id1),
        ("comultiplication is coassociative",
         h.comul.then(h.expand_first) == h.comul.then(h.expand_second)),
        ("left counit law", h.comul.then(h.collapse_first) == id2),
        ("right counit law", h.comul.then(h.collapse_second) == id2),
        ("antipode is an involution",
         h.antipode.then(h.antipode) == id2),
        ("antipode exchanges the unit maps",
         h.source.then(h.antipode) == h.target
         and h.target.then(h.antipode) == h.source),
        ("antipode fixes the counit",
         h.antipode.then(h.counit) == h.counit),
    ]
    return AxiomReport(results)


def descent_structure(spec, e_poly):
    return DescentStructure(spec, e_poly)


def exterior_model(ring, k):
    """Exterior Koszul complex on k copies of the uniformizer.

    Rank 2^k with basis indexed by subsets in degree -|S|; the homotopy
    is exterior multiplication by the first generator.
    """
    if k < 1:
        raise ValueError("need at least one generator")
    pi = model_uniformizer(ring)
    subsets = []
    for r in range(k + 1):
        subsets.extend(combinations(range(1, k + 1), r))
    index = {s: i for i, s in enumerate(subsets)}
    n = len(subsets)
    degrees = tuple(-len(s) for s in subsets)
    d = [[ring.zero] * n for _ in range(n)]
    h = [[ring.zero] * n for _ in range(n)]
    for s in subsets:
        col = index[s]
        for pos, i in enumerate(s):
            rest = tuple(x for x in s if x != i)
            val = pi if pos % 2 == 0 else ring.neg(pi)
            d[index[rest]][col] = val
        if 1 not in s:
            h[index[(1,) + s]][col] = ring.one
    return KModule(ring, degrees, d, h)


def exterior_cohomology_dims(ring, k):
    """Lengths per degree of the exterior model; degree -i has C(k-1, i)."""
    model = exterior_model(ring, k)
    profile = model.cohomology_profile()
    out = {}
    for deg, data in profile.items():
        if data["free"]:
            raise RamifyError("exterior model cohomology is torsion")
        if data["length"]:
            out[deg] = data["length"]
    return out


def expected_exterior_dims(k):
    return {-i: comb(k - 1, i) for i in range(k) if comb(k - 1, i)}
