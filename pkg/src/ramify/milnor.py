"""Milnor numbers of hypersurface germs over a truncated DVR.

The number is the base-ring length of the Jacobian quotient
A[x]/(f, df/dx0, ..., df/dx_{n-1}), computed on the window of monomials of
total degree < M at working precision N and accepted once the length agrees
at (M, N) and (M+2, N+2).

Inputs keep exact integer (or integer-polynomial-in-t) coefficients, so the
relation matrix can be rebuilt at any precision, and rank over the exact
coefficient ring decides non-isolatedness outright: a functional killing
every relation at level M is supported in degrees < M and so also kills
every higher-level relation, i.e. the quotient has a free summand.
"""

from fractions import Fraction
import itertools

from . import euclid
from .conductors import dimtot, vanishing_cycle_rep_n0
from .dvr_arith import quotient_length
from .eisenstein_galois import automorphism_group, extend
from .errors import NotIsolated, PrecisionLoss
from .finite_field import FqPolyRing, ZRing
from .intpoly import IntPoly, VARS, parse_poly

DEGREE_CAP = 24
PRECISION_CAP = 32


class Hypersurface:
    """f in A[x0..x_{n-1}], with t allowed in equal characteristic."""

    def __init__(self, spec, poly, nvars=None):
        if isinstance(poly, str):
            poly = parse_poly(poly)
        used = poly.used_vars()
        if "x" in used:
            if any(v != "x" and v.startswith("x") for v in used):
                raise ValueError("mix of x and indexed x0..x9 variables")
            sub = {v: IntPoly.variable(VARS, v) for v in VARS}
            sub["x"] = IntPoly.variable(VARS, "x0")
            poly = poly.substitute(sub)
            used = poly.used_vars()
        if spec.kind == "mixed" and "t" in used:
            raise ValueError("t has no meaning over a mixed characteristic base")
        if poly.is_zero():
            raise ValueError("the zero polynomial cuts out everything")
        indices = [int(v[1:]) for v in used if v != "t"]
        if nvars is None:
            nvars = max(indices) + 1 if indices else 0
        self.spec = spec
        self.poly = poly
        self.nvars = nvars
        self.xvars = ["x%d" % i for i in range(nvars)]
        self.gens = [poly] + [poly.derivative(v) for v in self.xvars]
        self._gen_terms = [self._as_terms(g) for g in self.gens]

    def _as_terms(self, g):
        """[(x-exponent tuple, t-power, coeff)], x-exponents over nvars."""
        ti = g.vars.index("t")
        xi = [g.vars.index(v) for v in self.xvars]
        out = []
        for mono, c in g.terms.items():
            out.append((tuple(mono[i] for i in xi), mono[ti], c))
        return out

    def to_json(self):
        return {"poly": repr(self.poly), "nvars": self.nvars,
                "base": self.spec.to_json()}


def _monomials_below(nvars, m):
    """All exponent tuples with total degree < m, graded lexicographic."""
    out = []
    for d in range(m):
        out.extend(_monomials_of(nvars, d))
    return out


def _monomials_of(nvars, d):
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in _monomials_of(nvars - 1, d - first):
            out.append((first,) + rest)
    return sorted(out, reverse=True)


def _columns(hyp, m):
    """Per column: {row index: {t-power: int}} over the degree-< m window."""
    basis = _monomials_below(hyp.nvars, m)
    index = {mono: i for i, mono in enumerate(basis)}
    cols = []
    for terms in hyp._gen_terms:
        for mono in basis:
            col = {}
            for (xe, tp, c) in terms:
                shifted = tuple(a + b for a, b in zip(xe, mono))
                if sum(shifted) >= m:
                    continue
                row = index[shifted]
                acc = col.setdefault(row, {})
                acc[tp] = acc.get(tp, 0) + c
            cols.append(col)
    return basis, cols


def _certify_full_rank(hyp, m):
    """Rank over the exact coefficient ring; deficiency is a permanent free
    summand of the Jacobian quotient, hence a non-isolated singularity."""
    basis, cols = _columns(hyp, m)
    if hyp.spec.kind == "equal":
        ring = FqPolyRing(hyp.spec.residue, "t")

        def build(acc):
            top = max(acc) if acc else -1
            return ring.from_int_coeffs([acc.get(i, 0) for i in range(top + 1)])
    else:
        ring = ZRing(hyp.spec.p)

        def build(acc):
            return acc.get(0, 0)

    mat = [[ring.zero if hyp.spec.kind == "equal" else 0
            for _ in cols] for _ in basis]
    for j, col in enumerate(cols):
        for i, acc in col.items():
            mat[i][j] = build(acc)
    if euclid.rank(ring, mat) < len(basis):
        raise NotIsolated(
            "Jacobian relations have rank %d on %d monomials below degree %d"
            % (euclid.rank(ring, mat), len(basis), m))


def _truncated_length(hyp, m, n):
    spec = hyp.spec.with_precision(n)
    basis, cols = _columns(hyp, m)
    mat = [[spec.zero() for _ in cols] for _ in basis]
    for j, col in enumerate(cols):
        for i, acc in col.items():
            if spec.kind == "equal":
                top = max(acc)
                mat[i][j] = spec.from_t_coeffs(
                    [acc.get(k, 0) for k in range(top + 1)])
            else:
                mat[i][j] = spec.from_int(acc[0])
    return quotient_length(mat, spec)


class MilnorResult:
    def __init__(self, mu, degree_cutoff, precision):
        self.mu = mu
        self.degree_cutoff = degree_cutoff
        self.precision = precision

    def __repr__(self):
        return "MilnorResult(mu=%d, degree_cutoff=%d, precision=%d)" % (
            self.mu, self.degree_cutoff, self.precision)

    def to_json(self):
        return {"mu": self.mu, "degree_cutoff": self.degree_cutoff,
                "precision": self.precision}


def milnor_number(hyp, max_degree=DEGREE_CAP, max_precision=PRECISION_CAP):
    """Stabilized length of the Jacobian quotient.

    Raises NotIsolated when the exact rank certificate fails or the length
    will not stabilize below the degree cap, PrecisionLoss when lengths stay
    undecidable at the precision cap.
    """
    start = max(2, 1 + max(g.total_degree_in(hyp.xvars) for g in hyp.gens))
    max_degree = max(max_degree, start + 4)
    max_precision = max(max_precision, hyp.spec.precision)

    def attempt(m, n):
        _certify_full_rank(hyp, m)
        while True:
            try:
                return _truncated_length(hyp, m, n), n
            except PrecisionLoss:
                if n + 2 > max_precision:
                    raise
                n += 2

    m, n = start, hyp.spec.precision
    cur, n = attempt(m, n)
    while True:
        if m + 2 > max_degree:
            raise NotIsolated(
                "length still moving at degree cap %d" % max_degree)
        nxt, n2 = attempt(m + 2, n + 2 if n + 2 <= max_precision else n)
        if nxt == cur:
            return MilnorResult(cur, m + 2, n2)
        cur, m, n = nxt, m + 2, n2


def verify_deligne_milnor_n0(spec, e_poly):
    """For a relative dimension zero germ A[x]/E: compare the Milnor number
    with the total dimension of the rank-(e-1) monodromy module.

    Returns {"mu", "dimtot", "equal", "cutoffs"}; NotGalois propagates when
    the base is too small to see every automorphism.
    """
    if isinstance(e_poly, str):
        e_poly = parse_poly(e_poly)
    ext = extend(spec, e_poly)
    gdata = automorphism_group(ext)
    gdata.require_galois()
    phi = vanishing_cycle_rep_n0(gdata)
    total = dimtot(phi, gdata)
    res = milnor_number(Hypersurface(spec, e_poly))
    return {
        "mu": res.mu,
        "dimtot": total,
        "equal": Fraction(res.mu) == total,
        "cutoffs": {"M": res.degree_cutoff, "N": res.precision},
    }
