"""Matrix factorizations of one-variable potentials over a field.

A factorization of f in k[x] is a pair of square matrices phi, psi with
phi*psi = psi*phi = f.  Factorizations of 0 are honest 2-periodic
complexes; their cohomology is computed by Smith normal form over k[x] and
reported as k-dimensions per parity.  The stabilized residue field of
x^e is the rank-one pair (x, x^{e-1}); duals negate the potential, tensor
products add potentials, and Hom complexes between factorizations of the
same potential compute morphism spaces up to homotopy.
"""

from .. import euclid
from ..errors import NotStabilized


class MatrixFactorization:
    """(phi: P1 -> P0, psi: P0 -> P1) with both products equal to f."""

    def __init__(self, ring, f, phi, psi, check=True):
        self.ring = ring
        self.f = f
        self.phi = [list(r) for r in phi]
        self.psi = [list(r) for r in psi]
        self.rank0 = len(self.phi)
        self.rank1 = len(self.psi)
        if check:
            self._verify()

    def _verify(self):
        ring = self.ring
        if any(len(r) != self.rank1 for r in self.phi) or \
                any(len(r) != self.rank0 for r in self.psi):
            raise ValueError("phi and psi must have transposed shapes")
        for prod, n in ((euclid.mat_mul(ring, self.phi, self.psi), self.rank0),
                        (euclid.mat_mul(ring, self.psi, self.phi), self.rank1)):
            want = euclid.mat_zero(ring, n, n)
            for i in range(n):
                want[i][i] = self.f
            if not euclid.mat_eq(ring, prod, want):
                raise ValueError("phi*psi != f (not a factorization)")

    def shift(self):
        """Suspension [1]: (phi, psi) -> (-psi, -phi), same potential."""
        neg = lambda mat: euclid.mat_neg(self.ring, mat)
        return MatrixFactorization(self.ring, self.f,
                                   neg(self.psi), neg(self.phi), check=False)

    def direct_sum(self, other):
        ring = self.ring
        if not ring.eq(self.f, other.f):
            raise ValueError("direct sum needs one potential")

        def blocks(a, b, r1, c1, r2, c2):
            top = [row + [ring.zero] * c2 for row in a]
            bot = [[ring.zero] * c1 + row for row in b]
            return top + bot

        return MatrixFactorization(
            self.ring, self.f,
            blocks(self.phi, other.phi, self.rank0, self.rank1,
                   other.rank0, other.rank1),
            blocks(self.psi, other.psi, self.rank1, self.rank0,
                   other.rank1, other.rank0), check=False)

    def to_json(self):
        pr = getattr(self.ring, "pretty", str)
        return {"potential": pr(self.f),
                "phi": [[pr(x) for x in row] for row in self.phi],
                "psi": [[pr(x) for x in row] for row in self.psi]}


def stabilized_residue_field(ring, e):
    """The rank-one factorization (x, x^{e-1}) of x^e."""
    if e < 1:
        raise ValueError("exponent must be positive")
    x = ring.gen()
    f = ring.from_int_coeffs([0] * e + [1])
    lo = [[x]]
    hi = [[ring.from_int_coeffs([0] * (e - 1) + [1])]]
    return MatrixFactorization(ring, f, lo, hi)


def dual_mf(m):
    """Linear dual: a factorization of -f via (psi^T, -phi^T)."""
    ring = m.ring
    phi = [[m.psi[j][i] for j in range(m.rank1)] for i in range(m.rank0)]
    psi = [[ring.neg(m.phi[j][i]) for j in range(m.rank0)]
           for i in range(m.rank1)]
    return MatrixFactorization(ring, ring.neg(m.f), phi, psi)


def tensor_mf(m, n):
    """Tensor product, a factorization of f_M + f_N.

    Even part M0N0 + M1N1, odd part M1N0 + M0N1, with the usual signs; when
    f_N = -f_M the result squares to zero and is a 2-periodic complex.
    """
    ring = m.ring

    def kron(a, b, arows, acols, brows, bcols):
        out = euclid.mat_zero(ring, arows * brows, acols * bcols)
        for i in range(arows):
            for j in range(acols):
                if ring.is_zero(a[i][j]):
                    continue
                for k in range(brows):
                    for l in range(bcols):
                        if not ring.is_zero(b[k][l]):
                            out[i * brows + k][j * bcols + l] = \
                                ring.mul(a[i][j], b[k][l])
        return out

    def ident(nn):
        return euclid.mat_identity(ring, nn)

    def neg(a):
        return euclid.mat_neg(ring, a)

    def stack(tl, tr, bl, br):
        return [rl + rr for rl, rr in zip(tl, tr)] + \
               [rl + rr for rl, rr in zip(bl, br)]

    m0, m1, n0, n1 = m.rank0, m.rank1, n.rank0, n.rank1
    # phi: odd -> even, blocks over (M1N0 + M0N1) -> (M0N0 + M1N1)
    phi = stack(kron(m.phi, ident(n0), m0, m1, n0, n0),
                kron(ident(m0), n.phi, m0, m0, n0, n1),
                neg(kron(ident(m1), n.psi, m1, m1, n1, n0)),
                kron(m.psi, ident(n1), m1, m0, n1, n1))
    # psi: even -> odd
    psi = stack(kron(m.psi, ident(n0), m1, m0, n0, n0),
                neg(kron(ident(m1), n.phi, m1, m1, n0, n1)),
                kron(ident(m0), n.psi, m0, m0, n1, n0),
                kron(m.phi, ident(n1), m0, m1, n1, n1))
    return MatrixFactorization(ring, ring.add(m.f, n.f), phi, psi)


class PeriodicCohomology:
    """k-dimensions of the two cohomology groups of a 2-periodic complex."""

    def __init__(self, even, odd):
        self.even = even
        self.odd = odd

    def dims(self):
        return (self.even, self.odd)

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.dims() == other
        return isinstance(other, PeriodicCohomology) and \
            self.dims() == other.dims()

    def __repr__(self):
        return "PeriodicCohomology(even=%d, odd=%d)" % (self.even, self.odd)

    def to_json(self):
        return {"even": self.even, "odd": self.odd}


def periodic_cohomology(m):
    """Cohomology of a factorization of zero: (ker psi/im phi, ker phi/im psi)."""
    ring = m.ring
    if not ring.is_zero(m.f):
        raise ValueError("cohomology needs a factorization of zero")
    free_e, tors_e = euclid.cohomology_at(ring, m.psi, m.phi,
                                          c_dim=m.rank0)
    free_o, tors_o = euclid.cohomology_at(ring, m.phi, m.psi,
                                          c_dim=m.rank1)
    even = euclid.finite_dimension(ring, free_e, tors_e,
                                   where="even cohomology")
    odd = euclid.finite_dimension(ring, free_o, tors_o,
                                  where="odd cohomology")
    return PeriodicCohomology(even, odd)


def _hom_matrix(ring, terms, rows_shape, cols_shape):
    """Matrix of alpha |-> sum A*alpha*B over flattened entry coordinates.

    terms: list of (a, b, sign); alpha has cols_shape = (p, q), the output
    (r, s) = rows_shape; entries of alpha flatten row-major.
    """
    r, s = rows_shape
    p, q = cols_shape
    out = euclid.mat_zero(ring, r * s, p * q)
    for (a, b, sgn) in terms:
        for i in range(r):
            for k in range(p):
                if ring.is_zero(a[i][k]):
                    continue
                for l in range(q):
                    for j in range(s):
                        if ring.is_zero(b[l][j]):
                            continue
                        val = ring.mul(a[i][k], b[l][j])
                        if sgn < 0:
                            val = ring.neg(val)
                        out[i * s + j][k * q + l] = \
                            ring.add(out[i * s + j][k * q + l], val)
    return out


def mf_hom_cohomology(m, n):
    """Morphism-space dimensions (even, odd) up to homotopy.

    Even cochains (a0: M0->N0, a1: M1->N1), odd cochains (u: M1->N0,
    v: M0->N1); the differentials are graded commutators with (phi, psi).
    """
    ring = m.ring
    if not ring.eq(m.f, n.f):
        raise ValueError("Hom needs factorizations of the same potential")
    eye = euclid.mat_identity
    # D_even: (a0, a1) -> (phi_N a1 - a0 phi_M : M1->N0,
    #                      psi_N a0 - a1 psi_M : M0->N1)
    top = _hom_matrix(ring, [(eye(ring, n.rank0), m.phi, -1)],
                      (n.rank0, m.rank1), (n.rank0, m.rank0))
    top2 = _hom_matrix(ring, [(n.phi, eye(ring, m.rank1), 1)],
                       (n.rank0, m.rank1), (n.rank1, m.rank1))
    bot = _hom_matrix(ring, [(n.psi, eye(ring, m.rank0), 1)],
                      (n.rank1, m.rank0), (n.rank0, m.rank0))
    bot2 = _hom_matrix(ring, [(eye(ring, n.rank1), m.psi, -1)],
                       (n.rank1, m.rank0), (n.rank1, m.rank1))
    d_even = [r1 + r2 for r1, r2 in zip(top, top2)] + \
             [r1 + r2 for r1, r2 in zip(bot, bot2)]
    # D_odd: (u, v) -> (phi_N v + u psi_M : M0->N0,
    #                   psi_N u + v phi_M : M1->N1)
    otop = _hom_matrix(ring, [(eye(ring, n.rank0), m.psi, 1)],
                       (n.rank0, m.rank0), (n.rank0, m.rank1))
    otop2 = _hom_matrix(ring, [(n.phi, eye(ring, m.rank0), 1)],
                        (n.rank0, m.rank0), (n.rank1, m.rank0))
    obot = _hom_matrix(ring, [(n.psi, eye(ring, m.rank1), 1)],
                       (n.rank1, m.rank1), (n.rank0, m.rank1))
    obot2 = _hom_matrix(ring, [(eye(ring, n.rank1), m.phi, 1)],
                        (n.rank1, m.rank1), (n.rank1, m.rank0))
    d_odd = [r1 + r2 for r1, r2 in zip(otop, otop2)] + \
            [r1 + r2 for r1, r2 in zip(obot, obot2)]

    free_e, tors_e = euclid.cohomology_at(ring, d_even, d_odd)
    free_o, tors_o = euclid.cohomology_at(ring, d_odd, d_even)
    return PeriodicCohomology(
        euclid.finite_dimension(ring, free_e, tors_e,
                                where="even morphism space"),
        euclid.finite_dimension(ring, free_o, tors_o,
                                where="odd morphism space"))


def periodic_end_dims(m):
    return mf_hom_cohomology(m, m)


def contractible(ring, f):
    """The rank-one factorization (f, 1); zero object up to homotopy."""
    return MatrixFactorization(ring, f, [[f]], [[ring.one]])


def unit_object(ring):
    """The unit of the 2-periodic residue-field model.

    A single even generator killed by x: cohomology (1, 0).
    """
    return MatrixFactorization(ring, ring.zero, [[ring.gen()]],
                               [[ring.zero]])


def graded_end_dims(per):
    """Endomorphism dimensions of a graded space with the given dims."""
    a, b = per.even, per.odd
    return PeriodicCohomology(a * a + b * b, 2 * a * b)


def morita_object_class(ring, e):
    """Per-period End dimensions of the duality image of the residue field.

    Tensors the stabilized residue field with its dual, takes periodic
    cohomology over the polynomial ring, and returns the endomorphism
    dimensions of that graded space; the expected answer is (2, 2) for
    every e >= 2.
    """
    if e < 2:
        raise ValueError("needs a genuinely singular potential (e >= 2)")
    re = stabilized_residue_field(ring, e)
    ab = periodic_cohomology(tensor_mf(re, dual_mf(re)))
    return graded_end_dims(ab)
