"""Strict Koszul dg modules over an exact coefficient ring.

The ambient dg algebra is A[eps]/(eps^2) with d(eps) = pi, where A is either
F_q[t] (pi = t) or ZZ localized in spirit at p (pi = p).  A module is a
graded free A-module with a differential D of degree +1 and an odd operator
H of degree -1 (the eps-action) subject to

    D*D = 0,   H*H = 0,   D*H + H*D = pi.

Working over the exact ring keeps kernels honest, so cohomology comes from
Smith normal form with no precision bookkeeping.

K2Module adds a second, free eps-direction: the underlying module is free
over A[eps2] with basis mu_1..mu_s, stored in the block order
(mu_1..mu_s, eps2*mu_1..eps2*mu_s).  The convolution M (*) N splices M's
free eps2-direction onto N's eps-action and is strictly unital and
associative on the nose.
"""

from .. import euclid
from ..finite_field import FqPolyRing, ZRing


def model_uniformizer(ring):
    if isinstance(ring, FqPolyRing):
        return ring.gen()
    if isinstance(ring, ZRing):
        if not ring.p:
            raise ValueError("ZRing needs its prime to serve as a dg base")
        return ring.p
    raise ValueError("unsupported coefficient ring %r" % (ring,))


def _scaled_identity(ring, c, n):
    out = euclid.mat_zero(ring, n, n)
    for i in range(n):
        out[i][i] = c
    return out


class KModule:
    """(degrees, D, H) over an exact ring; constructor checks the axioms."""

    def __init__(self, ring, degrees, d, h, check=True):
        self.ring = ring
        self.degrees = tuple(degrees)
        self.dim = len(self.degrees)
        self.d = [list(row) for row in d]
        self.h = [list(row) for row in h]
        self.pi = model_uniformizer(ring)
        if check:
            self._verify()

    def _verify(self):
        n = self.dim
        for name, mat in (("D", self.d), ("H", self.h)):
            if len(mat) != n or any(len(row) != n for row in mat):
                raise ValueError("%s is not %d x %d" % (name, n, n))
        ring = self.ring
        if not euclid.mat_is_zero(ring, euclid.mat_mul(ring, self.d, self.d)):
            raise ValueError("D^2 != 0")
        if not euclid.mat_is_zero(ring, euclid.mat_mul(ring, self.h, self.h)):
            raise ValueError("H^2 != 0")
        anti = euclid.mat_add(ring, euclid.mat_mul(ring, self.d, self.h),
                              euclid.mat_mul(ring, self.h, self.d))
        if not euclid.mat_eq(ring, anti, _scaled_identity(ring, self.pi, n)):
            raise ValueError("D*H + H*D != pi")
        for i in range(n):
            for j in range(n):
                if not ring.is_zero(self.d[i][j]) and \
                        self.degrees[i] != self.degrees[j] + 1:
                    raise ValueError("D entry (%d,%d) breaks the grading" % (i, j))
                if not ring.is_zero(self.h[i][j]) and \
                        self.degrees[i] != self.degrees[j] - 1:
                    raise ValueError("H entry (%d,%d) breaks the grading" % (i, j))

    # -- constructions ---------------------------------------------------

    def direct_sum(self, other):
        ring = self.ring
        n, m = self.dim, other.dim
        z1 = euclid.mat_zero(ring, n, m)
        z2 = euclid.mat_zero(ring, m, n)
        d = [r + z for r, z in zip(self.d, z1)] + \
            [z + r for r, z in zip(other.d, z2)]
        h = [r + z for r, z in zip(self.h, z1)] + \
            [z + r for r, z in zip(other.h, z2)]
        return type(self)(ring, self.degrees + other.degrees, d, h, check=False)

    def shift(self, k):
        """Same operators on basis elements pushed up in degree by k."""
        return type(self)(self.ring, [x + k for x in self.degrees],
                          self.d, self.h, check=False)

    def conjugate(self, p, pinv):
        """Change of basis by a degree-zero unimodular p (with inverse)."""
        ring = self.ring
        d = euclid.mat_mul(ring, p, euclid.mat_mul(ring, self.d, pinv))
        h = euclid.mat_mul(ring, p, euclid.mat_mul(ring, self.h, pinv))
        return KModule(ring, self.degrees, d, h)

    def __eq__(self, other):
        return (isinstance(other, KModule) and self.ring == other.ring
                and self.degrees == other.degrees
                and euclid.mat_eq(self.ring, self.d, other.d)
                and euclid.mat_eq(self.ring, self.h, other.h))

    # -- invariants ------------------------------------------------------

    def degree_indices(self):
        by_degree = {}
        for i, k in enumerate(self.degrees):
            by_degree.setdefault(k, []).append(i)
        return by_degree

    def block(self, mat, rows, cols):
        return [[mat[i][j] for j in cols] for i in rows]

    def cohomology_profile(self):
        """{degree: {"free": rank, "length": sum of pi-valuations}}."""
        by_degree = self.degree_indices()
        out = {}
        for k in sorted(by_degree):
            here = by_degree[k]
            above = by_degree.get(k + 1, [])
            below = by_degree.get(k - 1, [])
            outgoing = self.block(self.d, above, here) if above else None
            incoming = self.block(self.d, here, below) if below else None
            free, tors = euclid.cohomology_at(self.ring, outgoing, incoming,
                                              c_dim=len(here))
            _, length = euclid.localized_length(self.ring, free, tors)
            out[k] = {"free": free, "length": length}
        return out

    def is_free_over_ka(self):
        """Freeness over A[eps]: H has unit invariant factors of full half
        rank (so the module is induced along 1, eps)."""
        if self.dim % 2:
            return False
        if self.dim == 0:
            return True
        d, _, _ = euclid.smith(self.ring, self.h)
        diag = euclid.diagonal_of(self.ring, d)
        nonzero = [x for x in diag if not self.ring.is_zero(x)]
        return (len(nonzero) == self.dim // 2
                and all(self.ring.is_unit(x) for x in nonzero))


class K2Module(KModule):
    """KModule together with a free eps2-direction in standard block order.

    Basis (mu_1..mu_s, eps2 mu_1..eps2 mu_s); the eps2-action is the fixed
    matrix E = [[0,0],[I,0]].  Requiring [D,E] = pi and [H,E] = 0 pins the
    block shapes D = [[A_D, pi],[B_D, -A_D]], H = [[A_H, 0],[B_H, -A_H]].
    """

    def __init__(self, ring, eps_degrees, d, h, check=True):
        self.eps_degrees = tuple(eps_degrees)
        self.s = len(self.eps_degrees)
        degrees = self.eps_degrees + tuple(x - 1 for x in self.eps_degrees)
        super().__init__(ring, degrees, d, h, check=check)
        if check:
            self._verify_eps2()

    def eps2_matrix(self):
        s = self.s
        e = euclid.mat_zero(self.ring, 2 * s, 2 * s)
        for i in range(s):
            e[s + i][i] = self.ring.one
        return e

    def _verify_eps2(self):
        ring = self.ring
        e = self.eps2_matrix()
        n = self.dim
        de = euclid.mat_add(ring, euclid.mat_mul(ring, self.d, e),
                            euclid.mat_mul(ring, e, self.d))
        if not euclid.mat_eq(ring, de, _scaled_identity(ring, self.pi, n)):
            raise ValueError("D does not satisfy the eps2 Koszul relation")
        he = euclid.mat_add(ring, euclid.mat_mul(ring, self.h, e),
                            euclid.mat_mul(ring, e, self.h))
        if not euclid.mat_is_zero(ring, he):
            raise ValueError("H does not anticommute with eps2")

    @classmethod
    def from_pairs(cls, ring, eps_degrees, a_d, b_d, a_h, b_h):
        """Operators given as s x s coefficient pairs (a + b*eps2)."""
        s = len(eps_degrees)
        pi = model_uniformizer(ring)
        d = euclid.mat_zero(ring, 2 * s, 2 * s)
        h = euclid.mat_zero(ring, 2 * s, 2 * s)
        for i in range(s):
            d[i][s + i] = pi
            for j in range(s):
                d[i][j] = a_d[i][j]
                d[s + i][j] = b_d[i][j]
                d[s + i][s + j] = ring.neg(a_d[i][j])
                h[i][j] = a_h[i][j]
                h[s + i][j] = b_h[i][j]
                h[s + i][s + j] = ring.neg(a_h[i][j])
        return cls(ring, eps_degrees, d, h)

    def pair_blocks(self, mat):
        s = self.s
        a = [[mat[i][j] for j in range(s)] for i in range(s)]
        b = [[mat[s + i][j] for j in range(s)] for i in range(s)]
        return a, b

    def direct_sum(self, other):
        ring = self.ring
        sa, sb = self.s, other.s
        deg = self.eps_degrees + other.eps_degrees

        def splice(m1, m2):
            a1, b1 = self.pair_blocks(m1)
            a2, b2 = other.pair_blocks(m2)
            za = euclid.mat_zero(ring, sa, sb)
            zb = euclid.mat_zero(ring, sb, sa)
            a = [r + z for r, z in zip(a1, za)] + [z + r for r, z in zip(a2, zb)]
            b = [r + z for r, z in zip(b1, za)] + [z + r for r, z in zip(b2, zb)]
            return a, b

        a_d, b_d = splice(self.d, other.d)
        a_h, b_h = splice(self.h, other.h)
        return K2Module.from_pairs(ring, deg, a_d, b_d, a_h, b_h)

    def shift(self, k):
        return K2Module(self.ring, [x + k for x in self.eps_degrees],
                        self.d, self.h, check=False)


def unit_k2(ring):
    """K_A itself: rank one over A[eps2], H(1) = eps2."""
    return K2Module.from_pairs(ring, [0], [[ring.zero]], [[ring.zero]],
                               [[ring.zero]], [[ring.one]])


def ka_squared(ring):
    """A[eps1, eps2] with d(eps_i) = pi, free over eps2, H = eps1."""
    pi = model_uniformizer(ring)
    z, o = ring.zero, ring.one
    a_d = [[z, pi], [z, z]]
    b_d = [[z, z], [z, z]]
    a_h = [[z, z], [o, z]]
    b_h = [[z, z], [z, z]]
    return K2Module.from_pairs(ring, [0, -1], a_d, b_d, a_h, b_h)


def _sign(ring, k):
    return ring.one if k % 2 == 0 else ring.neg(ring.one)


def convolution(m, n):
    """M (*) N: M's eps2 slides through to act as N's H.

    M must be a K2Module; the result is a KModule, or a K2Module in
    standard block order when N is one.  Unit laws with unit_k2 hold as
    literal matrix identities, as does associativity.
    """
    if not isinstance(m, K2Module):
        raise TypeError("left factor must be free over eps2")
    ring = m.ring
    if ring != n.ring:
        raise ValueError("mismatched coefficient rings")
    a_d, b_d = m.pair_blocks(m.d)
    a_h, b_h = m.pair_blocks(m.h)
    s, nd = m.s, n.dim
    dim = s * nd
    degrees = [m.eps_degrees[j] + n.degrees[b]
               for j in range(s) for b in range(nd)]

    def build(a, b, include_n_d):
        out = euclid.mat_zero(ring, dim, dim)
        for i in range(s):
            sgn_i = _sign(ring, m.eps_degrees[i])
            for j in range(s):
                aij, bij = a[i][j], b[i][j]
                a_zero = ring.is_zero(aij)
                b_zero = ring.is_zero(bij)
                if a_zero and b_zero and (not include_n_d or i != j):
                    continue
                for b2 in range(nd):
                    for b1 in range(nd):
                        val = ring.zero
                        if not a_zero and b1 == b2:
                            val = aij
                        if not b_zero and not ring.is_zero(n.h[b1][b2]):
                            val = ring.add(val, ring.mul(
                                ring.mul(bij, sgn_i), n.h[b1][b2]))
                        if include_n_d and i == j and \
                                not ring.is_zero(n.d[b1][b2]):
                            val = ring.add(val, ring.mul(
                                _sign(ring, m.eps_degrees[j]), n.d[b1][b2]))
                        if not ring.is_zero(val):
                            out[i * nd + b1][j * nd + b2] = val
        return out

    d_res = build(a_d, b_d, True)
    h_res = build(a_h, b_h, False)

    if not isinstance(n, K2Module):
        return KModule(ring, degrees, d_res, h_res)

    # reorder to standard block form: eps-basis w_jk = mu_j (x) nu_k, with
    # eps2 w_jk = (-1)^{sigma_j} mu_j (x) eps2 nu_k
    sn = n.s
    half = s * sn
    old_index = []
    signs = []
    for j in range(s):
        for k in range(sn):
            old_index.append(j * nd + k)
            signs.append(0)
    for j in range(s):
        for k in range(sn):
            old_index.append(j * nd + sn + k)
            signs.append(m.eps_degrees[j] % 2)

    def reorder(mat):
        out = euclid.mat_zero(ring, 2 * half, 2 * half)
        for i in range(2 * half):
            for j in range(2 * half):
                val = mat[old_index[i]][old_index[j]]
                if ring.is_zero(val):
                    continue
                if (signs[i] + signs[j]) % 2:
                    val = ring.neg(val)
                out[i][j] = val
        return out

    eps_degrees = [m.eps_degrees[j] + n.eps_degrees[k]
                   for j in range(s) for k in range(sn)]
    return K2Module(ring, eps_degrees, reorder(d_res), reorder(h_res))


def ka_tensor(n):
    """K_A (x)_A N for a KModule N: basis (1 (x) N, eps1 (x) N), with
    D = [[D_N, pi],[0, -D_N]] and H = eps1-multiplication."""
    ring = n.ring
    pi = model_uniformizer(ring)
    nd = n.dim
    d = euclid.mat_zero(ring, 2 * nd, 2 * nd)
    h = euclid.mat_zero(ring, 2 * nd, 2 * nd)
    for b1 in range(nd):
        d[b1][nd + b1] = pi
        h[nd + b1][b1] = ring.one
        for b2 in range(nd):
            d[b1][b2] = n.d[b1][b2]
            d[nd + b1][nd + b2] = ring.neg(n.d[b1][b2])
    degrees = list(n.degrees) + [x - 1 for x in n.degrees]
    if not isinstance(n, K2Module):
        return KModule(ring, degrees, d, h)
    sn = n.s
    half = 2 * sn
    old_index = []
    signs = []
    for j in range(2):
        for k in range(sn):
            old_index.append(j * nd + k)
            signs.append(0)
    for j in range(2):
        for k in range(sn):
            old_index.append(j * nd + sn + k)
            signs.append(j)  # degrees of 1, eps1 are 0, -1

    def reorder(mat):
        out = euclid.mat_zero(ring, 2 * half, 2 * half)
        for i in range(2 * half):
            for jj in range(2 * half):
                val = mat[old_index[i]][old_index[jj]]
                if ring.is_zero(val):
                    continue
                if (signs[i] + signs[jj]) % 2:
                    val = ring.neg(val)
                out[i][jj] = val
        return out

    eps_degrees = [deg + n.eps_degrees[k] for deg in (0, -1)
                   for k in range(sn)]
    return K2Module(ring, eps_degrees, reorder(d), reorder(h))
