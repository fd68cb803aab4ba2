"""Exact linear algebra over Euclidean rings (ZZ, F_q[t]).

Everything here is pivot-and-reduce Smith normal form with unimodular
transform tracking; no fraction-field detours, so kernels, images and
cohomology of complexes of free modules come out exact.  Matrices are
lists of lists of ring elements; the ring is one of the adapter objects
from finite_field (ZRing, FqPolyRing, QRing).
"""

from .errors import NotStabilized


def mat_zero(ring, rows, cols):
    return [[ring.zero for _ in range(cols)] for _ in range(rows)]


def mat_identity(ring, n):
    out = mat_zero(ring, n, n)
    for i in range(n):
        out[i][i] = ring.one
    return out


def mat_mul(ring, a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = mat_zero(ring, rows, cols)
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            x = ai[k]
            if ring.is_zero(x):
                continue
            bk = b[k]
            oi = out[i]
            for j in range(cols):
                if not ring.is_zero(bk[j]):
                    oi[j] = ring.add(oi[j], ring.mul(x, bk[j]))
    return out


def mat_add(ring, a, b):
    return [[ring.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(ring, a):
    return [[ring.neg(x) for x in row] for row in a]


def mat_eq(ring, a, b):
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if not ring.eq(x, y):
                return False
    return True


def mat_is_zero(ring, a):
    return all(ring.is_zero(x) for row in a for x in row)


def mat_scal(ring, c, a):
    return [[ring.mul(c, x) for x in row] for row in a]


def smith(ring, m):
    """Diagonalize m by unimodular row/column operations.

    Returns (d, u, v) with u*m*v = d, d diagonal (no divisibility chain
    is enforced; the diagonal is enough for ranks, kernels and lengths).
    u and v are unimodular over the ring.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [list(r) for r in m]
    u = mat_identity(ring, rows)
    v = mat_identity(ring, cols)

    def row_op(i, j, c):
        # row_i += c * row_j  (on d and u)
        for t in range(cols):
            d[i][t] = ring.add(d[i][t], ring.mul(c, d[j][t]))
        for t in range(rows):
            u[i][t] = ring.add(u[i][t], ring.mul(c, u[j][t]))

    def col_op(i, j, c):
        # col_i += c * col_j
        for t in range(rows):
            d[t][i] = ring.add(d[t][i], ring.mul(c, d[t][j]))
        for t in range(cols):
            v[t][i] = ring.add(v[t][i], ring.mul(c, v[t][j]))

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for t in range(rows):
            d[t][i], d[t][j] = d[t][j], d[t][i]
        for t in range(cols):
            v[t][i], v[t][j] = v[t][j], v[t][i]

    k = 0
    while k < rows and k < cols:
        # locate a minimal-norm nonzero pivot in the trailing block
        piv = None
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                if not ring.is_zero(d[i][j]):
                    n = ring.norm(d[i][j])
                    if best is None or n < best:
                        best, piv = n, (i, j)
        if piv is None:
            break
        swap_rows(k, piv[0])
        swap_cols(k, piv[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, rows):
                if ring.is_zero(d[i][k]):
                    continue
                q, r = ring.divmod(d[i][k], d[k][k])
                row_op(i, k, ring.neg(q))
                if not ring.is_zero(r):
                    # remainder strictly smaller: promote it to pivot
                    swap_rows(k, i)
                    dirty = True
            for j in range(k + 1, cols):
                if ring.is_zero(d[k][j]):
                    continue
                q, r = ring.divmod(d[k][j], d[k][k])
                col_op(j, k, ring.neg(q))
                if not ring.is_zero(r):
                    swap_cols(k, j)
                    dirty = True
        k += 1
    return d, u, v


def diagonal_of(ring, d):
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n)]


def rank(ring, m):
    if not m or not m[0]:
        return 0
    d, _, _ = smith(ring, m)
    return sum(1 for x in diagonal_of(ring, d) if not ring.is_zero(x))


def kernel_basis(ring, m):
    """Columns spanning ker(m) as a free module (m acts on column vectors)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return [[] for _ in range(cols)]
    if rows == 0:
        return mat_identity(ring, cols)
    d, _, v = smith(ring, m)
    keep = []
    for j in range(cols):
        nz = any(not ring.is_zero(d[i][j]) for i in range(rows))
        if not nz:
            keep.append(j)
    return [[v[i][j] for j in keep] for i in range(cols)]


def solve_columns(ring, a, b):
    """Solve a * x = b exactly (a: n x k, full column rank; b: n x s).

    The columns of b must lie in the span of a's columns with ring
    coefficients; raises ValueError otherwise.
    """
    n = len(a)
    k = len(a[0]) if a else 0
    s = len(b[0]) if b and b[0] is not None else 0
    if k == 0:
        if any(not ring.is_zero(b[i][j]) for i in range(n) for j in range(s)):
            raise ValueError("inconsistent system")
        return []
    d, u, v = smith(ring, a)
    ub = mat_mul(ring, u, b)
    y = mat_zero(ring, k, s)
    for i in range(n):
        if i < k and not ring.is_zero(d[i][i]):
            for j in range(s):
                q, r = ring.divmod(ub[i][j], d[i][i])
                if not ring.is_zero(r):
                    raise ValueError("not divisible: solution not in the module span")
                y[i][j] = q
        else:
            for j in range(s):
                if not ring.is_zero(ub[i][j]):
                    raise ValueError("inconsistent system")
    x = mat_mul(ring, v, y)
    return x


def cokernel_invariants(ring, m):
    """Invariant data of coker(m: R^cols -> R^rows).

    Returns (free_rank, torsion) where torsion lists the nonzero nonunit
    diagonal entries (unit-normalized).
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return 0, []
    if cols == 0:
        return rows, []
    d, _, _ = smith(ring, m)
    diag = diagonal_of(ring, d)
    nonzero = [x for x in diag if not ring.is_zero(x)]
    tors = []
    for x in nonzero:
        _, c = ring.canon(x)
        if not ring.is_unit(c):
            tors.append(c)
    return rows - len(nonzero), tors


def cohomology_at(ring, outgoing, incoming, c_dim=None):
    """H = ker(outgoing) / im(incoming) for maps of free modules.

    outgoing: matrix C -> D (or None for the zero map), incoming: matrix
    B -> C (or None), with outgoing * incoming = 0.  c_dim pins the rank
    of C when either map is missing.  Returns (free_rank, torsion).
    """
    if c_dim is None:
        if outgoing is not None and (outgoing and outgoing[0] is not None):
            c_dim = len(outgoing[0]) if outgoing else 0
        elif incoming is not None:
            c_dim = len(incoming)
        else:
            raise ValueError("cannot infer module rank")
    if c_dim == 0:
        return 0, []
    no_out = outgoing is None or not outgoing or not outgoing[0]
    no_in = incoming is None or not incoming or not incoming[0]
    kbasis = mat_identity(ring, c_dim) if no_out else kernel_basis(ring, outgoing)
    kappa = len(kbasis[0]) if kbasis else 0
    if kappa == 0:
        return 0, []
    if no_in:
        return kappa, []
    x = solve_columns(ring, kbasis, incoming)
    return cokernel_invariants(ring, x)


def finite_dimension(ring, free_rank, torsion, where="cohomology"):
    """Total k-dimension of a torsion module; NotStabilized if free part."""
    if free_rank:
        raise NotStabilized("%s has a free part (no finite dimension)" % where)
    return sum(ring.k_dimension(t) for t in torsion)


def localized_length(ring, free_rank, torsion):
    """(free rank, length at the uniformizer) of a cokernel over ZZ or k[t]."""
    total = 0
    for t in torsion:
        v = ring.pi_valuation(t)
        if v:
            total += v
    return free_rank, total
