"""Composition of two-sided finite correspondences over the extension ring.

A'' = A'[x1] / E(x1) acts on a module that is free of finite rank over the
second factor A'; the first factor acts through a matrix Y over A' with
E(Y) = 0.  Composition substitutes one action matrix into the entries of
the other, which is a ring homomorphism, so the product is strictly
associative and A' itself (Y = [pi]) is a strict two-sided unit.
"""

from ..errors import PrecisionLoss


class CircledModule:
    """Free rank-s module over A' with a commuting x1-action matrix Y."""

    def __init__(self, ext, y, check=True):
        self.ext = ext
        self.y = [list(row) for row in y]
        self.rank = len(self.y)
        if check:
            self._verify()

    def _verify(self):
        if any(len(row) != self.rank for row in self.y):
            raise ValueError("action matrix must be square")
        value = _poly_at_matrix(self.ext, self.ext.E, self.y)
        if not _mat_is_zero(value):
            raise ValueError("E(Y) != 0: not an action of the extension ring")

    def __eq__(self, other):
        return (isinstance(other, CircledModule) and self.ext is other.ext
                and self.rank == other.rank
                and all(a == b for ra, rb in zip(self.y, other.y)
                        for a, b in zip(ra, rb)))

    def to_json(self):
        return {"rank": self.rank,
                "action": [[x.to_json() for x in row] for row in self.y]}


def _mat_mul(ext, a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    zero = ext.zero()
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for l in range(k):
            x = a[i][l]
            if x.is_zero():
                continue
            for j in range(m):
                out[i][j] = out[i][j] + x * b[l][j]
    return out


def _mat_is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def _scalar_matrix(ext, c, n):
    zero = ext.zero()
    out = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        out[i][i] = c
    return out


def _poly_at_matrix(ext, poly, y):
    """Evaluate a DVRPoly over the base at a matrix over A' (Horner)."""
    n = len(y)
    acc = _scalar_matrix(ext, ext.zero(), n)
    for k in range(poly.degree(), -1, -1):
        acc = _mat_mul(ext, acc, y)
        c = ext.from_base(poly.coeff(k))
        for i in range(n):
            acc[i][i] = acc[i][i] + c
    return acc


def _elt_at_matrix(ext, elem, y):
    """Evaluate an A'-element (a polynomial in pi) at a matrix over A'."""
    n = len(y)
    acc = _scalar_matrix(ext, ext.zero(), n)
    for k in range(ext.e - 1, -1, -1):
        acc = _mat_mul(ext, acc, y)
        c = ext.from_base(elem.coeffs[k])
        for i in range(n):
            acc[i][i] = acc[i][i] + c
    return acc


def unit_module(ext):
    """A' itself: rank one, x1 acting as pi."""
    return CircledModule(ext, [[ext.uniformizer()]], check=False)


def asecond_module(ext):
    """A'' as a correspondence: free of rank e over the second factor with
    x1 acting by the companion matrix of E (entries from the base)."""
    e = ext.e
    zero = ext.zero()
    y = [[zero for _ in range(e)] for _ in range(e)]
    for i in range(1, e):
        y[i][i - 1] = ext.one()
    for i in range(e):
        y[i][e - 1] = -ext.from_base(ext.E.coeff(i))
    return CircledModule(ext, y)


def circled_product(m, n):
    """M (o) N: substitute N's action matrix into the entries of M's.

    The (i,j) block of the result is M.y[i][j] read as a polynomial in pi
    and evaluated at N.y; row-major flattening of the index pairs.
    """
    if m.ext is not n.ext:
        raise ValueError("correspondences live over different extensions")
    ext = m.ext
    sm, sn = m.rank, n.rank
    zero = ext.zero()
    out = [[zero for _ in range(sm * sn)] for _ in range(sm * sn)]
    for i in range(sm):
        for j in range(sm):
            if m.y[i][j].is_zero():
                continue
            blk = _elt_at_matrix(ext, m.y[i][j], n.y)
            for a in range(sn):
                for b in range(sn):
                    out[i * sn + a][j * sn + b] = blk[a][b]
    return CircledModule(ext, out, check=False)
