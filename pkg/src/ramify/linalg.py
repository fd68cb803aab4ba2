"""Dense exact linear algebra over a field (Fraction or CycloRational).

Matrices are lists of lists; the zero/one scalars are passed in (or taken
from a sample entry) so the same routines serve Q and Q(zeta_m).
"""


def zeros(zero, rows, cols):
    return [[zero for _ in range(cols)] for _ in range(rows)]


def identity(zero, one, n):
    m = zeros(zero, n, n)
    for i in range(n):
        m[i][i] = one
    return m


def mat_mul(a, b, zero):
    rows, inner = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = zeros(zero, rows, cols)
    for i in range(rows):
        for k in range(inner):
            x = a[i][k]
            if x == zero:
                continue
            for j in range(cols):
                y = b[k][j]
                if y != zero:
                    out[i][j] = out[i][j] + x * y
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scal(c, a):
    return [[c * x for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def trace(a, zero):
    t = zero
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def mat_eq(a, b):
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b))


def rref(m, zero, one):
    """Row-reduce in place a copy; returns (reduced, pivot column list)."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != zero:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def inverse(m, zero, one):
    n = len(m)
    aug = [list(row) + list(e) for row, e in zip(m, identity(zero, one, n))]
    red, pivots = rref(aug, zero, one)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def column_space_basis(m, zero, one):
    """Columns of m forming a basis of its column space."""
    _, pivots = rref(m, zero, one)
    return [[m[i][j] for j in pivots] for i in range(len(m))]


def solve_matrix(a, b, zero, one):
    """X with a * X = b; a must have full column rank; exact, raises if
    inconsistent."""
    rows = len(a)
    acols = len(a[0]) if a else 0
    bcols = len(b[0]) if b else 0
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    red, pivots = rref(aug, zero, one)
    if any(p >= acols for p in pivots):
        raise ValueError("inconsistent linear system")
    if len(pivots) != acols:
        raise ValueError("coefficient matrix not full column rank")
    x = zeros(zero, acols, bcols)
    for r, c in enumerate(pivots):
        for j in range(bcols):
            x[c][j] = red[r][acols + j]
    return x


def rank(m, zero, one):
    _, pivots = rref(m, zero, one)
    return len(pivots)
