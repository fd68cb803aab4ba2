"""Small finite groups given by multiplication tables.

Elements are 0..n-1; table[i][j] is the product i*j.  Enough structure for
ramification groups (cyclic, or small wild ones) and the trace machinery
(C2, C3, C4, S3).
"""

from functools import lru_cache
from math import lcm


class FiniteGroup:
    def __init__(self, table, names=None):
        self.table = tuple(tuple(row) for row in table)
        self.n = len(self.table)
        for row in self.table:
            if len(row) != self.n:
                raise ValueError("multiplication table must be square")
        self.identity = None
        for i in range(self.n):
            if all(self.table[i][j] == j and self.table[j][i] == j
                   for j in range(self.n)):
                self.identity = i
                break
        if self.identity is None:
            raise ValueError("table has no identity")
        self.inverse = [None] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if self.table[i][j] == self.identity:
                    self.inverse[i] = j
            if self.inverse[i] is None:
                raise ValueError("element %d has no inverse" % i)
        self.names = tuple(names) if names else tuple(
            "e" if i == self.identity else "g%d" % i for i in range(self.n))

    def mul(self, i, j):
        return self.table[i][j]

    def order_of(self, i):
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    @property
    def exponent(self):
        return lcm(*[self.order_of(i) for i in range(self.n)])

    def is_abelian(self):
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.n) for j in range(self.n))

    def conjugacy_classes(self):
        seen = [False] * self.n
        classes = []
        for i in range(self.n):
            if seen[i]:
                continue
            cls = set()
            for h in range(self.n):
                cls.add(self.mul(self.mul(h, i), self.inverse[h]))
            cls = tuple(sorted(cls))
            for x in cls:
                seen[x] = True
            classes.append(cls)
        return classes

    def class_index(self):
        idx = [None] * self.n
        for ci, cls in enumerate(self.conjugacy_classes()):
            for x in cls:
                idx[x] = ci
        return idx

    def elements_of_p_power_order(self, p):
        return tuple(i for i in range(self.n)
                     if _is_p_power(self.order_of(i), p))

    def is_subgroup(self, elems):
        s = set(elems)
        if self.identity not in s:
            return False
        return all(self.mul(a, b) in s for a in s for b in s)

    def __repr__(self):
        return "FiniteGroup(n=%d)" % self.n


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


@lru_cache(maxsize=None)
def cyclic(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + ["g^%d" % i if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(table, names)


_S3_PERMS = ((0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2))


@lru_cache(maxsize=None)
def symmetric3():
    """S3 as permutations of {0,1,2}; element 0 is the identity."""
    perms = _S3_PERMS
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for a in perms:
        row = []
        for b in perms:
            prod = tuple(a[b[i]] for i in range(3))
            row.append(index[prod])
        table.append(row)
    names = ["e", "r", "r^2", "s", "sr", "sr^2"]
    return FiniteGroup(table, names)


def symmetric3_action(g, x):
    """Point action on {0,1,2} aligned with symmetric3() element order."""
    return _S3_PERMS[g][x]


def symmetric3_sign(g):
    """Parity of the permutation with index g in symmetric3()."""
    return 1 if g < 3 else -1


def group_by_name(name):
    name = name.upper()
    if name.startswith("C") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    if name == "S3":
        return symmetric3()
    raise ValueError("unknown group %r (use C<n> or S3)" % name)
