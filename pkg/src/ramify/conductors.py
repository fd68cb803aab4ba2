"""Conductor functionals: Swan and Artin pairings, total dimension, and
the rank-(e-1) monodromy module of an isolated zero-dimensional critical
point (the augmentation module of the Galois group).

Conventions: a finite-dimensional module V over Q(zeta_m) with a group
action and a single homogeneous cohomological degree n; its Euler
characteristic is (-1)^n dim V; conductor pairings are plain averaged sums
(1/|G|) sum ch(g) Tr(g|V), no conjugation.
"""

from fractions import Fraction

from .cyclo import CycloRational
from .eisenstein_galois import character_table
from .errors import NotGalois
from . import linalg


class ClassFunction:
    """Values per conjugacy class, in Q(zeta_m)."""

    def __init__(self, group, m, class_values):
        self.group = group
        self.m = m
        self.classes = group.conjugacy_classes()
        vals = list(class_values)
        if len(vals) != len(self.classes):
            raise ValueError("expected one value per conjugacy class")
        self.values = tuple(v if isinstance(v, CycloRational)
                            else CycloRational.from_rational(m, v)
                            for v in vals)
        self._cindex = group.class_index()

    @classmethod
    def from_element_values(cls, group, m, elem_values):
        classes = group.conjugacy_classes()
        out = []
        for c in classes:
            vals = {_as_cyclo(m, elem_values[g]) for g in c}
            ref = _as_cyclo(m, elem_values[c[0]])
            for g in c[1:]:
                if _as_cyclo(m, elem_values[g]) != ref:
                    raise ValueError("values are not constant on a class")
            out.append(ref)
            del vals
        return cls(group, m, out)

    def at(self, g):
        return self.values[self._cindex[g]]

    def __add__(self, other):
        return ClassFunction(self.group, self.m,
                             [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        return ClassFunction(self.group, self.m,
                             [a - b for a, b in zip(self.values, other.values)])

    def scale(self, c):
        return ClassFunction(self.group, self.m, [v * c for v in self.values])

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.group is other.group
                and self.values == other.values)

    def pair(self, other, support=None):
        """(1/|G|) sum over g of self(g) * other(g); support restricts the sum."""
        total = CycloRational.from_rational(self.m, 0)
        elems = range(self.group.n) if support is None else support
        for g in elems:
            total = total + self.at(g) * other.at(g)
        return total * Fraction(1, self.group.n)

    def to_json(self):
        return {"class_reps": [c[0] for c in self.classes],
                "values": [v.to_json() for v in self.values]}


def _as_cyclo(m, v):
    return v if isinstance(v, CycloRational) else CycloRational.from_rational(m, v)


class GroupModule:
    """A representation of a finite group on Q(zeta_m)^dim, homogeneous in
    one integer cohomological degree (default 0)."""

    def __init__(self, group, mats, m=None, degree=0, check=True):
        self.group = group
        self.m = m if m is not None else group.exponent
        self.mats = [None] * group.n
        for g in range(group.n):
            self.mats[g] = [[_as_cyclo(self.m, x) for x in row] for row in mats[g]]
        self.dim = len(self.mats[group.identity])
        self.degree = degree
        self._zero = CycloRational.from_rational(self.m, 0)
        self._one = CycloRational.from_rational(self.m, 1)
        if check:
            self._verify()

    def _verify(self):
        ident = linalg.identity(self._zero, self._one, self.dim)
        if not linalg.mat_eq(self.mats[self.group.identity], ident):
            raise ValueError("identity does not act as the identity matrix")
        for g in range(self.group.n):
            for h in range(self.group.n):
                prod = linalg.mat_mul(self.mats[g], self.mats[h], self._zero)
                if not linalg.mat_eq(prod, self.mats[self.group.mul(g, h)]):
                    raise ValueError("matrices do not define a homomorphism")

    # -- constructors ----------------------------------------------------

    @classmethod
    def trivial(cls, group, m=None, degree=0):
        return cls(group, [[[1]] for _ in range(group.n)], m=m, degree=degree,
                   check=False)

    @classmethod
    def rank_one(cls, group, values, m=None, degree=0):
        return cls(group, [[[values[g]]] for g in range(group.n)], m=m,
                   degree=degree)

    @classmethod
    def regular(cls, group, m=None, degree=0):
        n = group.n
        mats = []
        for g in range(n):
            mat = [[0] * n for _ in range(n)]
            for h in range(n):
                mat[group.mul(g, h)][h] = 1
            mats.append(mat)
        return cls(group, mats, m=m, degree=degree, check=False)

    @classmethod
    def permutation(cls, group, action, npoints, m=None, degree=0):
        """action(g, point) -> point."""
        mats = []
        for g in range(group.n):
            mat = [[0] * npoints for _ in range(npoints)]
            for x in range(npoints):
                mat[action(g, x)][x] = 1
            mats.append(mat)
        return cls(group, mats, m=m, degree=degree)

    def direct_sum(self, other):
        if other.group is not self.group or other.degree != self.degree:
            raise ValueError("direct sum needs matching group and degree")
        mats = []
        z = self._zero
        for g in range(self.group.n):
            a, b = self.mats[g], other.mats[g]
            top = [row + [z] * other.dim for row in a]
            bot = [[z] * self.dim + row for row in b]
            mats.append(top + bot)
        return GroupModule(self.group, mats, m=self.m, degree=self.degree,
                           check=False)

    def conjugate(self, p):
        """Change of basis by an invertible matrix p (entries coercible)."""
        pm = [[_as_cyclo(self.m, x) for x in row] for row in p]
        pinv = linalg.inverse(pm, self._zero, self._one)
        mats = []
        for g in range(self.group.n):
            mats.append(linalg.mat_mul(pm, linalg.mat_mul(
                self.mats[g], pinv, self._zero), self._zero))
        return GroupModule(self.group, mats, m=self.m, degree=self.degree,
                           check=False)

    # -- invariants ------------------------------------------------------

    def character(self):
        vals = {g: linalg.trace(self.mats[g], self._zero)
                for g in range(self.group.n)}
        return ClassFunction.from_element_values(self.group, self.m, vals)

    def virtual_character(self):
        """Character signed by (-1)^degree, as used in conductor pairings."""
        chi = self.character()
        return chi.scale(-1) if self.degree % 2 else chi

    def euler_characteristic(self):
        sign = -1 if self.degree % 2 else 1
        return sign * self.dim

    def fixed_subspace_dim(self):
        """dim V^G via the trace of the averaging projector."""
        chi = self.character()
        total = CycloRational.from_rational(self.m, 0)
        for g in range(self.group.n):
            total = total + chi.at(g)
        avg = (total * Fraction(1, self.group.n)).rational_value()
        if avg.denominator != 1:
            raise ValueError("averaging projector has non-integer trace")
        return int(avg)


def _require(gdata):
    if not gdata.is_galois:
        raise NotGalois("conductors require a Galois extension")


def swan_class_function(gdata, m=None):
    table = character_table(gdata)
    m = m if m is not None else gdata.group.exponent
    return ClassFunction.from_element_values(
        gdata.group, m, dict(enumerate(table.sw)))


def artin_class_function(gdata, m=None):
    table = character_table(gdata)
    m = m if m is not None else gdata.group.exponent
    return ClassFunction.from_element_values(
        gdata.group, m, dict(enumerate(table.ar)))


def swan_conductor(module, gdata):
    """(1/|G|) sum over the wild subgroup of sw(g) Tr(g|V), with Tr taken
    on the degree-signed character."""
    _require(gdata)
    sw = swan_class_function(gdata, module.m)
    val = sw.pair(module.virtual_character(), support=gdata.p_sylow)
    return val.rational_value()


def artin_conductor(module, gdata):
    _require(gdata)
    ar = artin_class_function(gdata, module.m)
    return ar.pair(module.virtual_character()).rational_value()


def dimtot(module, gdata):
    """Euler characteristic plus Swan conductor."""
    return module.euler_characteristic() + swan_conductor(module, gdata)


def verify_eq_1_2(module, gdata):
    """dimtot(V) = Ar(V) + (-1)^degree dim V^G; returns (ok, details)."""
    lhs = dimtot(module, gdata)
    ar = artin_conductor(module, gdata)
    fixed = module.fixed_subspace_dim()
    sign = -1 if module.degree % 2 else 1
    rhs = ar + sign * fixed
    ok = (lhs == rhs)
    return ok, {"dimtot": lhs, "artin": ar, "fixed_dim": fixed, "rhs": rhs}


def vanishing_cycle_rep_n0(gdata, m=None):
    """The augmentation module: regular minus trivial, dimension |G| - 1.

    Basis w_h = e_h - e_id for h != id; g sends w_h to w_{gh} - w_g.
    Concentrated in degree 0.
    """
    _require(gdata)
    group = gdata.group
    n = group.n
    ident = group.identity
    others = [h for h in range(n) if h != ident]
    pos = {h: i for i, h in enumerate(others)}
    mats = []
    for g in range(n):
        mat = [[0] * (n - 1) for _ in range(n - 1)]
        for h in others:
            gh = group.mul(g, h)
            if gh != ident:
                mat[pos[gh]][pos[h]] += 1
            if g != ident:
                mat[pos[group.mul(g, ident)]][pos[h]] -= 1
        mats.append(mat)
    return GroupModule(group, mats, m=m if m is not None else group.exponent,
                       degree=0)
