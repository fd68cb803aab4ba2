"""Traces of equivariant maps valued in class sums of a group algebra.

The zeroth Hochschild homology of a group algebra has the conjugacy
classes as a basis.  An equivariant endomorphism of a representation has
a trace there, computed two independent ways: through explicit
evaluation/coevaluation duality data (whose triangular identities are
checked as exact matrix equations), and directly from the matrix traces
of T composed with the inverse group action.  The reduced form imposes
the relation that the full group-algebra sum is zero, the normalization
matching the complement of the fixed subspace.
"""

from fractions import Fraction

from . import groups, linalg
from .conductors import GroupModule, _as_cyclo
from .cyclo import CycloRational
from .errors import NotEquivariant, TriangularIdentityFailed


class GroupAlgebraElement:
    """Finite formal sum of group elements with cyclotomic coefficients."""

    def __init__(self, group, m, coeffs):
        self.group = group
        self.m = m
        if len(coeffs) != group.n:
            raise ValueError("need one coefficient per group element")
        self.coeffs = [_as_cyclo(m, c) for c in coeffs]

    @classmethod
    def basis(cls, group, m, g):
        coeffs = [0] * group.n
        coeffs[g] = 1
        return cls(group, m, coeffs)

    @classmethod
    def zero(cls, group, m):
        return cls(group, m, [0] * group.n)

    def __add__(self, other):
        return GroupAlgebraElement(
            self.group, self.m,
            [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return GroupAlgebraElement(
            self.group, self.m,
            [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c):
        c = _as_cyclo(self.m, c)
        return GroupAlgebraElement(self.group, self.m,
                                   [a * c for a in self.coeffs])

    def __mul__(self, other):
        """Convolution product."""
        grp = self.group
        out = [CycloRational.from_rational(self.m, 0)] * grp.n
        for g, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for h, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                k = grp.mul(g, h)
                out[k] = out[k] + a * b
        return GroupAlgebraElement(grp, self.m, out)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement)
                and self.group is other.group and self.coeffs == other.coeffs)

    def to_hh0(self):
        """Project to class-sum coordinates (sum coefficients per class)."""
        vals = []
        for cls in self.group.conjugacy_classes():
            total = CycloRational.from_rational(self.m, 0)
            for g in cls:
                total = total + self.coeffs[g]
            vals.append(total)
        return HH0Class(self.group, self.m, vals)

    def __repr__(self):
        bits = ["(%r)*e[%s]" % (c, self.group.names[g])
                for g, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(bits) if bits else "0"


def full_sum(group, m):
    """Sum of all basis elements; its reduced HH0 image must vanish."""
    return GroupAlgebraElement(group, m, [1] * group.n)


class HH0Class:
    """One cyclotomic coefficient per conjugacy class.

    In reduced form the identity-class coordinate has been eliminated
    against the relation that the full group-algebra sum vanishes.
    """

    def __init__(self, group, m, class_values, reduced=False):
        self.group = group
        self.m = m
        self.classes = group.conjugacy_classes()
        if len(class_values) != len(self.classes):
            raise ValueError("need one value per conjugacy class")
        self.values = [_as_cyclo(m, v) for v in class_values]
        self.reduced_form = reduced

    def at_class(self, j):
        return self.values[j]

    def is_zero(self):
        zero = CycloRational.from_rational(self.m, 0)
        return all(v == zero for v in self.values)

    def _combine(self, other, op):
        if self.reduced_form != other.reduced_form:
            raise ValueError("cannot mix reduced and unreduced classes")
        return HH0Class(self.group, self.m,
                        [op(a, b) for a, b in zip(self.values, other.values)],
                        reduced=self.reduced_form)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def scale(self, c):
        c = _as_cyclo(self.m, c)
        return HH0Class(self.group, self.m, [v * c for v in self.values],
                        reduced=self.reduced_form)

    def __eq__(self, other):
        return (isinstance(other, HH0Class) and self.group is other.group
                and self.reduced_form == other.reduced_form
                and self.values == other.values)

    def reduced(self):
        """Eliminate the identity-class coordinate.

        Subtracts that coordinate times the class-size vector, the unique
        normalization making the identity slot vanish modulo the relation
        sum over all elements = 0.
        """
        if self.reduced_form:
            return self
        idc = self.group.class_index()[self.group.identity]
        c = self.values[idc]
        out = []
        for j, cls in enumerate(self.classes):
            if j == idc:
                out.append(CycloRational.from_rational(self.m, 0))
            else:
                out.append(self.values[j] - c * Fraction(len(cls)))
        return HH0Class(self.group, self.m, out, reduced=True)

    def __repr__(self):
        kind = "reduced " if self.reduced_form else ""
        return "HH0Class(%s%s)" % (kind,
                                   ", ".join(repr(v) for v in self.values))

    def to_json(self):
        vals = {}
        for cls, v in zip(self.classes, self.values):
            vals[self.group.names[cls[0]]] = v.to_json()
        return {"values": vals, "reduced": self.reduced_form}


def dual_module(module):
    """Contragredient: g acts by the transposed matrix of g^{-1}."""
    grp = module.group
    mats = [linalg.transpose(module.mats[grp.inverse[g]])
            for g in range(grp.n)]
    return GroupModule(grp, mats, m=module.m, degree=module.degree,
                       check=False)


class Duality:
    """Evaluation/coevaluation data for a representation.

    The e_g component of evaluation pairs a functional with
    (1/|H|) g^{-1} applied to the vector; the e_g component of
    coevaluation is the g-translated basis tensor.  Both composite
    triangular identities must reduce to the literal identity matrix.
    """

    def __init__(self, module):
        self.module = module
        grp = module.group
        scale = Fraction(1, grp.n)
        self.ev = [linalg.mat_scal(_as_cyclo(module.m, scale),
                                   module.mats[grp.inverse[g]])
                   for g in range(grp.n)]
        self.coev = [module.mats[g] for g in range(grp.n)]
        self._check_triangular()

    def _check_triangular(self):
        mod = self.module
        z, o = mod._zero, mod._one
        ident = linalg.identity(z, o, mod.dim)
        left = linalg.zeros(z, mod.dim, mod.dim)
        right = linalg.zeros(z, mod.dim, mod.dim)
        for g in range(mod.group.n):
            left = linalg.mat_add(left,
                                  linalg.mat_mul(self.coev[g], self.ev[g], z))
            right = linalg.mat_add(right,
                                   linalg.mat_mul(self.ev[g], self.coev[g], z))
        if not linalg.mat_eq(left, ident):
            raise TriangularIdentityFailed("coevaluation then evaluation "
                                           "is not the identity")
        if not linalg.mat_eq(right, ident):
            raise TriangularIdentityFailed("evaluation then coevaluation "
                                           "is not the identity")

    def ev_pairing(self, functional, vector):
        """Group-algebra-valued pairing of a dual vector with a vector."""
        mod = self.module
        out = []
        for g in range(mod.group.n):
            moved = linalg.mat_mul(self.ev[g],
                                   [[x] for x in vector], mod._zero)
            total = mod._zero
            for f, mv in zip(functional, moved):
                total = total + f * mv[0]
            out.append(total)
        return GroupAlgebraElement(mod.group, mod.m, out)

    def trace(self, t):
        """Class-sum trace of an equivariant endomorphism."""
        mod = self.module
        if not is_equivariant(mod, t):
            raise NotEquivariant("endomorphism does not commute with the "
                                 "group action")
        acc = GroupAlgebraElement.zero(mod.group, mod.m)
        for i in range(mod.dim):
            basis = [mod._one if j == i else mod._zero
                     for j in range(mod.dim)]
            image = [row[i] for row in t]
            acc = acc + self.ev_pairing(basis, image)
        return acc.to_hh0()


def build_duality(module):
    return Duality(module)


def is_equivariant(module, t):
    z = module._zero
    for g in range(module.group.n):
        ag = module.mats[g]
        if not linalg.mat_eq(linalg.mat_mul(t, ag, z),
                             linalg.mat_mul(ag, t, z)):
            return False
    return True


def equivariant_from_class_coeffs(module, coeffs):
    """Sum of class sums acting on the module, one coefficient per class."""
    grp = module.group
    classes = grp.conjugacy_classes()
    if len(coeffs) != len(classes):
        raise ValueError("need one coefficient per conjugacy class")
    z = module._zero
    t = linalg.zeros(z, module.dim, module.dim)
    for c, cls in zip(coeffs, classes):
        c = _as_cyclo(module.m, c)
        for g in cls:
            t = linalg.mat_add(t, linalg.mat_scal(c, module.mats[g]))
    return t


def identity_endo(module):
    return linalg.identity(module._zero, module._one, module.dim)


def trace_via_duality(module, t):
    return build_duality(module).trace(t)


def trace_via_characters(module, t):
    """The same trace from matrix traces alone.

    The coefficient of a class is (1/|H|) times the sum over its
    elements h of the trace of T composed with the action of h^{-1}.
    """
    if not is_equivariant(module, t):
        raise NotEquivariant("endomorphism does not commute with the "
                             "group action")
    grp = module.group
    z = module._zero
    scale = _as_cyclo(module.m, Fraction(1, grp.n))
    vals = []
    for cls in grp.conjugacy_classes():
        total = z
        for h in cls:
            prod = linalg.mat_mul(t, module.mats[grp.inverse[h]], z)
            total = total + linalg.trace(prod, z)
        vals.append(total * scale)
    return HH0Class(grp, module.m, vals)


def fixed_projector(module):
    """The averaging idempotent onto the fixed subspace."""
    z = module._zero
    p = linalg.zeros(z, module.dim, module.dim)
    for g in range(module.group.n):
        p = linalg.mat_add(p, module.mats[g])
    return linalg.mat_scal(_as_cyclo(module.m,
                                     Fraction(1, module.group.n)), p)


def complement_module(module):
    """The canonical complement of the fixed subspace, as a module.

    Splits off M^H with the averaging idempotent and restricts the
    action to the image of (1 - projector).
    """
    z, o = module._zero, module._one
    p = fixed_projector(module)
    comp = linalg.mat_sub(linalg.identity(z, o, module.dim), p)
    basis = linalg.column_space_basis(comp, z, o)
    r = len(basis[0]) if basis else 0
    if r == 0:
        mats = [[] for _ in range(module.group.n)]
        return GroupModule(module.group, mats, m=module.m,
                           degree=module.degree, check=False)
    mats = []
    for g in range(module.group.n):
        moved = linalg.mat_mul(module.mats[g], basis, z)
        coords = linalg.solve_matrix(basis, moved, z, o)
        if coords is None:
            raise ValueError("complement is not preserved by the action")
        mats.append(coords)
    return GroupModule(module.group, mats, m=module.m, degree=module.degree)


def reduced_trace(module):
    """Trace of the identity on the complement of the fixed subspace,
    in the reduced class-sum coordinates."""
    comp = complement_module(module)
    if comp.dim == 0:
        n = len(module.group.conjugacy_classes())
        return HH0Class(module.group, module.m, [0] * n).reduced()
    return trace_via_characters(comp, identity_endo(comp)).reduced()


def named_module(group_name, module_name, m=None):
    """Build a named representation for a named group.

    Groups: C<n> or S3.  Modules: trivial, regular, sign (C_even and
    S3), permutation and standard (S3 only).
    """
    grp = groups.group_by_name(group_name)
    which = module_name.lower()
    if which == "trivial":
        return GroupModule.trivial(grp, m=m)
    if which == "regular":
        return GroupModule.regular(grp, m=m)
    if which == "sign":
        if grp.n == 6:
            vals = [groups.symmetric3_sign(g) for g in range(grp.n)]
        elif grp.is_abelian() and grp.n % 2 == 0:
            vals = [1 if g % 2 == 0 else -1 for g in range(grp.n)]
        else:
            raise ValueError("no sign module for %s" % group_name)
        return GroupModule.rank_one(grp, vals, m=m)
    if which == "permutation":
        if grp.n != 6:
            raise ValueError("permutation module is for S3")
        return GroupModule.permutation(grp, groups.symmetric3_action, 3, m=m)
    if which == "standard":
        if grp.n != 6:
            raise ValueError("standard module is for S3")
        return complement_module(
            GroupModule.permutation(grp, groups.symmetric3_action, 3, m=m))
    raise ValueError("unknown module %r" % module_name)
