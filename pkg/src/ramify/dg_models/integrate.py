"""Two-periodic rank-one complexes over a totally ramified extension.

Over a discrete valuation domain a rank-one two-periodic complex has, up
to homotopy, one vanishing differential and one multiplication by a
nonzero scalar; its two cohomology lengths are then 0 and the valuation
of that scalar.  The integral of such a class is the difference
odd length - even length.  The diagonal and graph classes of an
extension integrate to minus the ramification character: the diagonal
gives -v(E'(pi)) and the graph of an automorphism g gives +v(g(pi)-pi).
"""

from ..errors import NotFiniteLength, PrecisionLoss
from .. import eisenstein_galois


class PeriodicPair:
    """Differentials (even_map, odd_map), scalars acting on rank-one pieces.

    even_map sends the even generator to the odd one and odd_map comes
    back; the composite must vanish in the truncation.
    """

    def __init__(self, ext, even_map, odd_map):
        self.ext = ext
        self.even_map = even_map
        self.odd_map = odd_map
        prod = even_map * odd_map
        if prod.valuation().exact:
            raise ValueError("differentials do not compose to zero")

    def lengths(self):
        """(even length, odd length) of the cohomology over the extension.

        Exactly one differential may vanish; if both representatives are
        nonzero the truncation cannot tell which one is spurious.
        """
        a, b = self.even_map, self.odd_map
        az, bz = a.is_zero(), b.is_zero()
        if az and bz:
            raise NotFiniteLength("both differentials vanish; "
                                  "cohomology is free of rank one")
        if not az and not bz:
            raise PrecisionLoss("cannot decide which differential vanishes "
                                "at this precision")
        live = b if az else a
        v = live.valuation()
        if not v.exact:
            raise PrecisionLoss("differential valuation below resolution")
        if az:
            # even cohomology = cokernel of the odd map
            return v.value, 0
        return 0, v.value

    def integrate(self):
        even, odd = self.lengths()
        return odd - even

    def to_json(self):
        return {"even_map": self.even_map.to_json(),
                "odd_map": self.odd_map.to_json()}


def integrate_class(pair):
    return pair.integrate()


def divided_difference_on_diagonal(ext):
    """(E(x1)-E(x2))/(x1-x2) restricted to x1 = x2 = pi.

    Summing the symmetrized monomials of the quotient gives the value
    directly, without forming a derivative.
    """
    total = ext.zero()
    for i in range(1, ext.E.degree() + 1):
        c = ext.E.coeff(i)
        if c.is_zero():
            continue
        # sum over a+b = i-1 of pi^a * pi^b = i copies of pi^(i-1)
        term = ext.pi_power(i - 1).scale(c)
        for _ in range(i):
            total = total + term
    return total


def diagonal_class(gdata):
    """The diagonal bimodule class; integrates to -ar(identity)."""
    ext = gdata.ext
    return PeriodicPair(ext, ext.zero(), divided_difference_on_diagonal(ext))


def graph_class(gdata, g):
    """The graph class of automorphism g != id; integrates to -ar(g)."""
    ext = gdata.ext
    if g == gdata.identity:
        return diagonal_class(gdata)
    shifted = gdata.roots[g] - ext.uniformizer()
    return PeriodicPair(ext, shifted, ext.zero())


def hochschild_cohomology_profile(ext, max_degree=4):
    """Per-degree cohomology of the two-periodic diagonal resolution.

    Degree 0 is the whole extension (free of base-rank e); odd degrees
    vanish; positive even degrees have length v(E'(pi)) each.
    """
    q = divided_difference_on_diagonal(ext)
    v = q.valuation()
    if not v.exact:
        raise PrecisionLoss("derivative valuation below resolution")
    d = v.value
    profile = {}
    for i in range(max_degree + 1):
        if i == 0:
            profile[i] = {"free": ext.e, "length": 0}
        elif i % 2 == 0:
            profile[i] = {"free": 0, "length": d}
        else:
            profile[i] = {"free": 0, "length": 0}
    return profile
