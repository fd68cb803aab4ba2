"""2-periodic classes over an Eisenstein extension and their integrals.

The diagonal class integrates to minus the identity ramification value
v_L(E'(pi)); the graph class of g integrates to v_L(g(pi) - pi); summing
over the whole automorphism group therefore gives zero.  The diagonal
Hochschild profile is [free e, 0, length v_L(E'(pi)), 0, ...] 2-periodic.
"""

import pytest

from ramify.dg_models import integrate
from ramify.dvr_arith import DVRPoly, DVRSpec
from ramify.eisenstein_galois import (artin_character, automorphism_group,
                                      extend)
from ramify.errors import NotFiniteLength, PrecisionLoss
from ramify.intpoly import parse_poly


def _gdata(spec, text):
    ext = extend(spec, DVRPoly.from_intpoly(spec, parse_poly(text)))
    gdata = automorphism_group(ext)
    gdata.require_galois()
    return gdata


def test_diagonal_integral_is_minus_identity_artin_value():
    for spec, text, want in (
            (DVRSpec.equal_char(7, 10), "x^3-t", -2),
            (DVRSpec.mixed_char(2, 10), "x^2-2", -3),
            (DVRSpec.equal_char(2, 10), "x^2+t*x+t", -2)):
        gdata = _gdata(spec, text)
        assert integrate.integrate_class(
            integrate.diagonal_class(gdata)) == want


def test_graph_integrals_recover_all_off_identity_values():
    gdata = _gdata(DVRSpec.equal_char(7, 10), "x^6-t")
    total = 0
    for g in range(gdata.group.n):
        got = integrate.integrate_class(integrate.graph_class(gdata, g))
        assert got == -artin_character(gdata, g)
        total += got
    assert total == 0


def test_divided_difference_valuation_is_the_different():
    gdata = _gdata(DVRSpec.mixed_char(2, 10), "x^2-2")
    dd = integrate.divided_difference_on_diagonal(gdata.ext)
    assert dd.valuation().equals(3)


def test_pair_length_bookkeeping():
    gdata = _gdata(DVRSpec.equal_char(7, 10), "x^3-t")
    ext = gdata.ext
    pi = ext.uniformizer()
    even_only = integrate.PeriodicPair(ext, pi, ext.zero())
    assert even_only.lengths() == (0, 1)
    odd_only = integrate.PeriodicPair(ext, ext.zero(), pi)
    assert odd_only.lengths() == (1, 0)
    assert even_only.integrate() == 1
    assert odd_only.integrate() == -1


def test_pair_rejects_unit_composites():
    gdata = _gdata(DVRSpec.equal_char(7, 10), "x^3-t")
    ext = gdata.ext
    pi = ext.uniformizer()
    with pytest.raises(ValueError):
        integrate.PeriodicPair(ext, pi, pi)


def test_pair_zero_maps_have_no_finite_length():
    ext = _gdata(DVRSpec.equal_char(7, 10), "x^3-t").ext
    pair = integrate.PeriodicPair(ext, ext.zero(), ext.zero())
    with pytest.raises(NotFiniteLength):
        pair.lengths()


def test_hochschild_profile_frozen():
    cases = (
        (DVRSpec.equal_char(7, 10), "x^3-t", 3, 2),
        (DVRSpec.mixed_char(2, 10), "x^2-2", 2, 3),
        (DVRSpec.equal_char(2, 10), "x^2+t*x+t", 2, 2),
    )
    for spec, text, e, d in cases:
        ext = _gdata(spec, text).ext
        prof = integrate.hochschild_cohomology_profile(ext, max_degree=5)
        assert prof[0] == {"free": e, "length": 0}, text
        for k in (1, 3, 5):
            assert prof[k] == {"free": 0, "length": 0}, text
        for k in (2, 4):
            assert prof[k] == {"free": 0, "length": d}, text


def test_low_precision_integral_raises_rather_than_guessing():
    spec = DVRSpec.mixed_char(2, 3)
    poly = DVRPoly.from_intpoly(spec, parse_poly("x^2-2"))
    with pytest.raises(PrecisionLoss):
        gdata = automorphism_group(extend(spec, poly))
        gdata.require_galois()
        integrate.integrate_class(integrate.diagonal_class(gdata))
