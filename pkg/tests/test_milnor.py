"""Milnor numbers as stabilized Jacobian-quotient lengths.

Oracles: Brieskorn points sum x_i^{a_i} + t have mu = prod (a_i - 1)
whenever the characteristic divides no a_i; relative dimension zero cases
x^e - t have mu = e - 1 tame, and the two wild quadratics were frozen at
mu = 3 (Z_2, x^2-2) and mu = 2 (F_2, x^2+tx+t) after checking them against
the discriminant valuations 3 and 2.
"""

import random

import pytest

from ramify.dvr_arith import DVRSpec
from ramify.errors import NotIsolated
from ramify.milnor import Hypersurface, milnor_number, verify_deligne_milnor_n0


def test_relative_dimension_zero_tame():
    for q, e in ((3, 2), (7, 3), (5, 4), (11, 5), (7, 6)):
        spec = DVRSpec.equal_char(q, 10)
        res = milnor_number(Hypersurface(spec, "x0^%d-t" % e))
        assert res.mu == e - 1, (q, e)


def test_relative_dimension_zero_wild():
    assert milnor_number(Hypersurface(DVRSpec.mixed_char(2, 10),
                                      "x0^2-2")).mu == 3
    assert milnor_number(Hypersurface(DVRSpec.equal_char(2, 10),
                                      "x0^2+t*x0+t")).mu == 2


def test_zero_variable_equation():
    """f = t: the fiber is one reduced point, mu = 1... with no x at all
    the Jacobian quotient is A/(t), length 1? No: mu counts the quotient
    by (f) alone, length of A/t = 1."""
    res = milnor_number(Hypersurface(DVRSpec.equal_char(5, 8), "t"))
    assert res.mu == 1


def test_brieskorn_products():
    spec7 = DVRSpec.equal_char(7, 10)
    assert milnor_number(Hypersurface(spec7, "x0^3+x1^3+t")).mu == 4
    assert milnor_number(Hypersurface(spec7, "x0^2+x1^2+x2^2+t")).mu == 1
    spec5 = DVRSpec.equal_char(5, 10)
    assert milnor_number(Hypersurface(spec5, "x0^4+x1^2+t")).mu == 3
    assert milnor_number(Hypersurface(spec5, "x0^3+x1^3+t")).mu == 4


def test_quadratic_family_all_char():
    for q in (3, 5, 7, 11):
        spec = DVRSpec.equal_char(q, 8)
        for n in range(4):
            text = "+".join(["x%d^2" % i for i in range(n)] + ["t"])
            assert milnor_number(Hypersurface(spec, text)).mu == 1, (q, n)


def test_non_isolated_by_rank_certificate():
    """No t anywhere: the quotient keeps a free summand, caught exactly."""
    with pytest.raises(NotIsolated):
        milnor_number(Hypersurface(DVRSpec.equal_char(5, 8), "x0^2"))


def test_non_isolated_by_unbounded_torsion():
    """Lengths keep growing with the window, so the cap reports failure."""
    with pytest.raises(NotIsolated):
        milnor_number(Hypersurface(DVRSpec.equal_char(5, 8),
                                   "x0^2*x1^2+t"), max_degree=10)


def test_coordinate_change_invariance():
    """mu is unchanged under unimodular linear substitutions."""
    rng = random.Random(17)
    spec = DVRSpec.equal_char(7, 10)
    base = "x0^3+x1^3+t"
    want = milnor_number(Hypersurface(spec, base)).mu
    for _ in range(6):
        # x0 -> x0 + c*x1 expanded by hand: (x0 + c x1)^3 + x1^3 + t
        c = rng.randrange(1, 7)
        text = ("x0^3+%d*x0^2*x1+%d*x0*x1^2+%d*x1^3+t"
                % (3 * c, 3 * c * c, c ** 3 + 1))
        assert milnor_number(Hypersurface(spec, text)).mu == want, text


def test_stabilization_is_reported_and_stable():
    res = milnor_number(Hypersurface(DVRSpec.equal_char(7, 10), "x0^4-t"))
    assert res.mu == 3
    wider = milnor_number(Hypersurface(DVRSpec.equal_char(7, 10), "x0^4-t"),
                          max_degree=res.degree_cutoff + 6)
    assert wider.mu == res.mu


def test_verify_report_structure():
    report = verify_deligne_milnor_n0(DVRSpec.equal_char(7, 10), "x^3-t")
    assert report["equal"]
    assert report["mu"] == 2 and report["dimtot"] == 2
