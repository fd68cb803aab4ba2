"""Descent structures on tensor powers of an extension, and their axioms.

Both the genuinely ramified quotient (an Eisenstein E) and the square-zero
Koszul-style quotient E = x^2 carry the full groupoid-algebra structure;
the axiom checker must pass on both and fail, by name, on a tampered
antipode.
"""

import pytest

from ramify.dg_models import hopf
from ramify.dvr_arith import DVRPoly, DVRSpec
from ramify.eisenstein_galois import extend
from ramify.finite_field import FqPolyRing, GFq, ZRing
from ramify.intpoly import parse_poly


def _poly(spec, text):
    return DVRPoly.from_intpoly(spec, parse_poly(text))


def test_quotient_reduction_table():
    spec = DVRSpec.mixed_char(2, 8)
    q1 = hopf.PolyQuotient(spec, _poly(spec, "x^2-2"), 1)
    x = q1.gen(0)
    assert (x * x) == q1.from_base(spec.from_int(2))
    # and degree e - 1 products stay reduced
    cube = x * x * x
    assert cube == q1.from_base(spec.from_int(2)) * x


def test_ring_map_well_definedness_guard():
    spec = DVRSpec.equal_char(7, 8)
    e_poly = _poly(spec, "x^3-t")
    q1 = hopf.PolyQuotient(spec, e_poly, 1)
    q2 = hopf.PolyQuotient(spec, e_poly, 2)
    with pytest.raises(ValueError):
        hopf.RingMap(q1, q2, [q2.one()])   # 1 is no root of x^3 - t


def test_ring_map_composition_and_equality():
    spec = DVRSpec.equal_char(7, 8)
    e_poly = _poly(spec, "x^3-t")
    h = hopf.descent_structure(spec, e_poly)
    assert h.source.then(h.counit) == hopf.identity_map(h.q1)
    assert h.antipode.then(h.antipode) == hopf.identity_map(h.q2)


def test_axioms_pass_for_eisenstein_models():
    for spec, text in ((DVRSpec.equal_char(7, 8), "x^3-t"),
                       (DVRSpec.mixed_char(2, 8), "x^2-2"),
                       (DVRSpec.equal_char(2, 8), "x^2+t*x+t")):
        report = hopf.check_hopf_axioms(
            hopf.descent_structure(spec, _poly(spec, text)))
        assert report.ok, (text, report.failures)


def test_axioms_pass_for_square_zero_model():
    """E = x^2: the Koszul-flavoured square-zero quotient."""
    spec = DVRSpec.equal_char(5, 8)
    report = hopf.check_hopf_axioms(
        hopf.descent_structure(spec, _poly(spec, "x^2")))
    assert report.ok, report.failures


def test_tampered_antipode_fails_by_name():
    spec = DVRSpec.equal_char(7, 8)
    h = hopf.descent_structure(spec, _poly(spec, "x^3-t"))
    bad = h.with_antipode(hopf.identity_map(h.q2))
    report = hopf.check_hopf_axioms(bad)
    assert not report.ok
    assert report.failures == ["antipode exchanges the unit maps"]
    js = report.to_json()
    assert js["ok"] is False
    assert js["axioms"]["antipode is an involution"] is True


def test_exterior_model_satisfies_dg_axioms_and_binomial_dims():
    ring = FqPolyRing(GFq(3), var="x")
    for k in (1, 2, 3, 4):
        model = hopf.exterior_model(ring, k)   # constructor checks axioms
        assert model.dim == 2 ** k
        got = hopf.exterior_cohomology_dims(ring, k)
        assert got == hopf.expected_exterior_dims(k), k


def test_exterior_model_over_p_adic_coefficients():
    ring = ZRing(2)
    got = hopf.exterior_cohomology_dims(ring, 3)
    assert got == {0: 1, -1: 2, -2: 1}


def test_descent_structure_matches_extension_ramification():
    """The same E drives both the descent model and the extension."""
    spec = DVRSpec.equal_char(7, 8)
    e_poly = _poly(spec, "x^3-t")
    ext = extend(spec, e_poly)
    h = hopf.descent_structure(spec, e_poly)
    assert h.q1.e == ext.e
