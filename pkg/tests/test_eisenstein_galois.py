"""Eisenstein extensions, automorphism search, and ramification characters.

Frozen expectations:
  x^3 - t over F_7[t]/t^10   ar = (2,-1,-1), sw = (0,0,0)
  x^2 - 2 over Z/2^10        ar = (3,-3),    sw = (2,-2)
  x^2 + t*x + t over F_2     ar = (2,-2),    sw = (1,-1)
The identity values equal v_L(E'(pi)); the off-identity values were
cross-checked through v(disc E) = sum over g != id of -ar(g).
"""

import random

import pytest

from ramify.dvr_arith import DVRPoly, DVRSpec, Valuation
from ramify.eisenstein_galois import (artin_character, automorphism_group,
                                      character_table, extend, find_roots,
                                      swan_character)
from ramify.errors import DegreeOne, NotEisenstein, NotGalois
from ramify.intpoly import parse_poly


def _ext(spec, text):
    return extend(spec, DVRPoly.from_intpoly(spec, parse_poly(text)))


def test_extend_rejects_non_eisenstein_and_degree_one():
    spec = DVRSpec.equal_char(7, 8)
    with pytest.raises(NotEisenstein):
        _ext(spec, "x^3-t^2")
    with pytest.raises(DegreeOne):
        _ext(spec, "x-t")


def test_uniformizer_powers_and_base_embedding():
    spec = DVRSpec.equal_char(7, 8)
    ext = _ext(spec, "x^3-t")
    assert ext.e == 3
    pi = ext.uniformizer()
    assert pi.valuation() == Valuation(1)
    # pi^3 = t has valuation e * v_K(t) = 3
    cube = ext.mul(ext.mul(pi, pi), pi)
    assert cube.valuation() == Valuation(3)
    assert ext.from_base(spec.uniformizer()).valuation() == Valuation(3)


def test_valuation_of_polynomial_in_pi_is_min_formula():
    """v_L(sum c_i pi^i) = min(e * v_K(c_i) + i) when the minimum is unique."""
    rng = random.Random(5)
    spec = DVRSpec.equal_char(5, 8)
    ext = _ext(spec, "x^4-t")
    for _ in range(40):
        coeffs = []
        for i in range(4):
            vk = rng.randrange(3)
            unit = rng.randrange(1, 5)
            coeffs.append((spec.from_t_coeffs([0] * vk + [unit]), 4 * vk + i))
        vals = [v for _, v in coeffs]
        best = min(vals)
        if vals.count(best) != 1:
            continue
        elt = ext.from_coeffs([c for c, _ in coeffs])
        assert elt.valuation() == Valuation(best)


def test_root_counts_drive_galois_recognition():
    assert len(find_roots(_ext(DVRSpec.equal_char(7, 10), "x^3-t"))) == 3
    assert len(find_roots(_ext(DVRSpec.equal_char(5, 10), "x^3-t"))) == 1
    assert len(find_roots(_ext(DVRSpec.mixed_char(2, 10), "x^2-2"))) == 2
    assert len(find_roots(_ext(DVRSpec.equal_char(2, 10), "x^2+t*x+t"))) == 2


def test_not_galois_is_reported():
    gdata = automorphism_group(_ext(DVRSpec.equal_char(5, 10), "x^3-t"))
    assert not gdata.is_galois
    with pytest.raises(NotGalois):
        gdata.require_galois()


def test_tame_cubic_group_structure():
    gdata = automorphism_group(_ext(DVRSpec.equal_char(7, 10), "x^3-t"))
    gdata.require_galois()
    grp = gdata.group
    assert grp.n == 3
    for g in range(3):
        want = 1 if g == gdata.identity else 3
        assert grp.order_of(g) == want
    assert grp.is_abelian()


def test_frozen_character_tables():
    cases = [
        (DVRSpec.equal_char(7, 10), "x^3-t", (2, -1, -1), (0, 0, 0)),
        (DVRSpec.mixed_char(2, 10), "x^2-2", (3, -3), (2, -2)),
        (DVRSpec.equal_char(2, 10), "x^2+t*x+t", (2, -2), (1, -1)),
    ]
    for spec, text, want_ar, want_sw in cases:
        gdata = automorphism_group(_ext(spec, text))
        gdata.require_galois()
        table = character_table(gdata)
        got_ar = tuple(sorted(table.ar, reverse=True))
        got_sw = tuple(sorted(table.sw, reverse=True))
        assert got_ar == tuple(sorted(want_ar, reverse=True)), text
        assert got_sw == tuple(sorted(want_sw, reverse=True)), text
        assert table.ar[gdata.identity] == max(want_ar)


def test_character_identities_across_family():
    """sw = ar - regular + trivial, and both sum to zero against degrees."""
    for spec, text in ((DVRSpec.equal_char(11, 10), "x^5-t"),
                       (DVRSpec.mixed_char(2, 10), "x^2-2")):
        gdata = automorphism_group(_ext(spec, text))
        gdata.require_galois()
        n = gdata.group.n
        assert sum(artin_character(gdata, g) for g in range(n)) == 0
        for g in range(n):
            reg = n if g == gdata.identity else 0
            assert swan_character(gdata, g) == \
                artin_character(gdata, g) - reg + 1


def test_swan_vanishes_off_wild_part():
    gdata = automorphism_group(_ext(DVRSpec.equal_char(7, 10), "x^6-t"))
    gdata.require_galois()
    for g in range(gdata.group.n):
        if g not in gdata.p_sylow:
            assert swan_character(gdata, g) == 0


def test_galois_action_permutes_roots_consistently():
    gdata = automorphism_group(_ext(DVRSpec.equal_char(7, 10), "x^3-t"))
    gdata.require_galois()
    grp = gdata.group
    # the composition table is a group: closure and inverses already
    # verified by construction, so spot-check associativity
    rng = random.Random(9)
    for _ in range(20):
        a, b, c = (rng.randrange(grp.n) for _ in range(3))
        assert grp.mul(a, grp.mul(b, c)) == grp.mul(grp.mul(a, b), c)
