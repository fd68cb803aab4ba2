"""Conductor pairings and the total-dimension bookkeeping.

Tame cross-check used below: for a tame extension Ar(V) = dim V - dim V^G,
so the nontrivial character of the cubic C_3 case must get Ar = 1, Sw = 0.
The wild expectations Ar(regular) = v(disc E) come from the discriminants
v_2(disc(x^2-2)) = 3 and v_t(disc(x^3-t)) = 2.
"""

from fractions import Fraction

import pytest

from ramify.conductors import (GroupModule, artin_conductor, dimtot,
                               swan_conductor, vanishing_cycle_rep_n0,
                               verify_eq_1_2)
from ramify.cyclo import CycloRational
from ramify.dvr_arith import DVRPoly, DVRSpec
from ramify.eisenstein_galois import automorphism_group, extend
from ramify.groups import symmetric3, symmetric3_action
from ramify.intpoly import parse_poly


def _gdata(spec, text):
    ext = extend(spec, DVRPoly.from_intpoly(spec, parse_poly(text)))
    gdata = automorphism_group(ext)
    gdata.require_galois()
    return gdata


def test_module_verification_rejects_non_homomorphism():
    grp = symmetric3()
    mats = [[[1]] for _ in range(grp.n)]
    mats[1] = [[2]]  # r would act by 2 but r^3 = e acts by 1
    with pytest.raises(ValueError):
        GroupModule(grp, mats)


def test_permutation_character_counts_fixed_points():
    grp = symmetric3()
    mod = GroupModule.permutation(grp, symmetric3_action, 3)
    chi = mod.character()
    got = [chi.at(g).rational_value() for g in range(grp.n)]
    assert got == [3, 0, 0, 1, 1, 1]


def test_fixed_subspace_dimensions():
    grp = symmetric3()
    assert GroupModule.regular(grp).fixed_subspace_dim() == 1
    assert GroupModule.trivial(grp).fixed_subspace_dim() == 1
    sign = GroupModule.rank_one(grp, [1, 1, 1, -1, -1, -1])
    assert sign.fixed_subspace_dim() == 0


def test_tame_cubic_conductors():
    gdata = _gdata(DVRSpec.equal_char(7, 10), "x^3-t")
    grp = gdata.group
    reg = GroupModule.regular(grp)
    assert artin_conductor(reg, gdata) == 2  # v_t(disc(x^3 - t))
    assert swan_conductor(reg, gdata) == 0
    assert artin_conductor(GroupModule.trivial(grp), gdata) == 0
    # nontrivial character: tame so Ar = dim - fixed dim = 1
    root = CycloRational.zeta(3)
    nontriv = None
    for k in (1, 2):
        vals = [CycloRational.from_rational(3, 1)] * grp.n
        for g in range(grp.n):
            power = (k * _dlog(grp, g)) % 3
            acc = CycloRational.from_rational(3, 1)
            for _ in range(power):
                acc = acc * root
            vals[g] = acc
        nontriv = GroupModule.rank_one(grp, vals, m=3)
        assert artin_conductor(nontriv, gdata) == 1
        assert swan_conductor(nontriv, gdata) == 0
        assert dimtot(nontriv, gdata) == 1


def _dlog(grp, g):
    gen = next(h for h in range(grp.n) if grp.order_of(h) == grp.n)
    x, a = grp.identity, 0
    while x != g:
        x, a = grp.mul(x, gen), a + 1
    return a


def test_wild_quadratic_conductors():
    gdata = _gdata(DVRSpec.mixed_char(2, 10), "x^2-2")
    grp = gdata.group
    reg = GroupModule.regular(grp)
    assert artin_conductor(reg, gdata) == 3  # v_2(disc(x^2 - 2)) = v_2(8)
    assert swan_conductor(reg, gdata) == 2
    assert dimtot(reg, gdata) == 4
    sign = GroupModule.rank_one(
        grp, [1 if g == gdata.identity else -1 for g in range(grp.n)])
    assert artin_conductor(sign, gdata) == 3
    assert swan_conductor(sign, gdata) == 2
    assert dimtot(sign, gdata) == 3


def test_conductors_are_additive():
    gdata = _gdata(DVRSpec.mixed_char(2, 10), "x^2-2")
    grp = gdata.group
    reg, triv = GroupModule.regular(grp), GroupModule.trivial(grp)
    both = reg.direct_sum(triv)
    assert artin_conductor(both, gdata) == \
        artin_conductor(reg, gdata) + artin_conductor(triv, gdata)
    assert swan_conductor(both, gdata) == \
        swan_conductor(reg, gdata) + swan_conductor(triv, gdata)


def test_degree_sign_flips_euler_characteristic():
    gdata = _gdata(DVRSpec.equal_char(7, 10), "x^3-t")
    grp = gdata.group
    shifted = GroupModule.trivial(grp, degree=1)
    assert shifted.euler_characteristic() == -1
    assert dimtot(shifted, gdata) == -1


def test_eq_1_2_on_named_modules():
    for spec, text in ((DVRSpec.equal_char(7, 10), "x^3-t"),
                       (DVRSpec.mixed_char(2, 10), "x^2-2"),
                       (DVRSpec.equal_char(2, 10), "x^2+t*x+t")):
        gdata = _gdata(spec, text)
        grp = gdata.group
        for mod in (GroupModule.trivial(grp), GroupModule.regular(grp),
                    vanishing_cycle_rep_n0(gdata)):
            ok, detail = verify_eq_1_2(mod, gdata)
            assert ok, (text, detail)
            assert detail["dimtot"] == detail["rhs"]


def test_augmentation_dimtot_matches_discriminant_valuation():
    """The n = 0 vanishing-cycle module must land on v(disc E)."""
    frozen = {("equal", 7, "x^3-t"): 2,
              ("mixed", 2, "x^2-2"): 3,
              ("equal", 2, "x^2+t*x+t"): 2}
    for (kind, char, text), want in frozen.items():
        spec = (DVRSpec.equal_char if kind == "equal"
                else DVRSpec.mixed_char)(char, 10)
        gdata = _gdata(spec, text)
        assert dimtot(vanishing_cycle_rep_n0(gdata), gdata) == want


def test_conductor_values_are_integral_fractions():
    gdata = _gdata(DVRSpec.equal_char(5, 10), "x^4-t")
    mod = GroupModule.regular(gdata.group)
    ar = artin_conductor(mod, gdata)
    assert isinstance(ar, Fraction) and ar.denominator == 1
