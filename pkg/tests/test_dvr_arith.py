"""Truncated DVR arithmetic: valuations, polynomials, and module lengths.

The quotient-length expectations below were frozen from a brute-force
enumeration of the cokernel (image of T on all of A^2, then |A^2|/|im T|):
[[t,1],[0,t]] over F_3[t]/t^3 has cokernel of size 9, length 2, and
diag(2,4) over Z/2^4 has cokernel Z/2 + Z/4, length 3.
"""

import random

import pytest

from ramify.dvr_arith import (DVRPoly, DVRSpec, Valuation, is_eisenstein,
                              quotient_length)
from ramify.errors import PrecisionLoss
from ramify.intpoly import parse_poly


def test_valuation_ordering_and_exactness():
    assert Valuation(2) == Valuation(2)
    assert Valuation(2).equals(2)
    assert Valuation(3).at_least(1) and not Valuation(3).at_least(4)
    inexact = Valuation(5, exact=False)
    assert not inexact.exact
    assert not inexact.equals(5)  # only a bound, never an exact value
    assert inexact.at_least(5)


def test_spec_interning_and_uniformizer():
    a = DVRSpec.equal_char(7, 10)
    b = DVRSpec.equal_char(7, 10)
    assert a is b
    assert a.uniformizer().valuation() == Valuation(1)
    m = DVRSpec.mixed_char(2, 8)
    assert m.uniformizer().valuation() == Valuation(1)
    with pytest.raises(ValueError):
        DVRSpec.mixed_char(6, 8)
    with pytest.raises(ValueError):
        DVRSpec.equal_char(7, 1)


def test_zero_valuation_is_only_a_bound():
    spec = DVRSpec.equal_char(5, 6)
    v = spec.zero().valuation()
    assert v.value == 6 and not v.exact


def _slow_mul(ac, bc, q, n):
    """Convolution of t-coefficient lists mod t^n over F_q, by hand."""
    out = [0] * n
    for i, x in enumerate(ac):
        for j, y in enumerate(bc):
            if i + j < n:
                out[i + j] = (out[i + j] + x * y) % q
    return out


def test_equal_char_ring_ops_match_bruteforce():
    rng = random.Random(11)
    spec = DVRSpec.equal_char(5, 7)
    for _ in range(60):
        ac = [rng.randrange(5) for _ in range(7)]
        bc = [rng.randrange(5) for _ in range(7)]
        a = spec.from_t_coeffs(ac)
        b = spec.from_t_coeffs(bc)
        assert (a * b).data == spec.from_t_coeffs(_slow_mul(ac, bc, 5, 7)).data
        want_sum = [(x + y) % 5 for x, y in zip(ac, bc)]
        assert (a + b).data == spec.from_t_coeffs(want_sum).data


def test_mixed_char_ops_are_integer_arithmetic_mod_p_n():
    rng = random.Random(3)
    spec = DVRSpec.mixed_char(3, 5)
    mod = 3 ** 5
    for _ in range(60):
        x, y = rng.randrange(mod), rng.randrange(mod)
        assert (spec.from_int(x) * spec.from_int(y)).data == (x * y) % mod
        assert (spec.from_int(x) + spec.from_int(y)).data == (x + y) % mod


def test_valuation_multiplicativity_random():
    rng = random.Random(7)
    for spec in (DVRSpec.equal_char(3, 9), DVRSpec.mixed_char(5, 9)):
        for _ in range(50):
            va, vb = rng.randrange(4), rng.randrange(4)
            if spec.kind == "equal":
                a = spec.from_t_coeffs([0] * va + [rng.randrange(1, 3)])
                b = spec.from_t_coeffs([0] * vb + [rng.randrange(1, 3)])
            else:
                a = spec.from_int(5 ** va * rng.choice((1, 2, 3, 4)))
                b = spec.from_int(5 ** vb * rng.choice((1, 2, 3, 4)))
            assert a.valuation() == Valuation(va)
            assert (a * b).valuation() == Valuation(va + vb)


def test_poly_evaluate_and_derivative():
    spec = DVRSpec.equal_char(7, 8)
    poly = DVRPoly.from_intpoly(spec, parse_poly("x^3-t"))
    assert poly.degree() == 3
    assert poly.is_monic()
    # derivative 3x^2 at x = 2 is 12 = 5 mod 7
    d = poly.derivative()
    got = d.evaluate(spec.from_int(2), lambda a, b: a * b,
                     lambda a, b: a + b, lambda c: c)
    assert got.data == spec.from_int(12).data


def test_eisenstein_recognition():
    eq = DVRSpec.equal_char(7, 8)
    good = DVRPoly.from_intpoly(eq, parse_poly("x^3-t"))
    assert is_eisenstein(good)
    # constant term valuation 2: not Eisenstein
    bad = DVRPoly.from_intpoly(eq, parse_poly("x^3-t^2"))
    assert not is_eisenstein(bad)
    # unit constant term
    assert not is_eisenstein(DVRPoly.from_intpoly(eq, parse_poly("x^3-1-t")))
    # non-monic
    assert not is_eisenstein(DVRPoly.from_intpoly(eq, parse_poly("2*x^3-t")))
    mx = DVRSpec.mixed_char(2, 8)
    assert is_eisenstein(DVRPoly.from_intpoly(mx, parse_poly("x^2-2")))
    assert not is_eisenstein(DVRPoly.from_intpoly(mx, parse_poly("x^2-3")))


def test_quotient_length_frozen_equal_char():
    spec = DVRSpec.equal_char(3, 6)
    t = spec.uniformizer()
    one, zero = spec.one(), spec.zero()
    assert quotient_length([[t, one], [zero, t]], spec) == 2


def test_quotient_length_frozen_mixed_char():
    spec = DVRSpec.mixed_char(2, 6)
    two, four, zero = spec.from_int(2), spec.from_int(4), spec.zero()
    assert quotient_length([[two, zero], [zero, four]], spec) == 3


def test_quotient_length_row_and_column_invariance():
    """Left/right unimodular moves never change the cokernel length."""
    rng = random.Random(23)
    spec = DVRSpec.equal_char(3, 8)
    for _ in range(25):
        n = rng.choice((2, 3))
        mat = [[spec.from_t_coeffs([rng.randrange(3) for _ in range(3)])
                for _ in range(n)] for _ in range(n)]
        # make the quotient finite: push t^3 down the diagonal
        t3 = spec.from_t_coeffs([0, 0, 0, 1])
        for i in range(n):
            mat[i][i] = mat[i][i] + t3
        base = quotient_length(mat, spec)
        i, j = rng.sample(range(n), 2)
        swapped = [row[:] for row in mat]
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert quotient_length(swapped, spec) == base
        added = [row[:] for row in mat]
        for col in range(n):
            added[i][col] = added[i][col] + mat[j][col]
        assert quotient_length(added, spec) == base
        colmix = [row[:] for row in mat]
        for r in range(n):
            colmix[r][i] = colmix[r][i] + mat[r][j]
        assert quotient_length(colmix, spec) == base


def test_quotient_length_infinite_summand_raises():
    spec = DVRSpec.equal_char(3, 6)
    with pytest.raises(PrecisionLoss):
        quotient_length([[spec.zero()]], spec)
