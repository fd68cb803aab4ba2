"""Acceptance suite: ten end-to-end criteria, one summary line each.

Each test prints a single PASS/FAIL line (visible with -s or in the
captured output) and enforces the stated time budget where one applies.
"""

import random
import time
from fractions import Fraction

from ramify import group_traces as gt
from ramify import milnor, verify
from ramify.dg_models import hopf, integrate, koszul, mf
from ramify.dvr_arith import DVRPoly, DVRSpec, quotient_length
from ramify.eisenstein_galois import artin_character, character_table
from ramify.euclid import mat_is_zero, mat_mul
from ramify.finite_field import FqPolyRing, GFq
from ramify.intpoly import parse_poly


def _report(num, name, ok, detail=""):
    line = "criterion %02d %s: %s" % (num, name, "PASS" if ok else "FAIL")
    if detail:
        line += " (%s)" % detail
    print(line)
    return ok


def test_criterion_01_relative_dimension_zero_identity():
    t0 = time.perf_counter()
    rep = verify.run_suite("dm-n0")
    dt = time.perf_counter() - t0
    ok = rep["ok"] and dt < 5.0
    assert _report(1, "milnor = dimtot at relative dimension zero", ok,
                   "%d/%d cases, %.2fs" % (rep["passed"], rep["total"], dt))
    assert rep["ok"], rep["counterexample"]
    assert dt < 5.0, "budget exceeded: %.2fs" % dt


def test_criterion_02_ordinary_quadratic_points():
    t0 = time.perf_counter()
    rep = verify.run_suite("dm-quadratic")
    dt = time.perf_counter() - t0
    ok = rep["ok"] and dt < 10.0
    assert _report(2, "quadratic points: mu = 1 = signed dimtot", ok,
                   "%d/%d cases, %.2fs" % (rep["passed"], rep["total"], dt))
    assert rep["ok"], rep["counterexample"]
    assert dt < 10.0


def test_criterion_03_character_identities():
    bad = []
    for case_id, gdata in verify.extension_family():
        table = character_table(gdata)
        n = gdata.group.n
        if sum(table.ar) != 0:
            bad.append(case_id)
            continue
        for g in range(n):
            reg = n if g == gdata.identity else 0
            if table.sw[g] != table.ar[g] - reg + 1:
                bad.append(case_id)
                break
            if g not in gdata.p_sylow and table.sw[g] != 0:
                bad.append(case_id)
                break
    ok = not bad
    assert _report(3, "swan/artin character identities", ok,
                   "7 extensions" if ok else "failed: %s" % bad)


def test_criterion_04_total_dimension_formula():
    rep = verify.run_suite("eq-1-2")      # 50 random modules per extension
    ok = rep["ok"]
    assert _report(4, "dimtot = artin conductor + fixed dimension", ok,
                   "%d/%d case groups" % (rep["passed"], rep["total"]))
    assert ok, rep["counterexample"]


def test_criterion_05_trace_route_equality():
    t0 = time.perf_counter()
    rep = verify.run_suite("appendix-a", seed=7, cases=100)
    dt = time.perf_counter() - t0
    ok = rep["ok"] and dt < 10.0
    assert _report(5, "duality trace = character trace", ok,
                   "%d/%d cases, %.2fs" % (rep["passed"], rep["total"], dt))
    assert rep["ok"], rep["counterexample"]
    assert dt < 10.0


def test_criterion_06_stabilized_endomorphism_dimensions():
    checks = []
    for e in (2, 3, 4):
        ring = FqPolyRing(GFq(7), var="x")
        checks.append(mf.periodic_end_dims(
            mf.stabilized_residue_field(ring, e)) == (1, 1))
    ring = FqPolyRing(GFq(5), var="x")
    checks.append(mf.periodic_end_dims(
        mf.stabilized_residue_field(ring, 1)) == (0, 0))
    for q, e in ((3, 2), (7, 3)):
        checks.append(mf.morita_object_class(
            FqPolyRing(GFq(q), var="x"), e) == (2, 2))
    ok = all(checks)
    assert _report(6, "residue-field End dims and duality image", ok,
                   "%d checks" % len(checks))


def test_criterion_07_periodic_classes_realize_artin():
    rep = verify.run_suite("integrate-ar")
    ok = rep["ok"]
    assert _report(7, "graph classes integrate to -artin", ok,
                   "%d/%d extensions" % (rep["passed"], rep["total"]))
    assert ok, rep["counterexample"]


def test_criterion_08_diagonal_cohomology_profile():
    bad = []
    for case_id, gdata in verify.extension_family():
        ext = gdata.ext
        d = artin_character(gdata, gdata.identity)
        prof = integrate.hochschild_cohomology_profile(ext, max_degree=6)
        want = {0: {"free": ext.e, "length": 0}}
        for k in range(1, 7):
            want[k] = ({"free": 0, "length": 0} if k % 2 else
                       {"free": 0, "length": d})
        if prof != want:
            bad.append(case_id)
    ok = not bad
    assert _report(8, "2-periodic diagonal cohomology profile", ok,
                   "7 extensions" if ok else "failed: %s" % bad)


def test_criterion_09_descent_axioms_both_models():
    spec = DVRSpec.equal_char(7, 8)
    eis = DVRPoly.from_intpoly(spec, parse_poly("x^3-t"))
    sq0 = DVRPoly.from_intpoly(spec, parse_poly("x^2"))
    h_eis = hopf.descent_structure(spec, eis)
    h_sq0 = hopf.descent_structure(spec, sq0)
    good = hopf.check_hopf_axioms(h_eis).ok and \
        hopf.check_hopf_axioms(h_sq0).ok
    tampered = hopf.check_hopf_axioms(
        h_eis.with_antipode(hopf.identity_map(h_eis.q2)))
    ok = good and not tampered.ok and \
        tampered.failures == ["antipode exchanges the unit maps"]
    assert _report(9, "descent axioms pass, tampered control fails", ok)


# ---------------------------------------------------------------------------
# criterion 10: five structural property families, >= 50 seeded instances each


def _prop_valuation_axioms(count):
    rng = random.Random(101)
    hits = 0
    for _ in range(count):
        spec = rng.choice((DVRSpec.equal_char(5, 9),
                           DVRSpec.mixed_char(3, 9)))
        va, vb = rng.randrange(4), rng.randrange(4)
        if spec.kind == "equal":
            a = spec.from_t_coeffs([0] * va + [rng.randrange(1, 5)])
            b = spec.from_t_coeffs([0] * vb + [rng.randrange(1, 5)])
        else:
            a = spec.from_int(3 ** va * rng.choice((1, 2)))
            b = spec.from_int(3 ** vb * rng.choice((1, 2)))
        if not (a * b).valuation().equals(va + vb):
            return hits, False
        if not (a + b).valuation().at_least(min(va, vb)):
            return hits, False
        if not spec.one().valuation().equals(0):
            return hits, False
        hits += 1
    return hits, True


def _prop_quotient_length_invariance(count):
    rng = random.Random(103)
    spec = DVRSpec.equal_char(3, 8)
    t3 = spec.from_t_coeffs([0, 0, 0, 1])
    hits = 0
    for _ in range(count):
        n = rng.choice((2, 3))
        mat = [[spec.from_t_coeffs([rng.randrange(3) for _ in range(3)])
                for _ in range(n)] for _ in range(n)]
        for i in range(n):
            mat[i][i] = mat[i][i] + t3
        base = quotient_length(mat, spec)
        i, j = rng.sample(range(n), 2)
        rowmix = [row[:] for row in mat]
        for col in range(n):
            rowmix[i][col] = rowmix[i][col] + mat[j][col]
        colswap = [[mat[r][j] if c == i else mat[r][i] if c == j
                    else mat[r][c] for c in range(n)] for r in range(n)]
        if quotient_length(rowmix, spec) != base:
            return hits, False
        if quotient_length(colswap, spec) != base:
            return hits, False
        hits += 1
    return hits, True


def _prop_milnor_coordinate_invariance(count):
    rng = random.Random(107)
    spec = DVRSpec.equal_char(7, 8)
    hits = 0
    for k in range(count):
        if k % 2 == 0:
            u = rng.randrange(1, 7)
            text = "%d*x0^3-t" % u
            want = 2                      # mu(x^3 - t)
        else:
            c = rng.randrange(1, 7)       # x0 -> x0 + c x1 on x0^2+x1^2+t
            text = "x0^2+%d*x0*x1+%d*x1^2+t" % (2 * c, c * c + 1)
            want = 1
        res = milnor.milnor_number(milnor.Hypersurface(spec, text))
        if res.mu != want:
            return hits, False
        hits += 1
    return hits, True


def _prop_dg_square_zero(count):
    rng = random.Random(109)
    ring = FqPolyRing(GFq(3), var="x")
    pool = [koszul.unit_k2(ring), koszul.ka_squared(ring)]
    hits = 0
    for _ in range(count):
        m = rng.choice(pool)
        op = rng.randrange(4)
        if op == 0:
            built = koszul.convolution(m, rng.choice(pool))
        elif op == 1:
            built = koszul.ka_tensor(m)
        elif op == 2:
            built = m.direct_sum(rng.choice(pool))
        else:
            built = m.shift(rng.choice((-2, -1, 1, 2)))
        if not mat_is_zero(ring, mat_mul(ring, built.d, built.d)):
            return hits, False
        if isinstance(built, koszul.K2Module) and built.dim <= 8:
            pool.append(built)
        hits += 1
    return hits, True


def _prop_trace_additivity(count):
    rng = random.Random(113)
    hits = 0
    for _ in range(count):
        mod = gt.named_module(rng.choice(("C2", "C3", "C4", "S3")),
                              rng.choice(("trivial", "regular")))
        ncls = len(mod.group.conjugacy_classes())
        c1 = [Fraction(rng.randint(-2, 2)) for _ in range(ncls)]
        c2 = [Fraction(rng.randint(-2, 2)) for _ in range(ncls)]
        t1 = gt.equivariant_from_class_coeffs(mod, c1)
        t2 = gt.equivariant_from_class_coeffs(mod, c2)
        both = [[a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(t1, t2)]
        want = gt.trace_via_characters(mod, t1) + \
            gt.trace_via_characters(mod, t2)
        if gt.trace_via_characters(mod, both) != want:
            return hits, False
        hits += 1
    return hits, True


def test_criterion_10_structural_property_suites():
    families = [
        ("valuation axioms", _prop_valuation_axioms, 60),
        ("quotient length invariance", _prop_quotient_length_invariance, 50),
        ("milnor coordinate invariance", _prop_milnor_coordinate_invariance,
         50),
        ("dg square-zero", _prop_dg_square_zero, 60),
        ("trace additivity", _prop_trace_additivity, 50),
    ]
    details, ok = [], True
    for name, fn, count in families:
        hits, good = fn(count)
        details.append("%s %d/%d" % (name, hits, count))
        ok = ok and good and hits >= 50
    assert _report(10, "structural property suites", ok,
                   "; ".join(details))
