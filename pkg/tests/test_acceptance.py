"""One test per acceptance criterion; the summary lists PASS/FAIL for each."""

import copy
import time

import test_field_poly
import test_groebner
import test_ideals

from cubic14.geometry import (ProjectiveScheme, are_skew_lines, h0_normal_sheaf, lies_on, quadric_rank,
                              random_hypersurface_containing, sample_rational_point, singular_locus)
from cubic14.groebner import groebner_basis, s_pairs_reduce_to_zero
from cubic14.ideals import Ideal
from cubic14.numerics import (DimensionLedger, RankTwoLattice, SurfaceInvariants, chi_ideal_twist,
                              flag_dimension_ledger, hassett_admissible_divisor, hassett_discriminant,
                              residual_class_solver, self_intersection_in_cubic)
from cubic14.pipeline import run_verification
from cubic14.poly import Ring
from cubic14.witness import construct_witness, history_numerology, load_fixture

P = 65521


def _computed(report):
    return {c.name: c.computed for c in report.checks}


def test_criterion_1_witness_verification(fixture_report):
    r = fixture_report
    assert r.prime == P and r.verdict and not r.aborted
    got = _computed(r)
    assert got["degree"] == 10
    assert got["sectional_genus"] == 7
    assert got["chi_O"] == 2
    assert got["smooth"] == -1  # dimension of the singular locus
    assert got["h0_ideal_2"] == 1
    assert got["h0_ideal_3"] == 12
    assert got["quadric_rank"] == 6
    assert r.elapsed < 600
    # inputs that are assumed rather than computed carry an anchor
    assert r.assumptions and all(a["anchor"] for a in r.to_dict()["assumptions"])


def test_criterion_2_normal_sheaf_dimensions(fixture_report):
    got = _computed(fixture_report)
    assert got["h0_normal_in_cubic"] == 15
    assert got["h0_normal_in_quadric"] == 38
    assert got["h0_normal_in_P5"] == 58
    assert fixture_report.elapsed < 1800


def test_criterion_3_construction_pipeline():
    for seed in (11, 12, 13):
        b = construct_witness(seed)
        assert history_numerology(b) == [(12, 7, 10, 64), (11, 7, 5, 34), (10, 7, 1, 12)]
        S = b.scheme()
        L1, L2 = b.line_schemes()
        assert lies_on(L1, S) and lies_on(L2, S)
        assert are_skew_lines(L1, L2)


def test_criterion_4_generality(surface):
    dims = []
    for seed in (101, 202, 303):
        X = random_hypersurface_containing(surface, 3, seed=seed)
        assert singular_locus(X, seed=seed).is_empty()
        dims.append(h0_normal_sheaf(surface, X, seed=seed))
    assert dims == [15, 15, 15]


def test_criterion_5_arithmetic_ledger():
    t0 = time.perf_counter()
    assert chi_ideal_twist(2) == 1 and chi_ideal_twist(3) == 12
    inv = SurfaceInvariants.from_degree_genus(10, 7, 2, -2)
    assert self_intersection_in_cubic(inv) == 38
    assert hassett_discriminant(RankTwoLattice(3, 10, 38)) == 14
    assert hassett_admissible_divisor(14) is True
    assert flag_dimension_ledger(DimensionLedger(58, 12)) == (69, 15)
    assert residual_class_solver(10, 5, 3) == (5, -1)
    assert residual_class_solver(4, 5, 3) == (3, -1)
    assert time.perf_counter() - t0 < 1


def test_criterion_6_engine_property_suites(surface_bundle, surface_lines):
    t0 = time.perf_counter()
    exported = [surface_bundle.ideal(), load_fixture("k3_genus7_p7").ideal()]
    exported += [L.ideal for L in surface_lines]
    for I in exported:
        assert s_pairs_reduce_to_zero(groebner_basis(list(I.gens)))
    test_groebner.test_membership_matches_macaulay_matrices()
    test_ideals.test_saturation_idempotent_monotone_and_equivalent()
    test_ideals.test_hilbert_series_matches_staircase()
    test_field_poly.test_uv_roots_exhaustive_small_primes()
    assert time.perf_counter() - t0 < 300


def test_criterion_7_negative_controls(surface_bundle, fixture_report):
    edited = copy.deepcopy(surface_bundle)
    edited.expected["h0_normal_in_cubic"] = 14
    report = run_verification(edited)
    assert report.failed() == ["h0_normal_in_cubic"]
    assert len(report.checks) == len(fixture_report.checks)

    R = Ring(6, P)
    Q = ProjectiveScheme(Ideal.parse(R, ["x0*x1 + x2*x3 + x4^2"]), saturated=True)
    assert quadric_rank(Q) == 5
    sing = singular_locus(Q)
    assert not sing.is_empty()
    pt = sample_rational_point(sing, smooth=False)
    assert tuple(pt.coords) == (0, 0, 0, 0, 0, 1)

    R4 = Ring(4, P)
    L1 = ProjectiveScheme(Ideal.parse(R4, ["x2", "x3"]), saturated=True)
    L2 = ProjectiveScheme(Ideal.parse(R4, ["x1", "x3"]), saturated=True)
    assert are_skew_lines(L1, L2) is False
