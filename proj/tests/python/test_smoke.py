import json
import math

import pytest

import hankelbounds as hb


def small_config():
    cfg = hb.VerifyConfig()
    cfg.n_samples = 100_000
    cfg.consistency_n = 2_000
    return cfg


def test_verify_bound_r():
    rep = hb.verify_bound(hb.ClassId.R, small_config())
    assert rep.passed
    assert (rep.bound_num, rep.bound_den) == (44, 135)
    assert rep.normalizer == 8640
    assert abs(rep.extremal_value - 44 / 135) <= 1e-12
    assert rep.sampling.violations == 0


def test_verify_bound_r1():
    rep = hb.verify_bound(hb.ClassId.R1, small_config())
    assert rep.passed
    assert (rep.bound_num, rep.bound_den) == (1, 64)
    assert abs(rep.branch_a.max_value - 1166400.0) <= 1e-9
    assert rep.branch_b.max_value < rep.branch_a.max_value


def test_report_json_round_trips():
    rep = hb.verify_bound(hb.ClassId.R, small_config())
    doc = json.loads(hb.report_json(rep))
    assert doc["class"] == "R"
    assert doc["bound"] == {"num": 44, "den": 135}
    assert doc["passed"] is True
    assert set(doc["branch_maxima"]) == {"g", "g1"}
    assert "PASS" in hb.report_text(rep)


def test_h3_of_sharp_inverse_coefficients():
    v = hb.h3(0.0, -2.0 / 3.0, 0.0, 14.0 / 15.0)
    assert abs(abs(v) - 44 / 135) < 1e-15
    assert abs(abs(hb.h3(0.0, 0.0, -0.125, 0.0)) - 1 / 64) < 1e-18


def test_inverse_coefficients_match_series_reversion():
    t = hb.SchurParams(0.3 + 0.1j, -0.2, 0.5j, 0.7)
    a = hb.from_caratheodory_R(hb.schur_to_c(t))
    inv = hb.inverse_coeffs(a)
    rev = hb.revert([0, 1, a.a2, a.a3, a.a4, a.a5])
    for got, want in zip([inv.A2, inv.A3, inv.A4, inv.A5], rev[2:6]):
        assert abs(got - want) < 1e-13


def test_revert_catalan_like_signs():
    got = hb.revert([0, 1, 1, 0, 0, 0, 0])
    want = [0, 1, -1, 2, -5, 14, -42]
    assert all(abs(g - w) < 1e-9 for g, w in zip(got, want))


def test_maximize_objective():
    res = hb.maximize_objective("g", grid_n=64)
    assert abs(res.max_value - 2816.0) <= 1e-9
    assert (res.argmax_s, res.argmax_u) == (0.0, 1.0)
    assert res.argmax_kind == hb.PointKind.vertex
    assert hb.objective_eval("g", 0.0, 1.0) == 2816.0
    assert hb.envelope(hb.ClassId.R, 0.0, 1.0) == 2816.0


def test_sampling_is_deterministic_and_dominated():
    a = hb.sample_h3(hb.ClassId.R, 50_000, 9, hb.SampleMode.boundary_biased, 44 / 135)
    b = hb.sample_h3(hb.ClassId.R, 50_000, 9, hb.SampleMode.boundary_biased, 44 / 135)
    assert a.sup_abs_h3 == b.sup_abs_h3
    assert a.violations == 0
    assert a.envelope_violations == 0
    assert abs(a.sup_abs_h3 - 44 / 135) <= 1e-12


def test_caratheodory_layer():
    c = hb.schur_to_c(hb.SchurParams(1, 0, 0, 0))
    assert c.c1 == 2
    assert c.c2 == 2
    assert hb.toeplitz_min_eig(c, 5) >= -1e-9
    with pytest.raises(ValueError):
        hb.SchurParams(2, 0, 0, 0)


def test_extremal_series():
    f = hb.extremal_f0_arctanh(9)
    assert f[1] == 1
    assert abs(f[3] - 2 / 3) < 1e-15
    assert abs(f[2]) == 0
    g = hb.extremal_fstar_R1(9)
    assert abs(g[4] - 1 / 8) < 1e-15
    assert abs(g[7] - 2 / 49) < 1e-15
    rot = hb.extremal_f0_theta(1.2345, 12)
    assert all(abs(abs(rot[n]) - 2 / n) < 1e-12 for n in range(2, 13))


def test_consistency_and_coefficient_checks():
    assert hb.consistency_suite(hb.ClassId.R, 2_000, 1) <= 1e-10
    assert hb.coefficient_bound_check(8)
    assert math.isclose(
        abs(hb.h3_schur_R1(hb.SchurParams(0, 0, 1, 0))), 1 / 64, rel_tol=0, abs_tol=1e-15
    )
