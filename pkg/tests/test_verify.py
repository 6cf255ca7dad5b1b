"""Certification reports, witnesses, and numeric residuals."""

import json
import random
from fractions import Fraction

import pytest

from sk_spectra import (JParams, MParams, MultiPoly, ParameterCountMismatch,
                        certify, certify_matrix_vs_spectrum, det_closed,
                        j_matrix, matrix_for, m_pm_matrix, numeric_residual,
                        PmParams, reports_to_json, run_suite, spectrum_for,
                        spectrum_j, variables, verify_chu, verify_clement,
                        verify_conjecture, verify_mpm, verify_substitutions)
from sk_spectra.verify import dense_mismatch, poly_mismatch

lam = MultiPoly.variable("lam")
z0, z1 = variables("z0", "z1")
a, b, r = variables("a", "b", "r")


def test_verify_conjecture_small_sizes():
    for n in range(7):
        report = verify_conjecture(n)
        assert report.passed and report.witness is None
        assert report.family == "j" and report.mode == "symbolic"
        assert report.elapsed_ms >= 0


def test_verify_conjecture_one_matches_expected_polynomial():
    p = j_matrix(JParams.symbolic(1)).charpoly()
    assert p == lam ** 2 - 2 * lam * z0 + z0 ** 2 - z1 ** 2 - 1
    assert verify_conjecture(1).passed


def test_verify_chu_small_sizes():
    for n in range(7):
        assert verify_chu(n).passed


def test_verify_mpm_small_sizes_and_quadratic():
    for n in range(6):
        for sign in ("plus", "minus"):
            report = verify_mpm(n, sign)
            assert report.passed
            assert report.family == ("m_plus" if sign == "plus" else "m_minus")
    quad = m_pm_matrix(PmParams.symbolic(1, sign="plus")).charpoly()
    assert quad == lam ** 2 - (a + b) * r * lam + a * b * r ** 2 - a * b


def test_verify_substitutions_small_sizes():
    for n in range(7):
        report = verify_substitutions(n)
        assert report.passed and report.family == "substitution"


def test_verify_clement_small_sizes():
    for n in range(11):
        assert verify_clement(n).passed


def test_rational_certification_with_explicit_values():
    report = certify("m", 5, values=(Fraction(3, 2), Fraction(-1), Fraction(2), Fraction(1, 3)))
    assert report.passed and report.mode == "rational"


def test_degenerate_discriminants_rational():
    rng = random.Random(11)
    for n in range(7):
        for y_u_v in ((Fraction(2), Fraction(1), Fraction(-1)),    # D = 0
                      (Fraction(0), Fraction(1), Fraction(-1))):   # D = -4
            x_value = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            report = certify("m", n, values=(x_value, *y_u_v))
            assert report.passed, report.witness


def test_rational_determinants_match_closed_form():
    rng = random.Random(2024)
    draw = lambda: Fraction(rng.randint(-20, 20), rng.randint(1, 8))
    for n in range(13):
        for _ in range(100):
            family = rng.choice(["j", "m", "mpm"])
            sign = rng.choice(["plus", "minus"])
            params = {"j": lambda: JParams(n, draw(), draw()),
                      "m": lambda: MParams(n, draw(), draw(), draw(), draw()),
                      "mpm": lambda: PmParams(n, draw(), draw(), draw(), sign=sign)}[family]()
            closed = det_closed(spectrum_for(params))
            assert closed.radical_part == 0
            assert matrix_for(params).det() == closed.rational_part


# -- witnesses -----------------------------------------------------------

def test_poly_mismatch_reports_first_monomial():
    message = poly_mismatch(lam ** 2 + 3 * z0, lam ** 2 + 5 * z0)
    assert message is not None and "z0" in message and "3" in message and "5" in message
    assert poly_mismatch(lam + 1, lam + 1) is None


def test_dense_mismatch_reports_entry():
    message = dense_mismatch([[1, 2], [3, 4]], [[1, 2], [9, 4]], "left", "right")
    assert message == "entry (1, 0): left gives 3, right gives 9"


def test_corruption_flips_verdict():
    params = JParams.symbolic(4)
    matrix = j_matrix(params).with_band_entry("super", 2, 99)
    report = certify_matrix_vs_spectrum(matrix, spectrum_j(params),
                                        family="j", n=4, mode="symbolic")
    assert not report.passed
    assert report.witness


# -- report serialization ---------------------------------------------------

def test_report_json_schema():
    reports = [verify_conjecture(2), verify_chu(1)]
    parsed = json.loads(reports_to_json(reports))
    assert isinstance(parsed, list) and len(parsed) == 2
    for item in parsed:
        assert list(item.keys()) == ["family", "n", "mode", "passed", "witness", "elapsed_ms"]
        assert item["passed"] is True
        assert item["witness"] is None


def test_numeric_report_carries_metrics():
    report = numeric_residual("j", 4, [0.5, 1.5], seed=7)
    payload = json.loads(reports_to_json([report]))[0]
    assert payload["mode"] == "numeric"
    assert payload["seed"] == 7
    assert payload["max_scaled_residual"] <= 1e-8
    assert payload["det_rel_error"] <= 1e-10


# -- numeric residuals --------------------------------------------------------

def test_numeric_residual_clement_is_exact():
    report = numeric_residual("clement", 3, [])
    assert report.passed
    assert report.metrics["max_scaled_residual"] == 0.0
    assert report.metrics["det_rel_error"] == 0.0


def test_numeric_residual_trivial_size():
    report = numeric_residual("j", 0, [17.25, -3.5])
    assert report.passed
    assert report.metrics["max_scaled_residual"] == 0.0


def test_numeric_residual_wrong_arity():
    with pytest.raises(ParameterCountMismatch):
        numeric_residual("m", 3, [1.0, 2.0])


def test_numeric_residual_complex_mode():
    # a*b < 0 makes the discriminant negative; spectrum becomes complex
    report = numeric_residual("m_minus", 6, [2.0, -3.0, 1.5])
    assert report.passed, report.witness


# -- suite driver ---------------------------------------------------------------

def test_run_suite_orders_by_n_and_passes():
    reports = run_suite("all", range(4), mode="symbolic", threads=2)
    assert all(rep.passed for rep in reports)
    sizes = [rep.n for rep in reports]
    assert sizes == sorted(sizes)
    families = {rep.family for rep in reports}
    assert families == {"j", "m", "m_plus", "m_minus", "substitution", "clement"}


def test_run_suite_single_family_modes():
    assert all(r.passed for r in run_suite("j", [3], mode="rational", seed=5))
    assert all(r.passed for r in run_suite("mpm", [3], mode="numeric", seed=5))
    numeric = run_suite("m", [4], mode="numeric", seed=1)
    assert numeric[0].metrics is not None
