from dataclasses import replace

import pytest

from asmkit import verifier
from asmkit.operator_formula import SizeLimitError
from asmkit.poly import Poly
from asmkit.verifier import (
    SUITES,
    CheckResult,
    LaurentSeq,
    VerificationReport,
    VerifyConfig,
    run_all,
    verify_alpha_consistency,
    verify_binomial_identity,
    verify_conjugation,
    verify_e_p_specializations,
    verify_eigenvector,
    verify_ideal_decomposition,
    verify_lemma_k,
    verify_q_sequence,
    verify_reflection_translation,
    verify_shift,
    verify_side,
    verify_sym_action,
)


def assert_pass(result):
    assert result.status == "pass", (result.name, result.params, result.lhs[:200], result.rhs[:200])


@pytest.mark.parametrize("n,window", [(3, (0, 6)), (1, (-5, 5)), (4, (1, 7))])
def test_alpha_consistency(n, window):
    assert_pass(verify_alpha_consistency(n, window))


def test_sym_action_hand_case():
    r = verify_sym_action(2, 1)
    assert_pass(r)
    # alpha(2;2,2) + alpha(2;1,3) = 1 + 3 = 2 * alpha(2;1,2)
    assert r.lhs == "-2*k1 + 2*k2 + 2"


@pytest.mark.parametrize("n,r", [(3, 0), (3, 2), (4, 4), (1, 1)])
def test_sym_action(n, r):
    assert_pass(verify_sym_action(n, r))


def test_sym_action_rejects_bad_order():
    with pytest.raises(ValueError):
        verify_sym_action(2, 3)


def test_e_p_specializations_n2_hand_case():
    r = verify_e_p_specializations(2)
    assert_pass(r)
    assert "p=1,j=0=1" in r.lhs


@pytest.mark.parametrize("n", range(1, 6))
def test_e_p_specializations(n):
    r = verify_e_p_specializations(n)
    assert_pass(r)
    assert "sign outside bracket: matches" in r.note
    if n >= 2:
        assert "sign on first term only: differs" in r.note


def test_lemma_k_n3_hand_expansion():
    r = verify_lemma_k(3)
    assert_pass(r)
    # 2 + 3(k-2) + (k-1)(k-2) = k^2 - 2
    assert r.lhs == "k1^2 - 2"


@pytest.mark.parametrize("n", [1, 2, 5])
def test_lemma_k(n):
    assert_pass(verify_lemma_k(n))


@pytest.mark.parametrize("n", [1, 2, 4])
def test_shift(n):
    assert_pass(verify_shift(n))


def test_shift_n2_witness():
    assert verify_shift(2).rhs == "-k1 + k2 + 1"


@pytest.mark.parametrize("n,c", [(2, 5), (1, 7), (4, -3)])
def test_reflection_translation(n, c):
    assert_pass(verify_reflection_translation(n, c))


@pytest.mark.parametrize("n", [1, 2, 10])
def test_eigenvector(n):
    assert_pass(verify_eigenvector(n))


def test_eigenvector_n2_witness():
    assert verify_eigenvector(2).lhs == "[1, 1]"


@pytest.mark.parametrize("n,det", [(2, 1), (3, 2), (4, 7)])
def test_conjugation(n, det):
    r = verify_conjugation(n)
    assert_pass(r)
    assert r.rhs.endswith(f"| {det} | {det}")


@pytest.mark.parametrize("n", [1, 3, 25])
def test_binomial_identity(n):
    assert_pass(verify_binomial_identity(n))


def test_laurent_sequence_first_terms():
    seq = LaurentSeq.build(3)
    x = Poly.var(1, 1, "X")
    assert seq.as_poly(0).is_zero()
    assert seq.as_poly(1) == x
    assert seq.as_poly(2) == x**3 + 3 * x**2 + x
    assert seq.as_poly(2) == x * (x + (x + 1) ** 2)
    assert all(seq.is_polynomial(j) and seq.vanishes_at_zero(j) for j in range(4))


@pytest.mark.parametrize("J", [1, 5, 30])
def test_q_sequence(J):
    assert_pass(verify_q_sequence(J))


@pytest.mark.parametrize("n", [2, 3, 5])
def test_ideal_decomposition(n):
    assert_pass(verify_ideal_decomposition(n))


def test_ideal_decomposition_needs_two_vars():
    with pytest.raises(ValueError):
        verify_ideal_decomposition(1)


@pytest.mark.parametrize("n,k", [(2, 3), (3, 3), (3, 5)])
def test_side(n, k):
    r = verify_side(n, k)
    assert_pass(r)


def test_side_2_3_witness():
    assert verify_side(2, 3).lhs == "3 | 3"


def test_check_result_status_follows_witnesses():
    assert CheckResult("x", {}, "1", "1").status == "pass"
    bad = CheckResult("x", {}, "1", "2")
    assert bad.status == "fail" and not bad.passed
    with pytest.raises(ValueError):
        CheckResult.from_record({**bad.to_record(), "status": "pass"})


def test_run_all_capped_at_one():
    report = run_all(VerifyConfig.capped(1))
    assert report.ok and report.total > 0
    assert {r.name for r in report.results} <= set(SUITES)


def test_run_all_rejects_oversized_config():
    with pytest.raises(SizeLimitError):
        run_all(VerifyConfig(poly_n=9))
    with pytest.raises(ValueError):
        run_all(VerifyConfig(q_terms=0))
    with pytest.raises(ValueError):
        run_all(VerifyConfig(suites=("nope",)))


def test_run_all_records_failures_without_aborting(monkeypatch):
    def boom(n):
        raise RuntimeError("broken")

    monkeypatch.setattr(verifier, "verify_shift", boom)
    report = run_all(replace(VerifyConfig.capped(2), suites=("shift", "eigenvector")))
    failed = [r for r in report.results if not r.passed]
    assert failed and all(r.name == "shift" and "broken" in r.lhs for r in failed)
    assert any(r.name == "eigenvector" and r.passed for r in report.results)
    assert report.summary() == {"total": report.total, "passed": report.passed, "failed": len(failed)}


def test_report_ordering_and_round_trip():
    cfg = replace(VerifyConfig.capped(3), matrix_n=11, suites=("eigenvector", "shift", "side"))
    report = run_all(cfg)
    keys = [r.sort_key() for r in report.results]
    assert keys == sorted(keys)
    assert [r.params["n"] for r in report.results if r.name == "eigenvector"] == list(range(1, 12))
    again = VerificationReport.from_jsonl(report.to_jsonl())
    assert [(r.name, r.params, r.lhs, r.rhs) for r in again.results] == [
        (r.name, r.params, r.lhs, r.rhs) for r in report.results
    ]
    assert again.summary() == report.summary()


def test_reproducible_witnesses():
    cfg = replace(VerifyConfig.capped(3), suites=("lemma_k", "q_sequence", "ideal_decomposition"))
    a, b = run_all(cfg), run_all(cfg)
    assert [(r.lhs, r.rhs) for r in a.results] == [(r.lhs, r.rhs) for r in b.results]
