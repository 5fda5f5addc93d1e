"""Claim runners: verdicts, reproducibility, budget honesty, registry."""

import pytest

from cubecodes import CLAIM_IDS, run_all, run_claim
from cubecodes.claims import (
    check_cover_count_arithmetic,
    check_fibonacci_nonexistence,
    check_full_run_construction,
    check_hypercube_avoidance,
    check_low_weight_structure,
    check_lucas_nonexistence,
    check_odd_square_arithmetic,
    check_punctured_constructions,
    check_weight_counts,
)

# ids frozen so downstream tooling can key on them
FROZEN_IDS = {
    "thm-main",
    "lemma-0n",
    "prop-count",
    "prop-qn-avoid",
    "prop-1n",
    "prop-1n12",
    "arith-lemma",
    "arith-thm",
}


def test_registry_covers_the_frozen_ids():
    assert FROZEN_IDS <= set(CLAIM_IDS)
    assert "fib-nonexistence" in CLAIM_IDS


def test_unknown_claim_rejected():
    with pytest.raises(ValueError) as err:
        run_claim("prop-unknown")
    assert "thm-main" in str(err.value)


def test_weight_counts_pass():
    report = check_weight_counts(n_max=12)
    assert report.verdict == "pass"
    assert report.params["n_max"] == 12
    assert report.evidence["levels_checked"] > 0


def test_lucas_nonexistence_small():
    report = check_lucas_nonexistence(n_max=8)
    assert report.verdict == "pass"
    assert report.evidence["exhausted_range"] == [4, 8]


def test_fibonacci_nonexistence_small():
    report = check_fibonacci_nonexistence(n_max=8)
    assert report.verdict == "pass"


def test_budget_interruption_never_passes():
    report = check_lucas_nonexistence(n_max=14, node_budget=20)
    assert report.verdict == "skipped"
    assert report.evidence["reason"] == "budget"


def test_low_weight_structure_pass():
    report = check_low_weight_structure(n_set=(6, 7, 8, 9))
    assert report.verdict == "pass"


def test_low_weight_structure_rejects_small_n():
    report = check_low_weight_structure(n_set=(5,))
    assert report.verdict == "fail"


def test_arithmetic_claims():
    assert check_odd_square_arithmetic(n_max=100_000).verdict == "pass"
    assert check_cover_count_arithmetic(n_max=100_000).verdict == "pass"
    # spot values quoted with the claims
    assert (7 * 7 + 1) % 6 == 2
    assert (2 * 1 + 1) * (18 * 1 - 12 * 1 + 1) == 21  # p = 1, n = 9, odd


def test_hypercube_avoidance_n3():
    report = check_hypercube_avoidance(n_set=(3,))
    assert report.verdict == "pass"
    assert report.evidence["perfect_code_counts"] == {"3": 4}


def test_constructions_small():
    assert check_full_run_construction(p_set=(2, 3)).verdict == "pass"
    assert check_punctured_constructions(p_set=(2, 3)).verdict == "pass"


def test_reports_are_reproducible():
    a = check_weight_counts(n_max=10)
    b = check_weight_counts(n_max=10)
    assert a.to_json_dict() == b.to_json_dict()
    a = check_hypercube_avoidance(n_set=(3,))
    b = check_hypercube_avoidance(n_set=(3,))
    assert a.to_json_dict() == b.to_json_dict()


def test_report_json_shape():
    payload = check_weight_counts(n_max=6).to_json_dict()
    assert list(payload) == ["claim", "params", "verdict", "evidence"]


def test_run_all_forwards_applicable_params():
    reports = run_all(n_max=6, p_set=(2,))
    assert [r.claim for r in reports] == list(CLAIM_IDS)
    by_id = {r.claim: r for r in reports}
    assert by_id["prop-count"].params["n_max"] == 6
    assert by_id["prop-1n"].params["p_set"] == [2]
    # n_max must not leak into runners that do not take it
    assert "n_max" not in by_id["lemma-0n"].params
    assert all(r.verdict == "pass" for r in reports), [
        (r.claim, r.verdict) for r in reports
    ]
