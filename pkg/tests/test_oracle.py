import json

import numpy as np
import pytest

from subpinch.oracle import (
    SUITES,
    TrialConfig,
    lemma_4_1_rhs,
    sample_h,
    stable_current_sum_direct,
    verify_chain_3d,
    verify_eq_19,
    verify_lemma_4_1,
)


def test_trial_config_validation():
    for kw in ({"trials": 0}, {"n_range": (1, 4)}, {"n_range": (2, 11)}, {"p_range": (0, 2)},
               {"p_range": (1, 7)}, {"scale": 0.0}, {"tol": -1.0}):
        with pytest.raises(ValueError):
            TrialConfig(**kw)


def test_sample_h_symmetric():
    rng = np.random.default_rng(0)
    for dist in ("gaussian", "heavy", "near_umbilic", "umbilic"):
        h = sample_h(rng, 4, 3, 2.0, dist)
        np.testing.assert_array_equal(h, h.transpose(0, 2, 1))
    with pytest.raises(ValueError):
        sample_h(rng, 3, 1, 1.0, "uniform")


@pytest.mark.parametrize("name", sorted(SUITES))
def test_default_suite_has_no_violations(name):
    rep = SUITES[name]()
    assert rep.violations == []
    assert rep.checks >= rep.trials


def test_chain_umbilic_hand_case():
    h = np.eye(3)[None]
    L1 = stable_current_sum_direct(h, 1)
    assert L1 == -2.0
    S, H = 3.0, 1.0
    for c in (0.0, 1.0):
        assert L1 - 2 * c <= S - 4.5 * H * H - 2 * c
    assert stable_current_sum_direct(np.zeros((2, 3, 3)), 2) == 0.0


def test_sectional_bound_hand_cases():
    # round sphere S^n(r) in R^{n+1}: K = 1/r^2 against n/(2(n-1) r^2)
    for n in (2, 3, 6):
        r = 1.5
        h = (np.eye(n) / r)[None]
        assert lemma_4_1_rhs(h, 0.0) == pytest.approx(n / (2 * (n - 1) * r * r))
    assert lemma_4_1_rhs(np.zeros((1, 4, 4)), 1.0) == 1.0


def test_sectional_bound_equality_exercised():
    rep = verify_lemma_4_1(TrialConfig(trials=2000))
    assert rep.notes["umbilic_n2_trials"] > 0
    assert rep.notes["umbilic_n2_max_abs_slack"] < 1e-8


def test_alpha_threshold_tight():
    rep = verify_eq_19(TrialConfig(trials=20_000))
    assert rep.min_slack["random"] >= 0.0
    assert abs(rep.min_slack["grid"]) < 1e-12
    assert rep.notes["grid_equality_only_at_c0_or_n2"]


def test_replay_is_deterministic():
    cfg = TrialConfig(seed=5, trials=300)
    a = json.dumps(verify_chain_3d(cfg).to_dict(), sort_keys=True)
    b = json.dumps(verify_chain_3d(cfg).to_dict(), sort_keys=True)
    assert a == b
    c = json.dumps(verify_chain_3d(TrialConfig(seed=6, trials=300)).to_dict(), sort_keys=True)
    assert a != c


def test_violation_is_recorded():
    from subpinch.oracle import SuiteReport, _Recorder

    r = SuiteReport("x", 1)
    rec = _Recorder(r, 1e-9)
    assert not rec.le("step", 2.0, 1.0, trial=0, witness=np.zeros((1, 2, 2)))
    assert r.violations[0]["excess"] == 1.0 and r.min_slack["step"] == -1.0
    assert rec.le("step", 1.0 + 1e-12, 1.0, trial=1)
