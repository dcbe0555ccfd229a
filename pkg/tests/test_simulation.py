"""Seeded Monte Carlo estimators and their internal consistency."""

import math

import numpy as np
import pytest

from mvdrisk import (
    GENERATOR,
    DiracMvd,
    InvalidLvrError,
    NormalMvd,
    SamplingError,
    SimulationConfig,
    SimulationResult,
    TabulatedMvd,
    simulate,
)


def _cfg(dist, n=200_000, seed=11, lvr=1.0, p_a=0.075):
    return SimulationConfig(n_trials=n, seed=seed, lvr=lvr, dist=dist, p_a=p_a)


def test_same_seed_reproduces_every_field():
    a = simulate(_cfg(NormalMvd(0.20)))
    b = simulate(_cfg(NormalMvd(0.20)))
    assert a == b


def test_different_seed_changes_the_sample():
    a = simulate(_cfg(NormalMvd(0.20), seed=11))
    b = simulate(_cfg(NormalMvd(0.20), seed=12))
    assert a.mean_loss != b.mean_loss


def test_point_mass_estimators():
    r = simulate(_cfg(DiracMvd(-0.45)))
    n = r.n_trials
    # every defaulted trial loses exactly 0.45
    assert abs(r.mean_loss_given_loss - 0.45) <= 1e-12
    se_freq = math.sqrt(0.075 * 0.925 / n)
    assert abs(r.loss_frequency - 0.075) <= 4 * se_freq
    assert abs(r.mean_loss - 0.45 * r.loss_frequency) <= 1e-12
    # sample standard error of a two-point loss matches the binomial formula
    p = r.loss_frequency
    want_se = 0.45 * math.sqrt(p * (1.0 - p) * n / (n - 1) / n)
    assert r.std_error_mean_loss == pytest.approx(want_se, rel=1e-9)


def test_normal_estimators_near_analytic_values():
    import mvdrisk
    ctx = mvdrisk.LoanContext(0.075)
    d = NormalMvd(0.20)
    r = simulate(_cfg(d, n=400_000, seed=5))
    el = mvdrisk.expected_loss(1.0, d, ctx)
    pd = mvdrisk.pd_liquidation(1.0, d, ctx)
    lgl = mvdrisk.lgd_liquidation(1.0, d)
    assert abs(r.mean_loss - el) <= 4 * r.std_error_mean_loss
    assert abs(r.loss_frequency - pd) <= 4 * math.sqrt(pd * (1 - pd) / r.n_trials)
    assert r.mean_loss_given_loss == pytest.approx(lgl, rel=0.02)


def test_no_loss_sample_uses_zero_conventions():
    r = simulate(_cfg(DiracMvd(0.0), n=50_000))
    assert r.mean_loss == 0.0
    assert r.loss_frequency == 0.0
    assert r.mean_loss_given_loss == 0.0
    assert r.std_error_mean_loss == 0.0


def test_degenerate_arrears_probabilities():
    none = simulate(_cfg(NormalMvd(0.20), n=50_000, p_a=0.0))
    assert none.loss_frequency == 0.0 and none.mean_loss == 0.0
    every = simulate(_cfg(NormalMvd(0.20), n=50_000, p_a=1.0))
    # with certain arrears, loss frequency estimates P(M < 0) = 1/2
    assert every.loss_frequency == pytest.approx(0.5, abs=0.01)


def test_draws_below_support_floor_are_clipped():
    # a huge spread makes sub-(-1) draws common; losses must still top out at 1
    r = simulate(_cfg(NormalMvd(5.0), n=50_000))
    assert r.mean_loss_given_loss <= 1.0
    assert r.mean_loss <= r.loss_frequency + 1e-15


def test_unsupported_variant_raises_sampling_error():
    pm = TabulatedMvd(-1.0, 0.01, np.full(200, 0.005))
    with pytest.raises(SamplingError, match="[Tt]abulated"):
        simulate(_cfg(pm))


def test_config_validation():
    with pytest.raises(ValueError):
        _cfg(NormalMvd(0.20), n=0)
    with pytest.raises(InvalidLvrError):
        _cfg(NormalMvd(0.20), lvr=0.0)
    with pytest.raises(ValueError):
        _cfg(NormalMvd(0.20), p_a=1.0001)
    with pytest.raises(ValueError):
        SimulationConfig(n_trials=100, seed="abc", lvr=1.0,
                         dist=NormalMvd(0.20), p_a=0.075)


def test_result_record_shape():
    r = simulate(_cfg(DiracMvd(-0.45), n=1000, seed=3))
    d = r.to_json_dict()
    assert list(d) == ["mean_loss", "loss_frequency", "mean_loss_given_loss",
                       "std_error_mean_loss", "n_trials", "seed", "generator"]
    assert d["generator"] == GENERATOR
    assert d["seed"] == 3 and d["n_trials"] == 1000
    assert isinstance(r, SimulationResult)
