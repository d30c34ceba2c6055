import json
import math

import pytest

import zpe


def test_closed_forms():
    assert zpe.planck_mean_energy(1.0, 1.0) == pytest.approx(1.3130352854993313, rel=1e-15)
    assert zpe.thermal_mean_energy(1.0, 1.0) == pytest.approx(0.3130352854993313, rel=1e-15)
    assert zpe.entropy(1.0, 1.0) == pytest.approx(0.45844874336819036, rel=1e-14)
    assert zpe.entropy(1.0, 100.0) < 1e-80


def test_level_weights_match_entropy():
    w = zpe.level_weights(1.0, 0.5)
    assert sum(w) == pytest.approx(1.0, abs=1e-15)
    shannon = -sum(x * math.log(x) for x in w if x > 0)
    assert shannon == pytest.approx(zpe.entropy(1.0, 0.5), abs=1e-10)


def test_variance_ansatz():
    planck = zpe.VarianceAnsatz(-1.0, 0.0, 1.0)
    assert planck.q == pytest.approx(4.0)
    assert zpe.solve_mean_energy(planck, 0.7) == pytest.approx(zpe.planck_mean_energy(1.0, 0.7), rel=1e-14)
    assert abs(zpe.wien_consistency_residual(zpe.VarianceAnsatz.with_root(1.0, 0.5, 1.0), 1.0, 1.0)) > 1e-3
    with pytest.raises(ValueError):
        zpe.VarianceAnsatz(1.0, 0.0, 1.0)


def test_decomposition_and_bound():
    d = zpe.decompose_fluctuations(1.0, 2.0)
    assert abs(d["covariance"]) < 1e-12 * d["var_total"]
    assert zpe.uncertainty_product(2.0, 100.0) == pytest.approx(0.25, abs=1e-12)


def test_sampling_is_seeded():
    a = zpe.draw_discrete_levels(1.0, 1.0, 1000, seed=5)
    b = zpe.draw_discrete_levels(1.0, 1.0, 1000, seed=5)
    assert a == b
    batch = zpe.sample_ws(2.0, 100_000, seed=5)
    assert abs(batch["mean"] - 2.0) < 4 * batch["std_error"]


def test_cli_round_trip():
    status, out, err = zpe.run_cli(["mc", "--beta", "1", "--samples", "1000", "--seed", "7", "--format", "json"])
    assert status == 0, err
    report = json.loads(out)
    assert report["meta"]["seed"] == 7
    assert {"mean", "variance", "std_error"} <= set(report["rows"][0])
    status, _, _ = zpe.run_cli(["spectrum", "--beta-min", "-1"])
    assert status == 2


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        zpe.planck_mean_energy(1.0, 0.0)
    with pytest.raises(RuntimeError):
        zpe.level_weights(1.0, 1e-9)
