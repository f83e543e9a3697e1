import math

import numpy as np
import pytest

import l0path


def identity_case():
    return np.eye(2), np.array([3.0, 4.0])


def test_orthonormal_path():
    a, y = identity_case()
    for path in (l0path.csbr(a, y), l0path.l0pd(a, y)[0]):
        assert path.lambdas == pytest.approx([16.0, 9.0, 0.0])
        assert path.supports == [[], [1], [0, 1]]
        assert path.solution_at(12.0) == [1]
        assert path.cost_at(12.0) == pytest.approx(9.0 + 12.0)
        assert math.isinf(path.upper(0))


def test_sbr_single_penalty():
    a, y = identity_case()
    out = l0path.sbr(a, y, 10.0)
    assert out["support"] == [1]
    assert out["cost"] == pytest.approx(19.0)
    assert out["trace"][0][:2] == (True, 1)


def test_polygon_and_oracle():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((10, 8))
    y = a[:, [1, 5]] @ np.array([1.0, -2.0]) + 0.05 * rng.standard_normal(10)
    path, polygon, explorations = l0path.l0pd(a, y)
    assert explorations > 0
    bps = polygon["breakpoints"]
    assert math.isinf(bps[0]) and bps[-1] == 0.0
    assert all(bps[i] > bps[i + 1] for i in range(len(bps) - 1))
    report = l0path.oracle_check(a, y)
    assert report["theorem1"] == [] and report["theorem2"] == []
    assert report["csbr_gap"] >= -1e-9 and report["l0pd_gap"] >= -1e-9


def test_instances_and_selection():
    a, y, x_star, support = l0path.draw_instance("E", trial=2, seed=1)
    assert a.shape == (300, 300) and y.shape == (300,)
    assert sorted(np.flatnonzero(x_star).tolist()) == support
    path, _, _ = l0path.l0pd(a, y, lambda_stop=1e-3 * l0path.csbr(a, y, k_stop=1).lambdas[0])
    j = l0path.mdlc_select(path, 300)
    assert 0 < len(path.supports[j]) < 40
    assert len(path.supports[l0path.ic_select(path, 300, 1e9)]) == 0


def test_bench_is_deterministic():
    first = l0path.bench("E", ["l0pd", "csbr"], trials=2, seed=7)
    second = l0path.bench("E", ["l0pd", "csbr"], trials=2, seed=7)
    strip = lambda s: {k: v for k, v in s.items() if k != "timing"}
    assert [strip(s) for s in first["summary"]] == [strip(s) for s in second["summary"]]
    assert [s["algo"] for s in first["summary"]] == ["l0pd", "csbr"]


def test_errors_are_translated():
    with pytest.raises(l0path.L0pathError):
        l0path.csbr(np.eye(2), np.ones(3))
    with pytest.raises(l0path.L0pathError):
        l0path.draw_instance("Z")
