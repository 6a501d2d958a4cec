import json
import math
import os
import subprocess

import pytest

import radstein as rs


def test_kernel_roundtrip_and_norms():
    f = rs.Kernel(2)
    f.set([1, 2], 0.5)
    assert f.order() == 2
    assert abs(f.norm2() ** 2 - 0.5) < 1e-12
    g = rs.Kernel.from_json(f.to_json())
    assert g.value([2, 1]) == 0.5


def test_pure_chaos_evaluation():
    f = rs.Kernel(2)
    f.set([1, 2], 0.5)
    F = rs.pure_chaos(2, f)
    assert F.evaluate([1, 1]) == pytest.approx(1.0)
    assert F.evaluate([1, -1]) == pytest.approx(-1.0)


def test_first_chaos_bound_cubic_term():
    rep = rs.first_chaos_bound([0.5, 0.5, 0.5, 0.5])
    assert rep["terms"]["cubic_term"] == pytest.approx(1.0)
    assert rep["total"] >= rep["terms"]["cubic_term"]


def test_fourth_moment_single_product():
    f = rs.Kernel(2)
    f.set([1, 2], 0.5)
    assert rs.fourth_moment_J2(f) == pytest.approx(1.0)
    assert rs.necessary_statistic(f) == pytest.approx(-0.125)


def test_two_runs_variance():
    assert rs.two_runs_variance([1.0, 1.0, 1.0]) == pytest.approx(13.0 / 16.0)


def test_comb_hand_example():
    out = rs.comb_phi_psi(2, [[1, 2], [2, 1]], [1.0, 1.0])
    assert out["phi"] == 0.0
    assert out["psi_sup"] == pytest.approx(1.0)


def test_expected_trace_small():
    assert rs.expected_trace(1, 3) == 0.0
    assert rs.expected_trace(2, 3) == pytest.approx(1.0)


def test_identity_suite_small():
    res = rs.run_identity_suite(seed=7, cases=3, max_n=6)
    assert max(res.values()) <= 1e-10


def test_cli_first_chaos():
    cli = os.environ.get("RADSTEIN_CLI")
    if not cli:
        pytest.skip("RADSTEIN_CLI not set")
    out = subprocess.run(
        [cli, "bound", "--type", "first-chaos", "--weights", "0.5,0.5,0.5,0.5"],
        capture_output=True,
        text=True,
        check=True,
    )
    doc = json.loads(out.stdout)
    assert doc["results"]["terms"]["cubic_term"] == pytest.approx(1.0)
    assert doc["version"]
