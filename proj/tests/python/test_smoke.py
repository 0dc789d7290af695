import os
import subprocess

import numpy as np
import pytest

import framelab


def test_union_of_onbs_is_tight():
    bases = [framelab.random_unitary(6, 1), framelab.random_unitary(6, 2)]
    F, locations = framelab.union_of_onbs(bases)
    assert F.shape == (6, 12)
    assert locations[:6] == list(range(6))
    fb = framelab.frame_bounds(F)
    assert fb.lower == pytest.approx(2.0)
    assert fb.upper == pytest.approx(2.0)
    assert np.allclose(framelab.self_dual_products(F), 0.5)


def test_finite_gabor_measure_is_ab_over_n():
    F, labels = framelab.finite_gabor(12, 2, 3)
    assert F.shape == (12, 24)
    assert labels[1] == (0, 1)
    assert np.mean(framelab.self_dual_products(F)) == pytest.approx(0.5, abs=1e-10)


def test_gram_convention():
    F = np.array([[1.0, 1j], [0.0, 1.0]])
    G = framelab.gram(F)
    assert G[0, 1] == pytest.approx(np.vdot(F[:, 1], F[:, 0]))


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        framelab.finite_gabor(8, 3, 2)
    with pytest.raises(ValueError):
        framelab.positive_density_removal(np.eye(10), list(range(10)), 0, 9, 0.6, 0.1)


def test_scenario_runs():
    assert "wexler-raz" in framelab.list_scenarios()
    r = framelab.run_scenario("wexler-raz")
    assert r["passed"]
    assert all(c["ok"] for c in r["checks"])


@pytest.mark.skipif("FRAMELAB_CLI" not in os.environ, reason="CLI path not given")
def test_cli_verify():
    out = subprocess.run([os.environ["FRAMELAB_CLI"], "verify", "--scenario", "union-measure"],
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stdout + out.stderr
