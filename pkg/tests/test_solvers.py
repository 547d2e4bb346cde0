"""Tests for the 1D/2D time-marching drivers."""

import math

import numpy as np
import pytest

from burgers_dqm import (
    Problem1D,
    problem1,
    problem2,
    problem4,
    solve_1d,
    solve_2d,
    error_norms,
)
from burgers_dqm.exceptions import ConfigError, DomainError, NonFiniteState


def test_zero_horizon_returns_initial_condition():
    prob = problem1()
    sol = solve_1d(prob, 21, 1e-3, 0.0)
    want_u = prob.phi(sol.grid.x)
    want_u[0] = prob.g1(0.0)
    want_u[-1] = prob.g2(0.0)
    np.testing.assert_allclose(sol.u, want_u, atol=1e-15)
    assert sol.t == 0.0


def test_short_run_tracks_exact_solution():
    prob = problem1()
    sol = solve_1d(prob, 41, 1e-3, 0.1)
    rep = error_norms(sol.u, prob.exact_u(sol.grid.x, sol.t), sol.grid.h)
    assert rep.linf <= 2e-4


def test_snapshots_collected_at_requested_times():
    prob = problem1()
    sol = solve_1d(prob, 21, 0.05, 0.2, snapshots=(0.0, 0.1, 0.2))
    times = [t for t, _, _ in sol.snapshots]
    assert times == pytest.approx([0.0, 0.1, 0.2])
    # the final snapshot is the final state
    np.testing.assert_array_equal(sol.snapshots[-1][1], sol.u)
    # the first is the initial condition with boundary values applied
    ic = prob.phi(sol.grid.x)
    np.testing.assert_allclose(sol.snapshots[0][1][1:-1], ic[1:-1], atol=1e-15)


def test_misaligned_snapshot_rejected():
    prob = problem1()
    with pytest.raises(ConfigError):
        solve_1d(prob, 21, 0.05, 0.2, snapshots=(0.07,))
    with pytest.raises(ConfigError):
        solve_1d(prob, 21, 0.05, 0.2, snapshots=(0.3,))


def test_invalid_policies_rejected():
    prob = problem1()
    with pytest.raises(ConfigError):
        solve_1d(prob, 21, 1e-3, 0.01, boundary_policy="frozen")
    with pytest.raises(ConfigError):
        solve_1d(prob, 21, 1e-3, 0.01, gform="other")


def test_dt_must_divide_interval():
    prob = problem1()
    with pytest.raises(ConfigError):
        solve_1d(prob, 21, 0.3, 1.0)


def test_stage_policy_runs_and_differs_from_base():
    prob = problem1()
    base = solve_1d(prob, 41, 1e-2, 0.5, boundary_policy="base")
    stage = solve_1d(prob, 41, 1e-2, 0.5, boundary_policy="stage")
    diff = np.abs(base.u - stage.u).max()
    assert diff > 0.0
    # both policies stay accurate on this smooth problem
    exact = prob.exact_u(base.grid.x, 0.5)
    assert np.abs(base.u - exact).max() <= 1e-4
    assert np.abs(stage.u - exact).max() <= 1e-4


def test_observer_sees_every_step():
    prob = problem1()
    seen = []
    solve_1d(prob, 21, 0.05, 0.2,
             observer=lambda k, t, u, v: seen.append((k, t)))
    assert [k for k, _ in seen] == [1, 2, 3, 4]


@pytest.mark.filterwarnings("ignore:overflow", "ignore:invalid value")
def test_unstable_run_raises_nonfinite_with_time():
    # An oversized step on a genuinely nonlinear system overflows quickly.
    # (problem 1 itself cannot be used here: on its invariant manifold u = v
    # the convection terms cancel exactly and the dynamics stays linear.)
    zero_t = lambda t: 0.0
    prob = Problem1D(eta=1.0, xi=1.0, alpha=1.0, beta=1.0,
                     a=-math.pi, b=math.pi, phi=np.sin, psi=np.cos,
                     g1=zero_t, g2=zero_t, g3=zero_t, g4=zero_t,
                     exact_u=None, exact_v=None, name="blowup")
    with pytest.raises(NonFiniteState) as exc:
        solve_1d(prob, 41, 5.0, 150.0)
    assert exc.value.t is not None
    assert 0.0 <= exc.value.t <= 150.0


# ---------------------------------------------------------------------------
# 2D
# ---------------------------------------------------------------------------

def test_2d_zero_horizon_matches_initial_data():
    prob = problem4()
    sol = solve_2d(prob, 9, 1e-3, 0.0)
    x = sol.grid.xgrid.x[:, None]
    y = sol.grid.ygrid.x[None, :]
    np.testing.assert_allclose(sol.u, prob.phi(x, y), atol=1e-15)
    np.testing.assert_allclose(sol.v, prob.psi(x, y), atol=1e-15)


def test_2d_short_run_tracks_exact_solution():
    prob = problem4()
    sol = solve_2d(prob, 11, 1e-3, 0.1)
    x = sol.grid.xgrid.x[:, None]
    y = sol.grid.ygrid.x[None, :]
    err = np.abs(sol.u - prob.exact_u(x, y, sol.t)).max()
    assert err <= 5e-3


def test_2d_rectangular_node_counts():
    prob = problem4()
    sol = solve_2d(prob, 9, 1e-3, 0.01, ny=7)
    assert sol.u.shape == (9, 7)
    assert sol.v.shape == (9, 7)


def test_2d_horizon_guard():
    prob = problem2()
    with pytest.raises(DomainError):
        solve_2d(prob, 9, 1e-3, 0.7)


def test_2d_snapshots():
    prob = problem4()
    sol = solve_2d(prob, 9, 0.01, 0.04, snapshots=(0.02, 0.04))
    assert len(sol.snapshots) == 2
    np.testing.assert_array_equal(sol.snapshots[-1][1], sol.u)
