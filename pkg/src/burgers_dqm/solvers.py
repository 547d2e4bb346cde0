"""Time-stepping drivers for the 1D and 2D coupled Burgers' problems.

These tie together grid construction, quadrature weights, the semi-discrete
right-hand side, and the five-stage Runge-Kutta integrator.  Dirichlet data
is reimposed on the stored state after every step so that boundary entries
track the prescribed traces exactly; during stages the right-hand side sees
trace values at either the step base time (``boundary_policy='base'``, the
default) or the stage times (``'stage'``).
"""

from dataclasses import dataclass, field

import numpy as np

from .burgers_rhs import (
    GFORMS,
    apply_dirichlet_1d,
    apply_dirichlet_2d,
    rhs_1d_split,
    rhs_2d_split,
)
from .dqm_weights import (
    Grid1D,
    Grid2D,
    first_order_weights,
    second_order_weights,
    weights_2d,
)
from .exceptions import ConfigError, DomainError
from .ssprk54 import num_steps, step

BOUNDARY_POLICIES = ("base", "stage")

# Relative slack when matching a requested snapshot time to a step multiple.
SNAP_TOL = 1e-9


@dataclass
class Solution1D:
    grid: Grid1D
    t: float
    u: np.ndarray
    v: np.ndarray
    snapshots: list = field(default_factory=list)  # (t, u, v) triples


@dataclass
class Solution2D:
    grid: Grid2D
    t: float
    u: np.ndarray  # shape (nx, ny)
    v: np.ndarray
    snapshots: list = field(default_factory=list)


def _check_policy(boundary_policy, gform=None):
    if boundary_policy not in BOUNDARY_POLICIES:
        raise ConfigError(
            "boundary_policy must be one of %s, got %r"
            % (BOUNDARY_POLICIES, boundary_policy)
        )
    if gform is not None and gform not in GFORMS:
        raise ConfigError("gform must be one of %s, got %r" % (GFORMS, gform))


def _snapshot_steps(snapshots, t0, dt, steps):
    """Map requested snapshot times to step indices, validating alignment."""
    table = {}
    for s in snapshots:
        s = float(s)
        k = int(round((s - t0) / dt))
        if abs(t0 + k * dt - s) > SNAP_TOL * max(dt, abs(s), 1e-300):
            raise ConfigError(
                "snapshot time %r is not a multiple of dt=%r" % (s, dt)
            )
        if k < 0 or k > steps:
            raise ConfigError(
                "snapshot time %r outside [%r, %r]" % (s, t0, t0 + steps * dt)
            )
        table[k] = s
    return table


def solve_1d(prob, n, dt, t_end, t0=0.0, boundary_policy="base",
             gform="printed", snapshots=(), observer=None):
    """Integrate a 1D problem to ``t_end`` on an ``n``-node uniform grid.

    ``snapshots`` is an iterable of output times (each must be a step
    multiple); the state at those times is collected on the returned
    ``Solution1D``.  ``observer(step_index, t, u, v)`` is called after every
    step with read-only views.
    """
    _check_policy(boundary_policy, gform)
    grid = Grid1D(prob.a, prob.b, n)
    w1 = first_order_weights(grid)
    w2 = second_order_weights(w1, grid)

    u = np.asarray(prob.phi(grid.x), dtype=float).copy()
    v = np.asarray(prob.psi(grid.x), dtype=float).copy()
    apply_dirichlet_1d(u, v, t0, prob, grid)

    steps = num_steps(t0, t_end, dt)
    snap_at = _snapshot_steps(snapshots, t0, dt, steps)
    collected = []
    if 0 in snap_at:
        collected.append((snap_at[0], u.copy(), v.copy()))

    def rhs(w, t):
        uu = w[:n].copy()
        vv = w[n:].copy()
        apply_dirichlet_1d(uu, vv, t, prob, grid)
        du, dv = rhs_1d_split(uu, vv, t, prob, w1, w2, gform=gform)
        return np.concatenate([du, dv])

    w = np.concatenate([u, v])
    stage_times = boundary_policy == "stage"
    for m in range(steps):
        w = step(w, t0 + m * dt, dt, rhs, stage_times=stage_times)
        t_new = t0 + (m + 1) * dt
        uu, vv = w[:n], w[n:]
        apply_dirichlet_1d(uu, vv, t_new, prob, grid)
        if observer is not None:
            ro = w.copy()
            ro.setflags(write=False)
            observer(m + 1, t_new, ro[:n], ro[n:])
        if m + 1 in snap_at:
            collected.append((snap_at[m + 1], uu.copy(), vv.copy()))

    return Solution1D(grid=grid, t=t0 + steps * dt,
                      u=w[:n].copy(), v=w[n:].copy(), snapshots=collected)


def solve_2d(prob, nx, dt, t_end, ny=None, t0=0.0, boundary_policy="base",
             snapshots=(), observer=None):
    """Integrate a 2D problem to ``t_end`` on an nx-by-ny node grid.

    ``ny`` defaults to ``nx``.  Snapshot and observer semantics match
    ``solve_1d``; fields are returned with shape (nx, ny), first axis x.
    """
    _check_policy(boundary_policy)
    if ny is None:
        ny = nx
    if prob.horizon is not None and t_end > prob.horizon + 1e-12:
        raise DomainError(
            "t_end=%r beyond problem horizon %r" % (t_end, prob.horizon)
        )
    grid = Grid2D(Grid1D(prob.a, prob.b, nx), Grid1D(prob.c, prob.d, ny))
    ax1, ax2, by1, by2 = weights_2d(grid)

    xc = grid.xgrid.x[:, None]
    yc = grid.ygrid.x[None, :]
    u = np.asarray(np.broadcast_to(prob.phi(xc, yc), (nx, ny)),
                   dtype=float).copy()
    v = np.asarray(np.broadcast_to(prob.psi(xc, yc), (nx, ny)),
                   dtype=float).copy()
    apply_dirichlet_2d(u, v, t0, prob, grid)

    steps = num_steps(t0, t_end, dt)
    snap_at = _snapshot_steps(snapshots, t0, dt, steps)
    collected = []
    if 0 in snap_at:
        collected.append((snap_at[0], u.copy(), v.copy()))

    sz = nx * ny

    def rhs(w, t):
        uu = w[:sz].reshape(nx, ny).copy()
        vv = w[sz:].reshape(nx, ny).copy()
        apply_dirichlet_2d(uu, vv, t, prob, grid)
        du, dv = rhs_2d_split(uu, vv, t, prob, ax1, ax2, by1, by2)
        return np.concatenate([du.ravel(), dv.ravel()])

    w = np.concatenate([u.ravel(), v.ravel()])
    stage_times = boundary_policy == "stage"
    for m in range(steps):
        w = step(w, t0 + m * dt, dt, rhs, stage_times=stage_times)
        t_new = t0 + (m + 1) * dt
        uu = w[:sz].reshape(nx, ny)
        vv = w[sz:].reshape(nx, ny)
        apply_dirichlet_2d(uu, vv, t_new, prob, grid)
        if observer is not None:
            observer(m + 1, t_new, uu.copy(), vv.copy())
        if m + 1 in snap_at:
            collected.append((snap_at[m + 1], uu.copy(), vv.copy()))

    return Solution2D(grid=grid, t=t0 + steps * dt,
                      u=w[:sz].reshape(nx, ny).copy(),
                      v=w[sz:].reshape(nx, ny).copy(),
                      snapshots=collected)
