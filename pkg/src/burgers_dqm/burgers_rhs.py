"""Semi-discrete right-hand sides for the coupled viscous Burgers' systems.

1D system:
    u_t = u_xx - eta u u_x - alpha (u v_x + v u_x)
    v_t = v_xx - xi  v v_x - beta  (u v_x + v u_x)

2D system (nu = 1/Re):
    u_t = nu (u_xx + u_yy) - u u_x - v u_y
    v_t = nu (v_xx + v_yy) - u v_x - v v_y

Spatial derivatives are weighted sums over all grid nodes.  Each sum can be
split into its interior part plus a boundary forcing term (F for u, G for v)
that collects the first/last-column contributions with the convection
coefficients frozen at the node value; both routes are implemented and must
agree to rounding.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .exceptions import ConfigError, ShapeMismatch

GFORMS = ("printed", "symmetric")


@dataclass(frozen=True)
class Problem1D:
    """1D coupled Burgers' problem: parameters, initial/boundary data, exact."""

    eta: float
    xi: float
    alpha: float
    beta: float
    a: float
    b: float
    phi: Callable  # initial u(x)
    psi: Callable  # initial v(x)
    g1: Callable  # u at x=a, function of t
    g2: Callable  # u at x=b
    g3: Callable  # v at x=a
    g4: Callable  # v at x=b
    exact_u: Optional[Callable] = None  # (x, t)
    exact_v: Optional[Callable] = None
    name: str = "custom-1d"


@dataclass(frozen=True)
class Problem2D:
    """2D coupled Burgers' problem on [a, b] x [c, d] with viscosity nu."""

    nu: float
    a: float
    b: float
    c: float
    d: float
    phi: Callable  # initial u(x, y)
    psi: Callable  # initial v(x, y)
    bc_u: Callable  # boundary trace (x, y, t)
    bc_v: Callable
    exact_u: Optional[Callable] = None  # (x, y, t)
    exact_v: Optional[Callable] = None
    horizon: Optional[float] = None  # latest valid time, if limited
    name: str = "custom-2d"

    @property
    def re(self):
        return 1.0 / self.nu


def _check_1d(u, v, w1):
    n = w1.shape[0]
    if u.shape != (n,) or v.shape != (n,):
        raise ShapeMismatch(f"state shapes {u.shape}, {v.shape} do not match n={n}")


def apply_dirichlet_1d(u, v, t, prob, grid):
    """Overwrite the boundary entries from the g1..g4 traces at time t."""
    u[0] = prob.g1(t)
    u[-1] = prob.g2(t)
    v[0] = prob.g3(t)
    v[-1] = prob.g4(t)
    return u, v


def apply_dirichlet_2d(U, V, t, prob, grid):
    """Overwrite the boundary ring from the traces at time t.

    The y-edges are written first and the x-edges last, so corner values
    come from the x-edge trace (the traces must agree there anyway).
    """
    x = grid.xgrid.x
    y = grid.ygrid.x
    for A, f in ((U, prob.bc_u), (V, prob.bc_v)):
        A[:, 0] = f(x, y[0], t)
        A[:, -1] = f(x, y[-1], t)
        A[0, :] = f(x[0], y, t)
        A[-1, :] = f(x[-1], y, t)
    return U, V


def rhs_1d(u, v, t, prob, w1, w2):
    """Full-sum semi-discrete RHS; boundary rows of the result are zero."""
    _check_1d(u, v, w1)
    ux = w1 @ u
    vx = w1 @ v
    cross = u * vx + v * ux
    du = w2 @ u - prob.eta * u * ux - prob.alpha * cross
    dv = w2 @ v - prob.xi * v * vx - prob.beta * cross
    du[0] = du[-1] = 0.0
    dv[0] = dv[-1] = 0.0
    return du, dv


def boundary_forcing_1d(u, v, prob, w1, w2, gform="printed"):
    """Boundary forcing terms (F, G): the first/last-column parts of each sum.

    The convection coefficients are frozen per node (eta_i = eta*u_i and so
    on).  gform selects between the formula exactly as published ("printed")
    and the same terms written by mirroring F's construction with the roles
    of u and v swapped ("symmetric"); the two agree identically.
    """
    if gform not in GFORMS:
        raise ConfigError(f"unknown gform {gform!r}")
    _check_1d(u, v, w1)
    a1l, a1r = w1[:, 0], w1[:, -1]
    a2l, a2r = w2[:, 0], w2[:, -1]
    ub = a1l * u[0] + a1r * u[-1]  # boundary part of sum a1[i,l] u_l
    vb = a1l * v[0] + a1r * v[-1]
    f = (a2l * u[0] + a2r * u[-1]) - (prob.eta * u) * ub \
        - (prob.alpha * u) * vb - (prob.alpha * v) * ub
    if gform == "printed":
        g = (a2l * v[0] + a2r * v[-1]) - (prob.xi * v) * vb \
            - (prob.beta * u) * vb - (prob.beta * v) * ub
    else:
        # mirror of the F line under u <-> v, eta -> xi, alpha -> beta
        g = (a2l * v[0] + a2r * v[-1]) - (prob.xi * v) * vb \
            - (prob.beta * v) * ub - (prob.beta * u) * vb
    return f, g


def rhs_1d_split(u, v, t, prob, w1, w2, gform="printed"):
    """Interior-sum RHS plus boundary forcing; equals rhs_1d to rounding."""
    _check_1d(u, v, w1)
    w1i = w1[:, 1:-1]
    w2i = w2[:, 1:-1]
    ui = u[1:-1]
    vi = v[1:-1]
    ux = w1i @ ui
    vx = w1i @ vi
    f, g = boundary_forcing_1d(u, v, prob, w1, w2, gform)
    du = w2i @ ui - prob.eta * u * ux - prob.alpha * (u * vx + v * ux) + f
    dv = w2i @ vi - prob.xi * v * vx - prob.beta * (u * vx + v * ux) + g
    du[0] = du[-1] = 0.0
    dv[0] = dv[-1] = 0.0
    return du, dv


def _check_2d(U, V, ax1, by1):
    shape = (ax1.shape[0], by1.shape[0])
    if U.shape != shape or V.shape != shape:
        raise ShapeMismatch(f"state shapes {U.shape}, {V.shape} do not match {shape}")


def _zero_ring(*fields):
    for D in fields:
        D[0, :] = D[-1, :] = 0.0
        D[:, 0] = D[:, -1] = 0.0


def rhs_2d(U, V, t, prob, ax1, ax2, by1, by2):
    """Full-sum 2D RHS via line sweeps; boundary ring of the result is zero.

    x-derivatives apply the x-axis matrix down each column of constant y,
    y-derivatives apply the y-axis matrix along each row of constant x.
    """
    _check_2d(U, V, ax1, by1)
    nu = prob.nu
    dU = nu * (ax2 @ U + U @ by2.T) - U * (ax1 @ U) - V * (U @ by1.T)
    dV = nu * (ax2 @ V + V @ by2.T) - U * (ax1 @ V) - V * (V @ by1.T)
    _zero_ring(dU, dV)
    return dU, dV


def boundary_forcing_2d(U, V, prob, ax1, ax2, by1, by2):
    """2D boundary forcing (F, G): first/last row and column contributions."""
    _check_2d(U, V, ax1, by1)
    nu = prob.nu

    def forcing(W, conv_x, conv_y):
        # x-boundary columns enter through rows 1 and Nx of W
        fx2 = np.outer(ax2[:, 0], W[0, :]) + np.outer(ax2[:, -1], W[-1, :])
        fy2 = np.outer(by2[:, 0], W[:, 0]) + np.outer(by2[:, -1], W[:, -1])
        fx1 = np.outer(ax1[:, 0], W[0, :]) + np.outer(ax1[:, -1], W[-1, :])
        fy1 = np.outer(by1[:, 0], W[:, 0]) + np.outer(by1[:, -1], W[:, -1])
        return nu * (fx2 + fy2.T) - conv_x * fx1 - conv_y * fy1.T

    f = forcing(U, U, V)
    g = forcing(V, U, V)
    return f, g


def rhs_2d_split(U, V, t, prob, ax1, ax2, by1, by2):
    """Interior-sum 2D RHS plus boundary forcing; equals rhs_2d to rounding."""
    _check_2d(U, V, ax1, by1)
    nu = prob.nu
    ax1i, ax2i = ax1[:, 1:-1], ax2[:, 1:-1]
    by1i, by2i = by1[:, 1:-1], by2[:, 1:-1]
    Ui, Vi = U[1:-1, :], V[1:-1, :]
    Uj, Vj = U[:, 1:-1], V[:, 1:-1]
    f, g = boundary_forcing_2d(U, V, prob, ax1, ax2, by1, by2)
    dU = nu * (ax2i @ Ui + Uj @ by2i.T) - U * (ax1i @ Ui) - V * (Uj @ by1i.T) + f
    dV = nu * (ax2i @ Vi + Vj @ by2i.T) - U * (ax1i @ Vi) - V * (Vj @ by1i.T) + g
    _zero_ring(dU, dV)
    return dU, dV
