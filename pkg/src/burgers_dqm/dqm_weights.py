"""Differential quadrature weight matrices.

The weights a[i, l] approximate derivatives at node x_i as weighted sums of
function values at all nodes: f'(x_i) ~= sum_l a[i, l] f(x_l).  First-order
weights come from requiring exactness on the modified spline basis, which
yields one tridiagonal system per node, all sharing the same matrix; the
system is factored once (Thomas algorithm) and back-substituted for every
node.  Second-order weights follow from the first by Shu's recursion.
"""

import math

import numpy as np

from .exceptions import DomainError, ShapeMismatch, SingularSystem
from .spline_basis import make_coeffs, modified_tables

PIVOT_TOL = 1e-13


class Grid1D:
    """Uniform grid of n nodes on [a, b], spacing h = (b - a)/(n - 1)."""

    def __init__(self, a, b, n):
        if n < 4:
            raise DomainError(f"need at least 4 nodes, got n={n}")
        if not b > a:
            raise DomainError(f"empty interval [{a}, {b}]")
        self.a = float(a)
        self.b = float(b)
        self.n = int(n)
        self.h = (self.b - self.a) / (self.n - 1)
        self.x = np.linspace(self.a, self.b, self.n)
        # admissibility of h is enforced where spline coefficients are built
        if not (0.0 < self.h < 2.0 * math.pi / 3.0):
            raise DomainError(f"grid spacing h={self.h} outside (0, 2*pi/3)")

    def __repr__(self):
        return f"Grid1D(a={self.a}, b={self.b}, n={self.n})"


class Grid2D:
    """Tensor grid: xgrid on [a, b] crossed with ygrid on [c, d]."""

    def __init__(self, xgrid, ygrid):
        self.xgrid = xgrid
        self.ygrid = ygrid

    @classmethod
    def square(cls, a, b, n):
        return cls(Grid1D(a, b, n), Grid1D(a, b, n))


def thomas_factor(sub, diag, sup):
    """Forward-eliminate a tridiagonal matrix; returns reusable multipliers.

    sub[0] and sup[-1] are ignored.  Raises SingularSystem if a pivot
    magnitude drops below PIVOT_TOL.
    """
    n = len(diag)
    if len(sub) != n or len(sup) != n:
        raise ShapeMismatch("band arrays must share the diagonal's length")
    low = np.zeros(n)
    piv = np.array(diag, dtype=float, copy=True)
    if abs(piv[0]) < PIVOT_TOL:
        raise SingularSystem("zero pivot at row 0")
    for i in range(1, n):
        low[i] = sub[i] / piv[i - 1]
        piv[i] = diag[i] - low[i] * sup[i - 1]
        if abs(piv[i]) < PIVOT_TOL:
            raise SingularSystem(f"zero pivot at row {i}")
    return low, piv, np.array(sup, dtype=float, copy=True)


def thomas_solve_factored(factor, rhs):
    """Back-substitute a (possibly multi-column) right-hand side."""
    low, piv, sup = factor
    n = len(piv)
    b = np.array(rhs, dtype=float, copy=True)
    if b.shape[0] != n:
        raise ShapeMismatch(f"rhs has {b.shape[0]} rows, system has {n}")
    for i in range(1, n):
        b[i] -= low[i] * b[i - 1]
    b[n - 1] /= piv[n - 1]
    for i in range(n - 2, -1, -1):
        b[i] = (b[i] - sup[i] * b[i + 1]) / piv[i]
    return b


def thomas_solve(sub, diag, sup, rhs):
    """Solve a tridiagonal system in one shot."""
    return thomas_solve_factored(thomas_factor(sub, diag, sup), rhs)


def _bands(a):
    """Extract (sub, diag, sup) bands from a tridiagonal matrix."""
    n = a.shape[0]
    sub = np.zeros(n)
    sup = np.zeros(n)
    sub[1:] = np.diag(a, -1)
    sup[:-1] = np.diag(a, 1)
    return sub, np.diag(a).copy(), sup


def first_order_weights(grid, coeffs=None):
    """First-derivative weight matrix on a 1D grid.

    For each node x_i the weights solve sum_l sigma_m(x_l) a[i, l] =
    sigma_m'(x_i) over all basis functions m.  The shared tridiagonal
    matrix is factored once and solved against all n right-hand sides.
    """
    if coeffs is None:
        coeffs = make_coeffs(grid.h)
    val, d1, _ = modified_tables(grid.n, coeffs)
    factor = thomas_factor(*_bands(val))
    # column i of d1 is the rhs for node i; solutions stack as columns
    return thomas_solve_factored(factor, d1).T


def second_order_weights(w1, grid):
    """Second-derivative weights from the first by Shu's recursion.

    Off-diagonal: a2[i, l] = 2 (w1[i, l] w1[i, i] - w1[i, l]/(x_i - x_l));
    diagonal: minus the off-diagonal row sum, so rows sum to zero exactly.
    """
    n = grid.n
    if w1.shape != (n, n):
        raise ShapeMismatch(f"weight matrix {w1.shape} does not match grid n={n}")
    dx = grid.x[:, None] - grid.x[None, :]
    np.fill_diagonal(dx, 1.0)  # placeholder; diagonal rewritten below
    w2 = 2.0 * (w1 * np.diag(w1)[:, None] - w1 / dx)
    np.fill_diagonal(w2, 0.0)
    np.fill_diagonal(w2, -w2.sum(axis=1))
    if not np.all(np.isfinite(w2)):
        raise ArithmeticError("non-finite second-order weights")
    return w2


def second_order_collocation(grid, coeffs=None):
    """Second-derivative weights from the sigma'' collocation system.

    Cross-check route only: solves the same tridiagonal systems with
    second-derivative right-hand sides.  Not used by the solvers (the
    recursion route is the production path; this one degrades near the
    boundary and can destabilize long integrations on fine grids).
    """
    if coeffs is None:
        coeffs = make_coeffs(grid.h)
    val, _, d2 = modified_tables(grid.n, coeffs)
    factor = thomas_factor(*_bands(val))
    return thomas_solve_factored(factor, d2).T


def weights_2d(grid, cx=None, cy=None):
    """Per-axis weight matrices (Ax1, Ax2, By1, By2) for a tensor grid."""
    ax1 = first_order_weights(grid.xgrid, cx)
    ax2 = second_order_weights(ax1, grid.xgrid)
    by1 = first_order_weights(grid.ygrid, cy)
    by2 = second_order_weights(by1, grid.ygrid)
    return ax1, ax2, by1, by2


def dump_weights_csv(w, path):
    """Write a weight matrix as (row, col, value) CSV, 17 significant digits."""
    with open(path, "w", newline="") as f:
        f.write("row,col,value\n")
        for i in range(w.shape[0]):
            for j in range(w.shape[1]):
                f.write(f"{i + 1},{j + 1},{format(w[i, j], '.17g')}\n")
