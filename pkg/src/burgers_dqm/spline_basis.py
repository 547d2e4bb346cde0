"""Trigonometric cubic B-spline knot values and the boundary-modified basis.

On a uniform grid x_1 < ... < x_N with spacing h, the trigonometric cubic
B-spline T_m centered at x_m is supported on [x_{m-2}, x_{m+2}].  Only its
values (and first two derivatives) at the knots themselves enter the
differential quadrature systems, and those are given by six closed-form
constants a1..a6 depending on h alone:

            value        first derivative    second derivative
  j = m      a2                0                    a6
  |j-m| = 1  a1           -+ a4 (sign below)        a5
  else        0                0                     0

T_m'(x_{m-1}) = a4 and T_m'(x_{m+1}) = a3 = -a4.

To make the collocation matrix invertible, the boundary splines are folded
into the interior ones: sigma_1 = T_1 + 2 T_0, sigma_2 = T_2 - T_0,
sigma_m = T_m for 3 <= m <= N-2, sigma_{N-1} = T_{N-1} - T_{N+1},
sigma_N = T_N + 2 T_{N+1}.  The resulting node-value matrix is tridiagonal.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError

# largest admissible spacing: sin(3h/2) must stay positive
H_MAX = 2.0 * math.pi / 3.0


@dataclass(frozen=True)
class SplineCoeffs:
    """Knot-value constants of the trigonometric cubic B-spline for spacing h."""

    h: float
    a1: float
    a2: float
    a3: float
    a4: float
    a5: float
    a6: float
    omega: float


def make_coeffs(h):
    """Evaluate the six knot-value constants for grid spacing h.

    Raises DomainError outside 0 < h < 2*pi/3, where one of the
    denominators sin(h), sin(3h/2), 1 + 2cos(h), 2 + 4cos(h) degenerates.
    """
    if not (0.0 < h < H_MAX):
        raise DomainError(f"spacing h={h!r} outside admissible range (0, 2*pi/3)")
    s_half = math.sin(h / 2.0)
    s1 = math.sin(h)
    s32 = math.sin(1.5 * h)
    c1 = math.cos(h)
    c_half = math.cos(h / 2.0)
    c32 = math.cos(1.5 * h)
    for d in (s1, s32, 1.0 + 2.0 * c1, 2.0 + 4.0 * c1, 2.0 * c_half + c32):
        if abs(d) < 1e-14:
            raise DomainError(f"degenerate denominator at h={h!r}")
    a1 = s_half * s_half / (s1 * s32)
    a2 = 2.0 / (1.0 + 2.0 * c1)
    a4 = 3.0 / (4.0 * s32)
    a3 = -a4
    a5 = (3.0 + 9.0 * c1) / (16.0 * s_half * s_half * (2.0 * c_half + c32))
    a6 = -3.0 * c_half * c_half / (s_half * s_half * (2.0 + 4.0 * c1))
    omega = s_half * s1 * s32
    return SplineCoeffs(h, a1, a2, a3, a4, a5, a6, omega)


def basis_value(m, j, c):
    """T_m(x_j): a2 on the diagonal, a1 for |m-j| = 1, else 0."""
    d = m - j
    if d == 0:
        return c.a2
    if d == 1 or d == -1:
        return c.a1
    return 0.0


def basis_deriv1(m, j, c):
    """T_m'(x_j): a4 at the left neighbor, a3 at the right, 0 elsewhere."""
    d = m - j
    if d == 1:
        return c.a4
    if d == -1:
        return c.a3
    return 0.0


def basis_deriv2(m, j, c):
    """T_m''(x_j): a6 on the diagonal, a5 for |m-j| = 1, else 0."""
    d = m - j
    if d == 0:
        return c.a6
    if d == 1 or d == -1:
        return c.a5
    return 0.0


def _modified(fn, m, j, n, c):
    # sigma_m as a combination of T's, evaluated through the knot table
    if not (1 <= m <= n and 1 <= j <= n):
        raise IndexError(f"indices (m={m}, j={j}) outside 1..{n}")
    if m == 1:
        return fn(1, j, c) + 2.0 * fn(0, j, c)
    if m == 2:
        return fn(2, j, c) - fn(0, j, c)
    if m == n - 1:
        return fn(n - 1, j, c) - fn(n + 1, j, c)
    if m == n:
        return fn(n, j, c) + 2.0 * fn(n + 1, j, c)
    return fn(m, j, c)


def modified_basis_value(m, j, n, c):
    """sigma_m(x_j) for the boundary-modified basis, 1-based indices."""
    return _modified(basis_value, m, j, n, c)


def modified_basis_deriv1(m, j, n, c):
    """sigma_m'(x_j)."""
    return _modified(basis_deriv1, m, j, n, c)


def modified_basis_deriv2(m, j, n, c):
    """sigma_m''(x_j)."""
    return _modified(basis_deriv2, m, j, n, c)


def modified_tables(n, c):
    """Assemble the N x N arrays [sigma_m(x_j)], [sigma_m'(x_j)], [sigma_m''(x_j)].

    Row m-1 holds basis function sigma_m sampled at all nodes.  All three
    arrays are banded (entries vanish for |m-j| >= 2), so only the
    tridiagonal band is populated.
    """
    if n < 4:
        raise DomainError(f"need at least 4 nodes, got {n}")
    val = np.zeros((n, n))
    d1 = np.zeros((n, n))
    d2 = np.zeros((n, n))
    for m in range(1, n + 1):
        for j in range(max(1, m - 1), min(n, m + 1) + 1):
            val[m - 1, j - 1] = modified_basis_value(m, j, n, c)
            d1[m - 1, j - 1] = modified_basis_deriv1(m, j, n, c)
            d2[m - 1, j - 1] = modified_basis_deriv2(m, j, n, c)
    return val, d1, d2
