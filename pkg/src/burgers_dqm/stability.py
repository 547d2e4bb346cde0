"""Frozen-coefficient matrix stability analysis.

Linearizing the semi-discrete system around locally constant convection
velocities (tau0, kappa0) gives a linear operator built from the interior
blocks of the first- and second-derivative weight matrices.  This module
computes those spectra, forms the derived eigenvalues
lambda_B = 2 nu lambda2 - (tau0 + kappa0) lambda1, scales them by a
candidate time step, and tests membership in the integrator's stability
region via the amplification factor R(z).

The lambda_B construction pairs eigenvalues of two non-commuting matrices,
which is heuristic; the report therefore also carries the exact spectrum of
the assembled operator -(tau0 + kappa0) A1 + 2 nu A2 so the two routes can
be compared.
"""

import math
from dataclasses import dataclass

import numpy as np

from .dqm_weights import first_order_weights, second_order_weights
from .exceptions import ConvergenceFailure, DomainError, NoStableDt
from .ssprk54 import amplification

# Slack on |R(z)| <= 1 membership to absorb roundoff on the region boundary.
MEMBERSHIP_TOL = 1e-12

# Largest matrix size accepted by eigen_spectrum (desk scale).
MAX_EIGEN_SIZE = 2000

# Relative tolerance of the smallest-singular-value eigenvalue probe.
PROBE_TOL = 1e-7


@dataclass(frozen=True)
class FrozenParams:
    """Locally frozen convection velocities, viscosity, and candidate dt."""

    tau0: float
    kappa0: float
    nu: float
    dt: float

    def __post_init__(self):
        if self.nu < 0.0:
            raise DomainError("nu must be >= 0, got %r" % (self.nu,))
        if self.dt <= 0.0:
            raise DomainError("dt must be > 0, got %r" % (self.dt,))


@dataclass
class StabilityReport:
    """Spectra and the membership verdict for one (grid, params) pair.

    ``lambda1``/``lambda2`` are the interior first-/second-derivative
    spectra (sorted as paired), ``lambda_b`` the heuristic combination,
    ``z = lambda_b * dt``, and ``assembled`` the exact spectrum of
    -(tau0+kappa0) A1 + 2 nu A2.  ``ratio_re_im`` is
    max|Re lambda1| / max|Im lambda1|, an observability measure of how
    close the convection spectrum is to purely imaginary.
    """

    lambda1: np.ndarray
    lambda2: np.ndarray
    lambda_b: np.ndarray
    z: np.ndarray
    all_inside: bool
    max_abs_r: float
    assembled: np.ndarray
    ratio_re_im: float


def interior_weight_matrix(w):
    """Interior block of a weight matrix: boundary rows/columns removed."""
    w = np.asarray(w)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise DomainError("expected a square matrix, got shape %s" % (w.shape,))
    if w.shape[0] < 4:
        raise DomainError("need at least 4 nodes, got %d" % w.shape[0])
    return w[1:-1, 1:-1].copy()


def eigen_spectrum(m, verify=True):
    """Eigenvalues of a dense square matrix, with a residual spot-check.

    A sample of five eigenvalues is verified by a smallest-singular-value
    probe: sigma_min(M - lambda I) must not exceed 1e-7 * ||M||.  Raises
    ConvergenceFailure if the QR iteration fails or the probe rejects a
    value.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError("expected a square matrix, got shape %s" % (m.shape,))
    if m.shape[0] > MAX_EIGEN_SIZE:
        raise DomainError(
            "matrix size %d exceeds limit %d" % (m.shape[0], MAX_EIGEN_SIZE)
        )
    if not np.isfinite(m).all():
        raise DomainError("matrix has non-finite entries")
    try:
        lam = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure("eigenvalue iteration failed: %s" % exc)
    if verify:
        scale = float(np.linalg.norm(m, 2))
        if scale == 0.0:
            scale = 1.0
        n = len(lam)
        sample = sorted(set(int(round(k * (n - 1) / 4.0)) for k in range(5)))
        eye = np.eye(n)
        for idx in sample:
            shifted = m.astype(complex) - lam[idx] * eye
            smin = float(np.linalg.svd(shifted, compute_uv=False)[-1])
            if smin > PROBE_TOL * scale:
                raise ConvergenceFailure(
                    "eigenvalue %r failed the residual probe: "
                    "sigma_min=%.3e > %.3e" % (lam[idx], smin, PROBE_TOL * scale)
                )
    return lam


def operator_matrices(grid):
    """Interior first- and second-derivative blocks (A1, A2) for a grid."""
    w1 = first_order_weights(grid)
    w2 = second_order_weights(w1, grid)
    return interior_weight_matrix(w1), interior_weight_matrix(w2)


def _paired_lambdas(a1, a2):
    """Spectra of A1/A2, index-paired after sorting lambda1 by imaginary
    part and lambda2 by real part (with the other component breaking ties
    so the pairing is deterministic)."""
    lam1 = eigen_spectrum(a1)
    lam2 = eigen_spectrum(a2)
    lam1 = lam1[np.lexsort((lam1.real, lam1.imag))]
    lam2 = lam2[np.lexsort((lam2.imag, lam2.real))]
    return lam1, lam2


def analyze(grid, params, scheme=None):
    """Stability report for one grid and one set of frozen parameters.

    ``scheme`` is the amplification factor R(z) as a callable; defaults to
    the built-in five-stage scheme.
    """
    r_of_z = amplification if scheme is None else scheme
    a1, a2 = operator_matrices(grid)
    lam1, lam2 = _paired_lambdas(a1, a2)
    speed = params.tau0 + params.kappa0
    lam_b = 2.0 * params.nu * lam2 - speed * lam1
    z = lam_b * params.dt
    r = np.abs(r_of_z(z))
    max_abs_r = float(r.max())
    assembled = eigen_spectrum(-speed * a1 + 2.0 * params.nu * a2)
    im_max = float(np.abs(lam1.imag).max())
    re_max = float(np.abs(lam1.real).max())
    ratio = re_max / im_max if im_max > 0.0 else math.inf
    return StabilityReport(
        lambda1=lam1,
        lambda2=lam2,
        lambda_b=lam_b,
        z=z,
        all_inside=bool(max_abs_r <= 1.0 + MEMBERSHIP_TOL),
        max_abs_r=max_abs_r,
        assembled=assembled,
        ratio_re_im=ratio,
    )


def max_stable_dt(grid, nu, tau0, kappa0, scheme=None):
    """Largest dt in (0, 10] whose scaled spectrum stays inside the region.

    The spectra are computed once (z is linear in dt) and the boundary is
    located by bisection to relative width 1e-3.  Raises NoStableDt when
    even dt = 1e-9 falls outside.
    """
    r_of_z = amplification if scheme is None else scheme
    a1, a2 = operator_matrices(grid)
    lam1, lam2 = _paired_lambdas(a1, a2)
    lam_b = 2.0 * nu * lam2 - (tau0 + kappa0) * lam1

    def inside(dt):
        return float(np.abs(r_of_z(lam_b * dt)).max()) <= 1.0 + MEMBERSHIP_TOL

    lo = 1e-9
    if not inside(lo):
        raise NoStableDt(
            "spectrum escapes the stability region even at dt=1e-9"
        )
    hi = 10.0
    if inside(hi):
        return hi
    while (hi - lo) > 1e-3 * hi:
        mid = 0.5 * (lo + hi)
        if inside(mid):
            lo = mid
        else:
            hi = mid
    return lo


# Size cap for the assembled-2D validation path (interior nodes per axis).
MAX_KRONECKER_NODES = 12


def kronecker_spectrum_check(gridx, gridy, params):
    """Validation path: assemble the full 2D frozen operator and compare.

    The 2D operator nu (A2 (x) I + I (x) B2) - tau0 A1 (x) I - kappa0 I (x) B1
    is the Kronecker sum of C = nu A2 - tau0 A1 and D = nu B2 - kappa0 B1,
    so its spectrum equals the pairwise sums {c_i + d_j} exactly.  Returns
    (mismatch, full_spectrum, pair_sums) where mismatch is the largest
    distance from a computed 2D eigenvalue to the pairwise-sum set, scaled
    by the operator norm.  Only available on small grids.
    """
    if gridx.n > MAX_KRONECKER_NODES or gridy.n > MAX_KRONECKER_NODES:
        raise DomainError(
            "validation path limited to grids with <= %d nodes per side"
            % MAX_KRONECKER_NODES
        )
    a1, a2 = operator_matrices(gridx)
    b1, b2 = operator_matrices(gridy)
    c = params.nu * a2 - params.tau0 * a1
    d = params.nu * b2 - params.kappa0 * b1
    ix = np.eye(c.shape[0])
    iy = np.eye(d.shape[0])
    full = np.kron(c, iy) + np.kron(ix, d)
    spectrum = eigen_spectrum(full)
    pair_sums = (eigen_spectrum(c)[:, None] + eigen_spectrum(d)[None, :]).ravel()
    scale = float(np.linalg.norm(full, 2))
    if scale == 0.0:
        scale = 1.0
    mismatch = 0.0
    for lam in spectrum:
        mismatch = max(mismatch, float(np.abs(pair_sums - lam).min()))
    return mismatch / scale, spectrum, pair_sums
