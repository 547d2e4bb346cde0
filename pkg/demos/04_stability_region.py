"""Frozen-coefficient stability analysis of the semi-discrete system.

Freezes the convection speeds, builds the interior derivative matrices,
and asks whether dt * spectrum fits inside the stability region of the
five-stage scheme.  Also finds the largest stable step by bisection and
verifies the 2D spectrum is the Kronecker pairwise-sum of 1D spectra.
"""

import math

import numpy as np

from burgers_dqm import (
    FrozenParams,
    Grid1D,
    analyze,
    kronecker_spectrum_check,
    max_stable_dt,
)


def main():
    g = Grid1D(-math.pi, math.pi, 11)
    params = dict(tau0=1.0, kappa0=1.0, nu=1.0)

    print("verdict sweep at N = 11 (tau0 = kappa0 = nu = 1)")
    for dt in (1e-4, 1e-3, 1e-2, 1e-1, 0.5):
        rep = analyze(g, FrozenParams(dt=dt, **params))
        print(f"  dt = {dt:<7g} all_inside = {str(rep.all_inside):<5} "
              f"max|R(z)| = {rep.max_abs_r:.6f}")

    rep = analyze(g, FrozenParams(dt=1e-3, **params))
    print(f"\nfirst-derivative spectrum is essentially imaginary: "
          f"max|Re|/max|Im| = {rep.ratio_re_im:.2e}")
    print(f"second-derivative spectrum stays in the left half-plane: "
          f"max Re = {rep.lambda2.real.max():.4f}")

    dt_max = max_stable_dt(g, **params)
    print(f"\nlargest stable step by bisection: dt_max = {dt_max:.5f}")
    for n in (21, 31):
        dtn = max_stable_dt(Grid1D(-math.pi, math.pi, n), **params)
        print(f"  N = {n}: dt_max = {dtn:.5f}  (diffusion-limited ~ h^2)")

    gx = Grid1D(0.0, 1.0, 8)
    gy = Grid1D(0.0, 1.0, 7)
    mismatch, spectrum, _ = kronecker_spectrum_check(
        gx, gy, FrozenParams(dt=1e-3, tau0=0.7, kappa0=0.4, nu=0.05))
    print(f"\n2D operator spectrum vs pairwise 1D sums "
          f"({len(spectrum)} eigenvalues): relative mismatch = {mismatch:.2e}")


if __name__ == "__main__":
    main()
