"""Five-stage, fourth-order strong-stability-preserving Runge-Kutta stepper.

Each stage is a convex combination of previous stages and forward-Euler
substeps, which is what gives the scheme its strong-stability property.
The eleven coefficients are kept at full published precision.
"""

import numpy as np

from .exceptions import ConfigError, NonFiniteState

# stage 1: u1 = u + B10 dt L(u)
B10 = 0.391752226571890
# stage 2: u2 = A20 u + A21 u1 + B21 dt L(u1)
A20 = 0.444370493651235
A21 = 0.555629506348765
B21 = 0.368410593050371
# stage 3: u3 = A30 u + A32 u2 + B32 dt L(u2)
A30 = 0.620101851488403
A32 = 0.379898148511597
B32 = 0.251891774271694
# stage 4: u4 = A40 u + A43 u3 + B43 dt L(u3)
A40 = 0.178079954393132
A43 = 0.821920045606868
B43 = 0.544974750228521
# final: u+ = C2 u2 + C3 u3 + D3 dt L(u3) + C4 u4 + D4 dt L(u4)
C2 = 0.517231671970585
C3 = 0.096059710526147
D3 = 0.063692468666290
C4 = 0.386708617503269
D4 = 0.226007483236906

COEFFICIENTS = (B10, A20, A21, B21, A30, A32, B32, A40, A43, B43, C2, C3, D3, C4, D4)

# effective stage abscissae (fraction of dt at which each L argument lives),
# derived from the combination weights; used when the caller asks for
# stage-time right-hand-side evaluation
_C1 = 0.0
_C2 = B10
_C3 = A21 * _C2 + B21
_C4 = A32 * _C3 + B32
_C5 = A43 * _C4 + B43
ABSCISSAE = (_C1, _C2, _C3, _C4, _C5)


def _check(u, t, stage):
    if not np.all(np.isfinite(u)):
        raise NonFiniteState(
            f"non-finite state after stage {stage} at t={t!r}", t=t, stage=stage
        )


def step(u, t, dt, rhs, stage_times=False):
    """Advance u from t to t + dt.

    rhs(u, t) returns du/dt.  With stage_times=False (default) every stage
    evaluates rhs at the base time t; with stage_times=True the effective
    stage abscissae are used instead.
    """
    u = np.asarray(u)
    ts = [t + c * dt for c in ABSCISSAE] if stage_times else [t] * 5

    u1 = u + (B10 * dt) * rhs(u, ts[0])
    _check(u1, t, 1)
    u2 = A20 * u + A21 * u1 + (B21 * dt) * rhs(u1, ts[1])
    _check(u2, t, 2)
    u3 = A30 * u + A32 * u2 + (B32 * dt) * rhs(u2, ts[2])
    _check(u3, t, 3)
    l3 = rhs(u3, ts[3])
    u4 = A40 * u + A43 * u3 + (B43 * dt) * l3
    _check(u4, t, 4)
    out = C2 * u2 + C3 * u3 + (D3 * dt) * l3 + C4 * u4 + (D4 * dt) * rhs(u4, ts[4])
    _check(out, t, 5)
    return out


def num_steps(t0, t_end, dt):
    """Step count for a fixed-dt integration; dt must divide the interval."""
    if dt <= 0.0:
        raise ConfigError(f"dt must be positive, got {dt!r}")
    if t_end < t0:
        raise ConfigError(f"t_end={t_end!r} precedes t0={t0!r}")
    steps = round((t_end - t0) / dt)
    if abs(t0 + steps * dt - t_end) > 1e-9 * dt:
        raise ConfigError(f"dt={dt!r} does not divide [{t0!r}, {t_end!r}]")
    return steps


def integrate(u0, t0, dt, t_end, rhs, observer=None, stage_times=False):
    """Repeatedly step from t0 to t_end; returns the final state.

    observer, if given, is called after every step with
    (step index, time, read-only state view).
    """
    steps = num_steps(t0, t_end, dt)
    u = np.array(u0, dtype=None, copy=True)
    for m in range(steps):
        u = step(u, t0 + m * dt, dt, rhs, stage_times=stage_times)
        if observer is not None:
            view = u.view()
            view.flags.writeable = False
            observer(m + 1, t0 + (m + 1) * dt, view)
    return u


def amplification(z):
    """Stability function R(z) of the scheme, elementwise over complex z.

    R is the degree-5 polynomial obtained by applying one step to u' = lambda*u
    with z = lambda*dt; the region of absolute stability is {z : |R(z)| <= 1}.
    """
    z = np.asarray(z, dtype=complex)
    one = np.ones_like(z)
    u1 = one + B10 * z
    u2 = A20 * one + A21 * u1 + B21 * z * u1
    u3 = A30 * one + A32 * u2 + B32 * z * u2
    u4 = A40 * one + A43 * u3 + B43 * z * u3
    r = C2 * u2 + C3 * u3 + D3 * z * u3 + C4 * u4 + D4 * z * u4
    if r.ndim == 0:
        return complex(r)
    return r
