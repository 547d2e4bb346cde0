"""Derivative matrices from spline collocation: accuracy and caveats.

Builds the first- and second-order weight matrices on a uniform grid and
measures how well they differentiate smooth samples.  Two things to notice:

* the first-derivative matrix is fourth-order accurate in the interior, and
* the rows next to the boundary are markedly less accurate, which caps the
  global order of the second-derivative matrix at one.  The effect hides on
  periodic-looking data (sin on a full period vanishes at the ends) but is
  plainly visible on exp.
"""

import math

import numpy as np

from burgers_dqm import Grid1D, first_order_weights, second_order_weights


def table(title, rows, header):
    print(f"\n{title}")
    print("  " + "  ".join(f"{h:>12}" for h in header))
    for row in rows:
        print("  " + "  ".join(f"{v:>12.3e}" if isinstance(v, float) else f"{v:>12}"
                               for v in row))


def main():
    print("first derivative of sin(x) on [-pi, pi]")
    rows = []
    prev = None
    for n in (20, 40, 80, 160):
        g = Grid1D(-math.pi, math.pi, n)
        w1 = first_order_weights(g)
        err = np.abs(w1 @ np.sin(g.x) - np.cos(g.x))[1:-1].max()
        order = math.log2(prev / err) if prev else float("nan")
        rows.append([n, err, order])
        prev = err
    table("interior max error and observed order", rows, ["N", "error", "order"])

    print("\nsame matrix applied to exp(x) on [0, 1]")
    rows = []
    prev = None
    for n in (20, 40, 80, 160):
        g = Grid1D(0.0, 1.0, n)
        w1 = first_order_weights(g)
        f = np.exp(g.x)
        e = np.abs(w1 @ f - f)
        order = math.log2(prev / e[1:-1].max()) if prev else float("nan")
        rows.append([n, e[1:-1].max(), e[6:-6].max(), order])
        prev = e[1:-1].max()
    table("near-boundary rows drag the order down to one",
          rows, ["N", "interior err", "deep err", "order"])

    print("\nsecond derivative of sin(x) on [-pi, pi] (product recursion)")
    rows = []
    prev = None
    for n in (41, 81, 161):
        g = Grid1D(-math.pi, math.pi, n)
        w2 = second_order_weights(first_order_weights(g), g)
        e = np.abs(w2 @ np.sin(g.x) + np.sin(g.x))
        order = math.log2(prev / e[1:-1].max()) if prev else float("nan")
        rows.append([n, e[1:-1].max(), e[8:-8].max(), order])
        prev = e[1:-1].max()
    table("boundary rows are O(h); eight nodes in the error collapses",
          rows, ["N", "interior err", "mid err", "order"])

    g = Grid1D(-math.pi, math.pi, 41)
    w2 = second_order_weights(first_order_weights(g), g)
    print(f"\nrow sums of the second-order matrix (exact-zero by construction):"
          f" max |sum| = {np.abs(w2.sum(axis=1)).max():.2e}")


if __name__ == "__main__":
    main()
