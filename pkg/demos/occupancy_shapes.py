#!/usr/bin/env python3
"""How the inverse measurement model spreads an object over the five paths.

Prints the occupancy vector as the object slides laterally across the road,
for a sharp and a blurred combined uncertainty, and demonstrates that
integrating a path's occupancy over the object position recovers exactly
that path's width -- the property that makes the likelihood well calibrated.
"""

import numpy as np

from laneassign import (
    PATH_LABELS,
    GaussianScalar,
    extrapolate_boundaries,
    lane_occupancy,
)


def bar(p, width=24):
    return "#" * int(round(p * width))


def show_sweep(sigma):
    bounds = extrapolate_boundaries()
    print(f"combined sigma = {sigma} m, boundaries at -5.25/-1.75/+1.75/+5.25")
    print(f"{'offset':>8} " + " ".join(f"{f'p{k}':>6}" for k in range(5)))
    for mu in np.arange(-5.0, 5.5, 1.0):
        p = lane_occupancy(GaussianScalar(float(mu), sigma), bounds)
        row = " ".join(f"{p[k]:>6.3f}" for k in range(5))
        print(f"{mu:>8.1f} {row}   {bar(p[2])}")
    print("(the bar tracks the host-path mass p2)")
    print()


def show_host_path_profile():
    bounds = extrapolate_boundaries()
    print("host-path mass at lane center vs combined sigma")
    for sigma in (0.1, 0.3, 0.7, 1.2, 2.0):
        p = lane_occupancy(GaussianScalar(0.0, sigma), bounds)
        print(f"  sigma {sigma:>4} m -> p2 = {p[2]:.4f}  {bar(p[2], 40)}")
    print()


def show_width_recovery():
    bounds = extrapolate_boundaries()
    step = 0.02
    mus = np.arange(-40.0, 40.0, step)
    masses = np.array(
        [lane_occupancy(GaussianScalar(float(m), 0.7), bounds).probs for m in mus]
    )
    integrals = masses.sum(axis=0) * step
    print("integral of each path's occupancy over the object position")
    for k in range(5):
        label = PATH_LABELS[k]
        note = "unbounded region" if k in (0, 4) else "= path width"
        print(f"  path {k} ({label:<20}): {integrals[k]:8.3f} m  {note}")
    print("(the three bounded paths integrate to exactly their 3.5 m width,")
    print(" independent of the measurement noise level)")


def main():
    show_sweep(0.3)
    show_sweep(1.5)
    show_host_path_profile()
    show_width_recovery()


if __name__ == "__main__":
    main()
