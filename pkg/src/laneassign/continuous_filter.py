"""Scalar Kalman filter on the lateral path offset.

State is the offset itself; the motion model is a controlled random walk
(offset rate u as control input, white acceleration-like noise sigma_nu).
The filtered Gaussian is discretized into the five-path occupancy vector with
the same inverse measurement model the discrete filter uses, so both filters
produce comparable posteriors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import GaussianScalar, InputDomainError
from .likelihood import BoundarySet, PathPosterior, lane_occupancy


@dataclass(frozen=True)
class ProcessNoise:
    """White process noise on the offset rate, in m/s.  Strictly positive:
    a zero here would let the filter collapse to false certainty."""

    sigma_nu: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.sigma_nu) or self.sigma_nu <= 0.0:
            raise InputDomainError(
                f"sigma_nu must be finite and > 0, got {self.sigma_nu}"
            )


@dataclass(frozen=True)
class KalmanState:
    mean: float
    variance: float
    timestamp: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.mean) or not math.isfinite(self.timestamp):
            raise InputDomainError("state mean and timestamp must be finite")
        if not math.isfinite(self.variance) or self.variance < 0.0:
            raise InputDomainError(
                f"state variance must be finite and >= 0, got {self.variance}"
            )


def kf_init(z: GaussianScalar, timestamp: float) -> KalmanState:
    """Initialize the state from the first measurement."""
    return KalmanState(z.mean, z.variance, timestamp)


def kf_predict(
    state: KalmanState, u: float, dt: float, noise: ProcessNoise
) -> KalmanState:
    """Propagate by dt seconds with offset rate u."""
    if dt <= 0.0 or not math.isfinite(dt):
        raise InputDomainError(f"dt must be positive, got {dt}")
    return KalmanState(
        state.mean + dt * u,
        state.variance + (dt * noise.sigma_nu) ** 2,
        state.timestamp + dt,
    )


def kf_update(state: KalmanState, z: GaussianScalar) -> KalmanState:
    """Fuse a measurement; the timestamp is unchanged."""
    r = z.variance
    if state.variance == 0.0 and r == 0.0:
        # Both sides claim certainty; only exact agreement is consistent.
        if z.mean != state.mean:
            raise InputDomainError(
                f"certain state {state.mean} contradicts certain measurement {z.mean}"
            )
        return state
    gain = state.variance / (state.variance + r)
    return KalmanState(
        state.mean + gain * (z.mean - state.mean),
        (1.0 - gain) * state.variance,
        state.timestamp,
    )


def discretize_posterior(state: KalmanState, bounds: BoundarySet) -> PathPosterior:
    """Map the filtered Gaussian onto the five-path occupancy vector."""
    return lane_occupancy(GaussianScalar(state.mean, math.sqrt(state.variance)), bounds)


class ContinuousPathFilter:
    """Stateful per-object filter: init on first measurement, then
    predict/update per step with strictly increasing timestamps."""

    def __init__(self, sigma_nu: float):
        self.noise = ProcessNoise(sigma_nu)
        self.state: KalmanState | None = None

    def step(
        self,
        measurement: GaussianScalar,
        bounds: BoundarySet,
        timestamp: float,
        lateral_velocity: float = 0.0,
    ) -> PathPosterior:
        if self.state is None:
            self.state = kf_init(measurement, timestamp)
        else:
            dt = timestamp - self.state.timestamp
            if dt <= 0.0:
                raise InputDomainError(
                    f"timestamps must be strictly increasing, got "
                    f"{timestamp} after {self.state.timestamp}"
                )
            predicted = kf_predict(self.state, lateral_velocity, dt, self.noise)
            self.state = kf_update(predicted, measurement)
        return discretize_posterior(self.state, bounds)
