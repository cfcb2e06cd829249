"""Discrete Bayes filter over the five path indices.

Prediction applies a column-stochastic transition matrix that is tridiagonal
in the path index: mass leaks to adjacent paths at rate epsilon, with an
asymmetry eta (positive = drift toward higher indices, i.e. leftward) driven
by the object's lateral velocity.  The update is the pointwise Bayes product
with the occupancy vector from the inverse measurement model.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .geometry import GaussianScalar, InputDomainError
from .likelihood import N_PATHS, BoundarySet, PathPosterior, lane_occupancy

logger = logging.getLogger(__name__)

EPSILON_MAX = 0.3


@dataclass(frozen=True)
class TransitionParams:
    """Leak rate epsilon and drift asymmetry eta of the transition matrix."""

    epsilon: float
    eta: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.epsilon) or not math.isfinite(self.eta):
            raise InputDomainError(
                f"transition parameters must be finite, got "
                f"epsilon={self.epsilon}, eta={self.eta}"
            )


def clamp_params(params: TransitionParams) -> tuple[TransitionParams, bool]:
    """Clamp (epsilon, eta) into the domain where all matrix entries are
    valid probabilities: epsilon in [0, 0.3], |eta| <= min(epsilon, 1 - 3 epsilon).

    Returns the clamped parameters and whether anything changed.
    """
    eps = min(max(params.epsilon, 0.0), EPSILON_MAX)
    cap = min(eps, 1.0 - 3.0 * eps)
    eta = min(max(params.eta, -cap), cap)
    clamped = TransitionParams(eps, eta)
    return clamped, clamped != params


@dataclass(frozen=True)
class TransitionMatrix:
    """Validated column-stochastic tridiagonal transition matrix."""

    entries: np.ndarray
    clamped: bool = False

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=float)
        if entries.shape != (N_PATHS, N_PATHS):
            raise InputDomainError(f"matrix must be 5x5, got {entries.shape}")
        if ((entries < -1e-12) | (entries > 1.0 + 1e-12)).any():
            raise InputDomainError("matrix entries must lie in [0, 1]")
        if np.abs(entries.sum(axis=0) - 1.0).max() > 1e-12:
            raise InputDomainError("matrix columns must each sum to 1")
        band = np.abs(np.subtract.outer(np.arange(N_PATHS), np.arange(N_PATHS))) <= 1
        if entries[~band].any():
            raise InputDomainError("matrix must be tridiagonal in the path index")
        object.__setattr__(self, "entries", entries)


def build_transition_matrix(params: TransitionParams) -> TransitionMatrix:
    """Build the transition matrix, clamping parameters into the valid domain.

    Column j holds the outgoing probabilities of path j.  Positive eta shifts
    leak mass toward higher indices; the interior columns lose 2*epsilon+|eta|
    to their neighbors.  Entry [3, 4] is epsilon - eta, the one corner where
    the drift term enters with a bare minus sign.
    """
    valid, clamped = clamp_params(params)
    eps, eta = valid.epsilon, valid.eta
    half = 0.5 * abs(eta)
    up = eps + half + eta  # toward higher index
    down = eps + half - eta  # toward lower index
    stay = 1.0 - 2.0 * eps - abs(eta)
    entries = np.array(
        [
            [1.0 - eps - eta, down, 0.0, 0.0, 0.0],
            [eps + eta, stay, down, 0.0, 0.0],
            [0.0, up, stay, down, 0.0],
            [0.0, 0.0, up, stay, eps - eta],
            [0.0, 0.0, 0.0, up, 1.0 - eps + eta],
        ]
    )
    return TransitionMatrix(entries, clamped=clamped)


def predict(prior: PathPosterior, matrix: TransitionMatrix) -> PathPosterior:
    return PathPosterior(matrix.entries @ prior.probs)


def _bayes_update(
    predicted: PathPosterior, measurement: PathPosterior
) -> tuple[PathPosterior, bool]:
    product = predicted.probs * measurement.probs
    total = float(product.sum())
    if total <= 0.0:
        # Prior and measurement have disjoint support; restart from the
        # measurement rather than producing an undefined posterior.
        logger.warning(
            "path posterior and measurement have zero overlap; "
            "resetting filter to the measurement"
        )
        return PathPosterior(measurement.probs / measurement.probs.sum()), True
    return PathPosterior(product / total), False


def update(predicted: PathPosterior, measurement: PathPosterior) -> PathPosterior:
    """Bayes update of the predicted posterior with an occupancy vector."""
    posterior, _ = _bayes_update(predicted, measurement)
    return posterior


def step(
    prior: PathPosterior,
    params: TransitionParams,
    obj: GaussianScalar,
    bounds: BoundarySet,
) -> PathPosterior:
    """One predict + update cycle for one object."""
    matrix = build_transition_matrix(params)
    return update(predict(prior, matrix), lane_occupancy(obj, bounds))


class DiscretePathFilter:
    """Stateful per-object wrapper around predict/update.

    The drift eta is recomputed every step as eta_gain * lateral_velocity
    plus a constant indicator term (e.g. from a turn signal), then clamped
    together with epsilon.
    """

    def __init__(
        self,
        epsilon: float,
        eta_gain: float = 0.05,
        indicator_eta: float = 0.0,
        initial: PathPosterior | None = None,
    ):
        self.epsilon = epsilon
        self.eta_gain = eta_gain
        self.indicator_eta = indicator_eta
        self.posterior = initial if initial is not None else PathPosterior.uniform()
        self.resets = 0

    def step(
        self,
        measurement: GaussianScalar,
        bounds: BoundarySet,
        lateral_velocity: float = 0.0,
    ) -> PathPosterior:
        params = TransitionParams(
            self.epsilon, self.eta_gain * lateral_velocity + self.indicator_eta
        )
        matrix = build_transition_matrix(params)
        predicted = predict(self.posterior, matrix)
        self.posterior, was_reset = _bayes_update(
            predicted, lane_occupancy(measurement, bounds)
        )
        if was_reset:
            self.resets += 1
        return self.posterior
