"""Inverse measurement model: lateral offset belief -> path occupancy vector.

Five path regions are separated by four lateral boundaries.  Indices follow
the offset sign convention (positive = left), so index 0 is rightmost, 2 is
the host path and 4 is leftmost.  Both the object offset and the boundary
positions carry Gaussian uncertainty; the occupancy probability of a region is
the probability that the offset falls between its two boundaries, with each
boundary blurred by the combined standard deviation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import ndtr

from .geometry import GaussianScalar, InputDomainError

N_PATHS = 5
N_BOUNDARIES = 4
HOST_PATH_INDEX = 2
PATH_LABELS = (
    "right of right path",
    "right path",
    "host path",
    "left path",
    "left of left path",
)


class BoundarySource(Enum):
    MEASURED = "measured"
    EXTRAPOLATED = "extrapolated"
    DEFAULT = "default"


@dataclass(frozen=True)
class BoundarySet:
    """Four lateral boundaries with Gaussian uncertainty, strictly increasing.

    boundaries[0] and boundaries[3] are the outer edges, boundaries[1] and
    boundaries[2] enclose the host path.
    """

    boundaries: tuple[GaussianScalar, GaussianScalar, GaussianScalar, GaussianScalar]
    source: BoundarySource = BoundarySource.MEASURED

    def __post_init__(self) -> None:
        if len(self.boundaries) != N_BOUNDARIES:
            raise InputDomainError(
                f"expected {N_BOUNDARIES} boundaries, got {len(self.boundaries)}"
            )
        means = [b.mean for b in self.boundaries]
        if any(hi <= lo for lo, hi in zip(means, means[1:])):
            raise InputDomainError(
                f"boundary means must be strictly increasing, got {means}"
            )


@dataclass(frozen=True)
class PathPosterior:
    """Probability vector over the five path indices."""

    probs: np.ndarray

    def __post_init__(self) -> None:
        probs = np.asarray(self.probs, dtype=float)
        if probs.shape != (N_PATHS,):
            raise InputDomainError(f"posterior must have shape (5,), got {probs.shape}")
        if not np.all(np.isfinite(probs)) or (probs < 0.0).any():
            raise InputDomainError("posterior entries must be finite and >= 0")
        if abs(float(probs.sum()) - 1.0) > 1e-9:
            raise InputDomainError(f"posterior must sum to 1, got {probs.sum()}")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def uniform(cls) -> "PathPosterior":
        return cls(np.full(N_PATHS, 1.0 / N_PATHS))

    def __getitem__(self, index: int) -> float:
        return float(self.probs[index])


def std_normal_cdf(t: float) -> float:
    """Standard normal CDF; accepts +/-inf, rejects NaN."""
    if math.isnan(t):
        raise InputDomainError("standardized argument is NaN")
    return float(ndtr(t))


def _standardized(delta: float, sigma: float) -> float:
    # Degenerate sigma = 0 uses the limit convention: 0/0 -> 0 (so the CDF
    # gives 0.5, splitting mass across the boundary), x/0 -> signed infinity.
    if sigma > 0.0:
        return delta / sigma
    if delta == 0.0:
        return 0.0
    return math.inf if delta > 0.0 else -math.inf


@dataclass
class OccupancyDiagnostics:
    """Counters filled in by lane_occupancy when passed in."""

    negative_mass_clamps: int = 0


def lane_occupancy(
    obj: GaussianScalar,
    bounds: BoundarySet,
    diagnostics: OccupancyDiagnostics | None = None,
) -> PathPosterior:
    """Occupancy probabilities of the five path regions for one object.

    The probability of region l is Phi(t_{l+1}) - Phi(t_l) where t_l
    standardizes boundary l against the object, using the combined deviation
    sqrt(obj.std^2 + boundary.std^2), and the outermost virtual boundaries sit
    at -inf and +inf.  With heterogeneous boundary deviations a difference can
    come out slightly negative; such mass is clamped to zero and the vector
    renormalized.
    """
    cdf_values = [
        std_normal_cdf(
            _standardized(b.mean - obj.mean, math.hypot(obj.std, b.std))
        )
        for b in bounds.boundaries
    ]
    raw = np.diff(np.concatenate(([0.0], cdf_values, [1.0])))
    negative = raw < 0.0
    if negative.any():
        if diagnostics is not None:
            diagnostics.negative_mass_clamps += int(negative.sum())
        raw = np.where(negative, 0.0, raw)
    return PathPosterior(raw / raw.sum())


def extrapolate_boundaries(
    inner: tuple[GaussianScalar, GaussianScalar] | None = None,
    default_width: float = 3.5,
    default_center_halfwidth: float = 1.75,
    default_std: float = 0.3,
    std_inflation: float = 1.5,
) -> BoundarySet:
    """Build a full boundary set from the inner pair, or from defaults.

    Args:
        inner: Measured (right, left) host-path boundaries.  When None, the
            host path is centered with half width default_center_halfwidth and
            deviation default_std, and the outer paths are default_width wide.
        default_width: Outer path width used when inner is None.
        std_inflation: Factor applied to the inner deviations for the
            synthesized outer boundaries (they are less certain).

    The outer boundaries are placed one inner-width outward from the inner
    pair, so all three path regions share the measured width.
    """
    if inner is None:
        right = GaussianScalar(-default_center_halfwidth, default_std)
        left = GaussianScalar(default_center_halfwidth, default_std)
        width = default_width
        source = BoundarySource.DEFAULT
    else:
        right, left = inner
        width = left.mean - right.mean
        if width <= 0.0:
            raise InputDomainError(
                f"inner boundaries must be ordered right < left, got "
                f"{right.mean} >= {left.mean}"
            )
        source = BoundarySource.EXTRAPOLATED
    outer_right = GaussianScalar(right.mean - width, right.std * std_inflation)
    outer_left = GaussianScalar(left.mean + width, left.std * std_inflation)
    return BoundarySet((outer_right, right, left, outer_left), source)
