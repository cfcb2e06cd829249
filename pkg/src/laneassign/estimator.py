"""Point assignment from a path posterior: median index with a probability gate.

The median is robust against posteriors with several similar peaks, where the
argmax flips between distant indices and the mean lands between them on an
index nobody believes in.  Mean and MAP extractors are provided for
diagnostics and comparison only; the pipeline assigns by the median.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import InputDomainError
from .likelihood import N_PATHS, PathPosterior

DEFAULT_P_MIN = 0.3


@dataclass(frozen=True)
class Assignment:
    """Result of thresholded assignment: accepted implies probability >= the
    gate.  index and probability are populated even when rejected, as
    diagnostics; consumers must treat rejected results as no assignment."""

    index: int
    probability: float
    accepted: bool


def median_index(posterior: PathPosterior) -> int:
    """Median path index: the first l with P(X <= l) >= 0.5 and P(X >= l) >= 0.5.

    Scanning from the lowest index makes the exact-0.5 tie resolve to the
    lower of the two qualifying indices, deterministically.
    """
    cumulative = np.cumsum(posterior.probs)
    for index in range(N_PATHS):
        mass_left = cumulative[index]
        mass_right = 1.0 - (cumulative[index - 1] if index > 0 else 0.0)
        if mass_left >= 0.5 and mass_right >= 0.5:
            return index
    raise RuntimeError("no median index; posterior violates its invariants")


def map_index(posterior: PathPosterior) -> int:
    """Diagnostic only: argmax index, lowest index on exact ties."""
    return int(np.argmax(posterior.probs))


def mean_index(posterior: PathPosterior) -> float:
    """Diagnostic only: posterior expectation of the index, not an integer."""
    return float(np.arange(N_PATHS) @ posterior.probs)


def assign(posterior: PathPosterior, p_min: float = DEFAULT_P_MIN) -> Assignment:
    """Assign the median index, accepted iff its posterior mass reaches p_min."""
    if not 0.0 <= p_min <= 1.0:
        raise InputDomainError(f"p_min must lie in [0, 1], got {p_min}")
    index = median_index(posterior)
    probability = posterior[index]
    return Assignment(index, probability, probability >= p_min)
