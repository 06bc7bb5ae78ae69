"""
Two-level entropy in units of k_B.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from ..exceptions.base import DomainError

# Probabilities this far outside [0, 1] are clipped rather than rejected
CLAMP_WINDOW = 1e-9


def entropy(p2: ArrayLike) -> np.ndarray | float:
    """
    Entropy -[p ln p + (1 - p) ln(1 - p)] of the level occupation.

    The 0 ln 0 = 0 limit is taken by scipy's `entr`.

    Raises:
        DomainError: If p2 lies outside [0, 1] by more than CLAMP_WINDOW

    Examples:
        >>> round(entropy(0.5), 10)
        0.6931471806
        >>> entropy(1.0)
        0.0
    """
    p = np.asarray(p2, dtype=float)
    if np.any(~np.isfinite(p)) or np.any(p < -CLAMP_WINDOW) or np.any(p > 1.0 + CLAMP_WINDOW):
        raise DomainError(
            "p2",
            "<array>" if p.size > 8 else p2,
            f"must lie in [0, 1] within {CLAMP_WINDOW:g}",
            error_code="PROBABILITY_OUT_OF_RANGE",
        )

    p = np.clip(p, 0.0, 1.0)
    value = special.entr(p) + special.entr(1.0 - p)
    return float(value) if np.ndim(value) == 0 else value


def asymptotic_entropy(p: ArrayLike) -> np.ndarray | float:
    """Small-p form p (1 - ln p) of the entropy."""
    p = np.asarray(p, dtype=float)
    if np.any(p <= 0):
        raise DomainError("p", p, "must be > 0")
    value = p * (1.0 - np.log(p))
    return float(value) if np.ndim(value) == 0 else value
