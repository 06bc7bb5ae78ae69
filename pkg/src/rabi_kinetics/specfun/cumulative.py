"""
Cumulative integral of J0 for rabi-kinetics.

C(x) = integral of J0 over [0, x] = x * 1F2(1/2; 1, 3/2; -x^2/4). The power
series is used up to SERIES_LIMIT; beyond it the series cancels
catastrophically, so C is assembled from C(SERIES_LIMIT) plus Gauss-Legendre
panels laid between consecutive zeros of J0, on each of which J0 keeps
one sign.
"""

from __future__ import annotations

import logging
import threading

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from ..exceptions.base import DomainError
from .bessel import BesselZerosTable, default_zeros_table

logger = logging.getLogger(__name__)

SERIES_LIMIT = 12.0
SERIES_MAX_TERMS = 80
PANEL_NODES = 24

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(PANEL_NODES)


def _series(x: np.ndarray) -> np.ndarray:
    # term_k = (-1)^k (x/2)^(2k) x / ((k!)^2 (2k+1))
    term = x.copy()
    total = x.copy()
    quarter_square = 0.25 * x * x
    for k in range(1, SERIES_MAX_TERMS):
        term = term * (-quarter_square / (k * k)) * ((2 * k - 1) / (2 * k + 1))
        total += term
        if np.all(np.abs(term) < 1e-17):
            break
    return total


def _panel(lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """Gauss-Legendre integral of J0 over [lower, upper], elementwise."""
    half = 0.5 * (upper - lower)
    mid = 0.5 * (upper + lower)
    nodes = mid[..., None] + half[..., None] * _GL_NODES
    return half * (special.j0(nodes) @ _GL_WEIGHTS)


class CumulativeJ0Table:
    """
    C and the integral of |J0| tabulated at the zeros of J0.

    Entry j holds C(gamma_j) and F(gamma_j) = integral of |J0| over
    [0, gamma_j]. The table is rebuilt under a lock whenever a caller needs
    zeros beyond the ones already tabulated.
    """

    def __init__(self, zeros: BesselZerosTable | None = None):
        """
        Initialize the table over a zeros table.

        Args:
            zeros: Zeros source; the process-wide table when None
        """
        self._zeros_table = zeros or default_zeros_table()
        self._lock = threading.Lock()
        # (zeros, C at zeros, F at zeros), always replaced as one tuple
        self._anchors: tuple[np.ndarray, np.ndarray, np.ndarray] = (np.empty(0), np.empty(0), np.empty(0))
        self._c_limit = float(_series(np.array([SERIES_LIMIT]))[0])

    @property
    def c_at_series_limit(self) -> float:
        """C(SERIES_LIMIT) from the power series."""
        return self._c_limit

    def anchors(self, x_max: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Return (zeros, C at zeros, F at zeros), covering at least one zero past x_max.
        """
        anchors = self._anchors
        zeros = anchors[0]
        if zeros.size == 0 or zeros[-1] <= x_max:
            count = self._zeros_table.covering(x_max).size + 1
            anchors = self._rebuild(count)
        return anchors

    def _rebuild(self, count: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        with self._lock:
            if self._anchors[0].size < count:
                zeros = np.array(self._zeros_table.first(count))
                c_values = np.empty_like(zeros)

                small = zeros <= SERIES_LIMIT
                c_values[small] = _series(zeros[small])

                large = zeros[~small]
                if large.size:
                    lower = np.concatenate(([SERIES_LIMIT], large[:-1]))
                    c_values[~small] = self._c_limit + np.cumsum(_panel(lower, large))

                abs_values = np.cumsum(np.abs(np.diff(c_values, prepend=0.0)))

                for array in (zeros, c_values, abs_values):
                    array.flags.writeable = False
                self._anchors = (zeros, c_values, abs_values)
                logger.debug("Cumulative J0 anchors rebuilt over %d zeros", count)

            return self._anchors

    def cumulative(self, x: np.ndarray) -> np.ndarray:
        """C(x) for a validated, nonnegative array."""
        shape = x.shape
        x = x.ravel()
        out = np.empty_like(x)
        small = x <= SERIES_LIMIT
        out[small] = _series(x[small])

        if np.any(~small):
            far = x[~small]
            zeros, c_values, _ = self.anchors(float(far.max()))
            beyond = zeros > SERIES_LIMIT
            starts = np.concatenate(([SERIES_LIMIT], zeros[beyond]))
            values = np.concatenate(([self._c_limit], c_values[beyond]))
            index = np.searchsorted(starts, far, side="right") - 1
            out[~small] = values[index] + _panel(starts[index], far)

        return out.reshape(shape)

    def abs_integral(self, x: np.ndarray) -> np.ndarray:
        """Integral of |J0| over [0, x] for a validated, nonnegative array."""
        shape = x.shape
        x = x.ravel()
        if x.size == 0:
            return np.empty(shape)

        zeros, c_values, abs_values = self.anchors(float(x.max()))
        passed = np.searchsorted(zeros, x, side="right")
        c_here = self.cumulative(x)

        last = np.maximum(passed - 1, 0)
        base = np.where(passed > 0, abs_values[last], 0.0)
        c_last = np.where(passed > 0, c_values[last], 0.0)
        return (base + np.abs(c_here - c_last)).reshape(shape)


_DEFAULT_TABLE = CumulativeJ0Table()


def cumulative_table() -> CumulativeJ0Table:
    """The process-wide cumulative table."""
    return _DEFAULT_TABLE


def cumulative_j0(x: ArrayLike) -> np.ndarray | float:
    """
    C(x), the integral of J0 over [0, x].

    Args:
        x: Nonnegative upper limit(s)

    Returns:
        C(x) = x * 1F2(1/2; 1, 3/2; -x^2/4), tending to 1 for large x

    Raises:
        DomainError: If any x is negative or not finite

    Examples:
        >>> cumulative_j0(0.0)
        0.0
        >>> round(cumulative_j0(1000.0), 1)
        1.0
    """
    arr = _checked(x, "x")
    return _unwrap(_DEFAULT_TABLE.cumulative(arr))


def hyp1f2_probability_kernel(tau: ArrayLike) -> np.ndarray | float:
    """
    (tau/2) 1F2(1/2; 1, 3/2; -tau^2/4), which equals C(tau)/2.

    Raises:
        DomainError: If any tau is negative
    """
    arr = _checked(tau, "tau")
    return _unwrap(0.5 * _DEFAULT_TABLE.cumulative(arr))


def _checked(values: ArrayLike, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(name, values, "must be finite", error_code="NONFINITE_ARGUMENT")
    if np.any(arr < 0):
        raise DomainError(name, values, "must be >= 0", error_code="NEGATIVE_ARGUMENT")
    return arr


def _unwrap(value: np.ndarray) -> np.ndarray | float:
    return float(value) if np.ndim(value) == 0 else value
