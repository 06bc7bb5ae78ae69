"""
Bessel function J0, its positive zeros and the decay envelope of its oscillations.
"""

from __future__ import annotations

import logging
import math
import threading

import numpy as np
from numpy.typing import ArrayLike
from scipy import optimize, special

from ..exceptions.base import DomainError

logger = logging.getLogger(__name__)

NEWTON_TOL = 1e-13
NEWTON_MAXITER = 50


def bessel_j0(x: ArrayLike) -> np.ndarray | float:
    """
    Bessel function of the first kind of order zero.

    Args:
        x: Real argument(s), finite

    Returns:
        J0(x), even in x

    Raises:
        DomainError: If any argument is NaN or infinite

    Examples:
        >>> bessel_j0(0.0)
        1.0
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("x", x, "must be finite", error_code="NONFINITE_ARGUMENT")
    return _unwrap(special.j0(arr))


def envelope_j0(tau: ArrayLike) -> np.ndarray | float:
    """
    Large-argument envelope sqrt(2 / (pi tau)) of |J0(tau)|.

    Raises:
        DomainError: If any tau is not strictly positive
    """
    arr = np.asarray(tau, dtype=float)
    if not np.all(arr > 0):
        raise DomainError("tau", tau, "must be > 0", error_code="NONPOSITIVE_ARGUMENT")
    return _unwrap(np.sqrt(2.0 / (np.pi * arr)))


class BesselZerosTable:
    """
    Lazily grown, thread-safe table of the positive zeros of J0.

    Each zero is found by Newton iteration on J0 (derivative -J1) seeded at
    the asymptotic location (j - 1/4) pi. Readers get immutable snapshots, so
    only growth takes the lock.

    Examples:
        >>> table = BesselZerosTable()
        >>> round(table.zero(1), 12)
        2.404825557696
    """

    def __init__(self, block: int = 32):
        """
        Initialize an empty table.

        Args:
            block: Minimum number of zeros added per extension
        """
        self._block = block
        self._lock = threading.Lock()
        self._zeros = np.empty(0)
        self._zeros.flags.writeable = False

    def __len__(self) -> int:
        return int(self._zeros.size)

    @property
    def zeros(self) -> np.ndarray:
        """Snapshot of every zero computed so far."""
        return self._zeros

    def zero(self, j: int) -> float:
        """
        Return the j-th positive zero (1-based).

        Raises:
            DomainError: If j < 1
        """
        if j < 1 or int(j) != j:
            raise DomainError("j", j, "must be a positive integer")
        return float(self.first(int(j))[-1])

    def first(self, count: int) -> np.ndarray:
        """Return the first `count` zeros."""
        if self._zeros.size < count:
            self._grow(lambda zeros: zeros.size >= count)
        return self._zeros[:count]

    def covering(self, x: float) -> np.ndarray:
        """
        Return every zero <= x, growing the table so that the next zero is known.

        Raises:
            DomainError: If x is not finite
        """
        if not math.isfinite(x):
            raise DomainError("x", x, "must be finite")
        if self._zeros.size == 0 or self._zeros[-1] <= x:
            self._grow(lambda zeros: zeros.size > 0 and zeros[-1] > x)
        zeros = self._zeros
        return zeros[: int(np.searchsorted(zeros, x, side="right"))]

    def _grow(self, done) -> None:
        with self._lock:
            zeros = list(self._zeros)
            while not done(np.asarray(zeros)):
                start = len(zeros) + 1
                zeros.extend(_newton_zero(j) for j in range(start, start + self._block))
            if len(zeros) != self._zeros.size:
                logger.debug("J0 zero table grown to %d entries", len(zeros))
                snapshot = np.asarray(zeros, dtype=float)
                snapshot.flags.writeable = False
                self._zeros = snapshot


def _newton_zero(j: int) -> float:
    guess = (j - 0.25) * math.pi
    return float(
        optimize.newton(
            special.j0,
            guess,
            fprime=lambda x: -special.j1(x),
            tol=NEWTON_TOL,
            maxiter=NEWTON_MAXITER,
        )
    )


_DEFAULT_TABLE = BesselZerosTable()


def default_zeros_table() -> BesselZerosTable:
    """The process-wide zeros table."""
    return _DEFAULT_TABLE


def j0_zero(j: int) -> float:
    """
    The j-th positive zero gamma_{0,j} of J0.

    Raises:
        DomainError: If j < 1

    Examples:
        >>> round(j0_zero(2), 12)
        5.520078110286
    """
    return _DEFAULT_TABLE.zero(j)


def _unwrap(value: np.ndarray) -> np.ndarray | float:
    return float(value) if np.ndim(value) == 0 else value
