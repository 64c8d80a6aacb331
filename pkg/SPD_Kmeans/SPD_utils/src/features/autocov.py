# SPD_Kmeans/SPD_utils/src/features/autocov.py

"""
Finite-lag autocovariance matrices of time-series.

For a series ``x_1..x_T`` and lag ``ℓ`` the feature is the ``(ℓ+1)×(ℓ+1)``
symmetric Toeplitz matrix with entries ``γ̂(|i−j|)``, where

``γ̂(h) = (1/T) Σ_{t=1}^{T−h} (x_t − x̄)(x_{t+h} − x̄)``.

The biased ``1/T`` normalization makes the matrix positive semidefinite for
every series. A relative jitter ``jitter·γ̂(0)`` is then added to the diagonal
so the matrix passes the Cholesky check. A constant series has ``γ̂(0) = 0``
and no meaningful feature; it raises :class:`ConstantSeries` (or is reported
as invalid by :func:`autocov_batch`).
"""

from __future__ import annotations

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike

from SPD_Kmeans.SPD_utils.src.spd.errors import ConstantSeries, InvalidParameter, NonFiniteValues
from SPD_Kmeans.SPD_utils.src.spd.spd_matrix import SpdMatrix

DEFAULT_JITTER = 1e-10


def check_lag(lag: int, T: int) -> None:
    """
    Validate a lag against a series length.

    Raises
    ------
    InvalidParameter
        If ``lag`` is negative or ``T < lag + 2``.
    """
    if int(lag) != lag or lag < 0:
        raise InvalidParameter(f"lag must be a non-negative integer, got {lag}")
    if T < lag + 2:
        raise InvalidParameter(f"lag too large: lag={lag} needs at least {lag + 2} time steps, series has {T}")


def _gammas(series: np.ndarray, lag: int) -> np.ndarray:
    """Biased sample autocovariances ``γ̂(0..lag)`` of each row of an ``(N, T)`` array."""
    T = series.shape[1]
    centered = series - series.mean(axis=1, keepdims=True)
    out = np.empty((series.shape[0], lag + 1))
    for h in range(lag + 1):
        out[:, h] = np.einsum("ij,ij->i", centered[:, : T - h], centered[:, h:]) / T
    return out


def _as_series(series: ArrayLike) -> np.ndarray:
    x = np.asarray(series, dtype=np.float64)
    if x.ndim != 1:
        raise InvalidParameter(f"a time-series must be one-dimensional, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise NonFiniteValues("time-series contains NaN or infinite values")
    return x


def autocov_toeplitz(series: ArrayLike, lag: int) -> np.ndarray:
    """
    Biased autocovariance Toeplitz matrix, before jitter.

    Parameters
    ----------
    series : array-like
        Finite series of length ``T >= lag + 2``.
    lag : :class:`int`
        Largest lag ``ℓ``.

    Returns
    -------
    :class:`numpy.ndarray`
        ``(ℓ+1)×(ℓ+1)`` matrix ``M[i, j] = γ̂(|i−j|)``.

    Examples
    --------
    >>> autocov_toeplitz([0.0, 1.0, 0.0, 1.0], 1)
    array([[ 0.25  , -0.1875],
           [-0.1875,  0.25  ]])
    """
    x = _as_series(series)
    check_lag(lag, x.size)
    return scipy.linalg.toeplitz(_gammas(x[None, :], lag)[0])


def autocov_matrix(series: ArrayLike, lag: int, jitter: float = DEFAULT_JITTER) -> SpdMatrix:
    """
    Autocovariance feature of one series.

    Parameters
    ----------
    series : array-like
        Finite series of length ``T >= lag + 2``.
    lag : :class:`int`
        Largest lag ``ℓ``.
    jitter : :class:`float`, optional
        Non-negative diagonal regularization relative to ``γ̂(0)``.
        Defaults to ``1e-10``.

    Returns
    -------
    :class:`~SPD_Kmeans.SPD_utils.src.spd.spd_matrix.SpdMatrix`
        ``M + jitter·γ̂(0)·I``.

    Raises
    ------
    InvalidParameter
        If the lag is too large for the series or ``jitter`` is negative.
    ConstantSeries
        If the series has zero variance.
    """
    if not jitter >= 0.0:
        raise InvalidParameter(f"jitter must be non-negative, got {jitter}")
    x = _as_series(series)
    check_lag(lag, x.size)
    gammas = _gammas(x[None, :], lag)[0]
    if np.ptp(x) == 0.0 or gammas[0] == 0.0:
        raise ConstantSeries("series is constant; its autocovariance matrix is zero")
    M = scipy.linalg.toeplitz(gammas)
    M[np.diag_indices_from(M)] += jitter * gammas[0]
    return SpdMatrix(M)


def autocov_batch(series: ArrayLike, lag: int, jitter: float = DEFAULT_JITTER) -> tuple[np.ndarray, np.ndarray]:
    """
    Autocovariance features of many series at once.

    Parameters
    ----------
    series : array-like
        ``(N, T)`` finite array, one series per row.
    lag : :class:`int`
        Largest lag ``ℓ``.
    jitter : :class:`float`, optional
        Relative diagonal regularization.

    Returns
    -------
    matrices : :class:`numpy.ndarray`
        ``(N, ℓ+1, ℓ+1)`` stack, equal to :func:`autocov_matrix` row by row.
        Rows of constant series are NaN.
    valid : :class:`numpy.ndarray`
        Boolean ``(N,)`` array, ``False`` for constant series.
    """
    if not jitter >= 0.0:
        raise InvalidParameter(f"jitter must be non-negative, got {jitter}")
    X = np.asarray(series, dtype=np.float64)
    if X.ndim != 2:
        raise InvalidParameter(f"expected an (N, T) array of series, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise NonFiniteValues("series contain NaN or infinite values")
    check_lag(lag, X.shape[1])

    m = lag + 1
    if X.shape[0] == 0:
        return np.empty((0, m, m)), np.zeros(0, dtype=bool)

    gammas = _gammas(X, lag)
    valid = (np.ptp(X, axis=1) > 0.0) & (gammas[:, 0] > 0.0)

    idx = np.abs(np.subtract.outer(np.arange(m), np.arange(m)))
    mats = gammas[:, idx]
    mats[:, np.arange(m), np.arange(m)] += (jitter * gammas[:, 0])[:, None]
    mats[~valid] = np.nan
    return mats, valid
