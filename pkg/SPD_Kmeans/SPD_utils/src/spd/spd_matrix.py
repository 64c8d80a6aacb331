# SPD_Kmeans/SPD_utils/src/spd/spd_matrix.py

"""
This module defines the value types of the log-Cholesky geometry: the
:class:`SpdMatrix` being clustered, its :class:`CholFactor`, and the
:class:`EmbeddedPoint` that k-means actually runs on.

All three types validate their invariants on construction and then expose
read-only ``float64`` arrays, so instances can be shared freely between
threads. Arrays passed in are copied; the stored arrays are flagged as
non-writeable.

:class:`SpdMatrix` factorizes itself once during validation and keeps the
lower Cholesky factor, so the geometry functions in
:mod:`~SPD_Kmeans.SPD_utils.src.spd.geometry` never pay for a second
factorization of the same matrix.

**Classes**

- :class:`SpdMatrix`: dense symmetric positive definite matrix.
- :class:`CholFactor`: lower triangular matrix with strictly positive diagonal.
- :class:`EmbeddedPoint`: log-Cholesky coordinates of an SPD matrix.

Example usage
--------------
.. code-block:: python

   S = SpdMatrix([[4.0, 2.0], [2.0, 5.0]])
   S.dim           # 2
   S.factor        # array([[2., 0.], [1., 2.]])
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike

from SPD_Kmeans.SPD_utils.src.spd.errors import (
    DimensionMismatch,
    NonFiniteValues,
    NotPositiveDefinite,
    NotSymmetric,
)

# Largest asymmetry absorbed as round-off, relative to max|S|.
SYMMETRY_RTOL = 1e-8


def embedding_dim(m: int) -> int:
    """
    Return the length ``m(m+1)/2`` of the log-Cholesky coordinates of an m×m matrix.

    Parameters
    ----------
    m : :class:`int`
        Matrix dimension.

    Returns
    -------
    :class:`int`
        Number of embedded coordinates.
    """
    return m * (m + 1) // 2


def matrix_dim_from_embedding(d: int) -> int:
    """
    Invert :func:`embedding_dim`.

    Parameters
    ----------
    d : :class:`int`
        Number of embedded coordinates.

    Returns
    -------
    :class:`int`
        The matrix dimension ``m`` with ``m(m+1)/2 == d``.

    Raises
    ------
    DimensionMismatch
        If ``d`` is not a positive triangular number.
    """
    m = int((np.sqrt(8 * d + 1) - 1) // 2)
    # isqrt rounding guard for large d
    while embedding_dim(m) < d:
        m += 1
    if d < 1 or embedding_dim(m) != d:
        raise DimensionMismatch(f"{d} coordinates is not a triangular number m(m+1)/2")
    return m


@lru_cache(maxsize=64)
def strict_lower_indices(m: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Row and column indices of the strict lower triangle in column-major order.

    The order is column by column, top to bottom within each column, which is
    the fixed layout of the first ``m(m-1)/2`` embedded coordinates.

    Parameters
    ----------
    m : :class:`int`
        Matrix dimension.

    Returns
    -------
    :class:`tuple` of :class:`numpy.ndarray`
        ``(rows, cols)`` such that ``L[rows, cols]`` lists the strict lower
        entries of ``L`` in column-major order.
    """
    # triu of the transpose, read row-major, is tril read column-major
    cols, rows = np.triu_indices(m, k=1)
    rows.setflags(write=False)
    cols.setflags(write=False)
    return rows, cols


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _as_square(entries: ArrayLike, what: str) -> np.ndarray:
    arr = np.array(entries, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise DimensionMismatch(f"{what} must be a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValues(f"{what} contains NaN or infinite entries")
    return arr


def symmetrize(entries: ArrayLike, what: str = "matrix") -> np.ndarray:
    """
    Return ``(S + Sᵀ)/2`` after checking that ``S`` is symmetric up to round-off.

    Parameters
    ----------
    entries : array-like
        Square matrix.
    what : :class:`str`, optional
        Name used in error messages.

    Returns
    -------
    :class:`numpy.ndarray`
        Exactly symmetric ``float64`` copy.

    Raises
    ------
    NotSymmetric
        If ``max|S - Sᵀ| > 1e-8 · max|S|``.
    """
    arr = _as_square(entries, what)
    scale = float(np.max(np.abs(arr)))
    asym = float(np.max(np.abs(arr - arr.T)))
    if asym > SYMMETRY_RTOL * scale:
        raise NotSymmetric(f"{what} is not symmetric: max|S - S^T| = {asym:.3e}, max|S| = {scale:.3e}")
    return (arr + arr.T) / 2.0


def checked_cholesky(arr: np.ndarray) -> np.ndarray:
    """
    Lower Cholesky factor of a symmetric array with a relative pivot test.

    Parameters
    ----------
    arr : :class:`numpy.ndarray`
        Symmetric ``float64`` matrix.

    Returns
    -------
    :class:`numpy.ndarray`
        Lower triangular factor ``L`` with ``L Lᵀ = arr``.

    Raises
    ------
    NotPositiveDefinite
        If LAPACK rejects the matrix, or if any pivot ``L[i, i]**2`` does not
        exceed ``dim · eps · max|arr|``.
    """
    try:
        L = scipy.linalg.cholesky(arr, lower=True, check_finite=False)
    except scipy.linalg.LinAlgError as exc:
        raise NotPositiveDefinite(f"Cholesky factorization failed: {exc}") from exc

    check_pivots(arr, L)
    return L


def check_pivots(arr: np.ndarray, L: np.ndarray) -> None:
    """
    Relative pivot test shared by factorization and reconstruction.

    Every pivot ``L[i, i]**2`` must exceed ``dim · eps · max|arr|``, and
    ``arr`` must be finite.

    Raises
    ------
    NonFiniteValues
        If ``arr`` overflowed.
    NotPositiveDefinite
        If a pivot is at or below the tolerance.
    """
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValues("SPD matrix entries overflow float64")
    m = arr.shape[0]
    pivots = np.diag(L) ** 2
    tol = m * np.finfo(np.float64).eps * float(np.max(np.abs(arr)))
    bad = np.flatnonzero(~(pivots > tol))
    if bad.size:
        raise NotPositiveDefinite(
            f"pivot {int(bad[0])} is {pivots[bad[0]]:.3e}, not above the tolerance {tol:.3e}"
        )


class SpdMatrix:
    """
    Dense symmetric positive definite matrix.

    Construction symmetrizes the input as ``(S + Sᵀ)/2`` when its asymmetry is
    within round-off (``1e-8 · max|S|``), rejects it otherwise, and verifies
    positive definiteness through a Cholesky factorization with a relative
    pivot tolerance. The factor is cached in :attr:`factor`.

    Parameters
    ----------
    entries : array-like
        Square matrix. A scalar is read as a 1×1 matrix.

    Raises
    ------
    DimensionMismatch
        If ``entries`` is not a non-empty square matrix.
    NonFiniteValues
        If ``entries`` contains NaN or infinities.
    NotSymmetric
        If ``entries`` is genuinely asymmetric.
    NotPositiveDefinite
        If ``entries`` is not numerically positive definite.
    """

    __slots__ = ("_entries", "_factor")

    def __init__(self, entries: ArrayLike) -> None:
        arr = symmetrize(entries, "SPD matrix")
        self._factor = _readonly(checked_cholesky(arr))
        self._entries = _readonly(arr)

    @classmethod
    def from_array(cls, entries: ArrayLike) -> "SpdMatrix":
        """Validate ``entries`` and wrap them; same as calling the constructor."""
        return cls(entries)

    @classmethod
    def _from_factor(cls, entries: np.ndarray, factor: np.ndarray) -> "SpdMatrix":
        """Build from an exactly symmetric product ``L Lᵀ`` and its known factor ``L``.

        The product goes through the same pivot test as :meth:`from_array`.
        """
        check_pivots(entries, factor)
        obj = cls.__new__(cls)
        obj._entries = _readonly(np.array(entries, dtype=np.float64))
        obj._factor = _readonly(np.array(factor, dtype=np.float64))
        return obj

    @property
    def dim(self) -> int:
        """:class:`int`: matrix dimension ``m``."""
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """:class:`numpy.ndarray`: read-only ``m×m`` array."""
        return self._entries

    @property
    def factor(self) -> np.ndarray:
        """:class:`numpy.ndarray`: read-only lower Cholesky factor."""
        return self._factor

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._entries.copy() if copy else self._entries
        return self._entries.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpdMatrix):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self._entries, other._entries))

    __hash__ = None

    def __repr__(self) -> str:
        return f"SpdMatrix(dim={self.dim}, entries={self._entries.tolist()!r})"


class CholFactor:
    """
    Lower triangular matrix with strictly positive diagonal.

    This is the image of an :class:`SpdMatrix` under the Cholesky map. The
    strict lower part and the diagonal are available as derived views
    (:attr:`strict_lower`, :attr:`diagonal`); only the full matrix is stored.

    Parameters
    ----------
    entries : array-like
        Square lower triangular matrix.

    Raises
    ------
    DimensionMismatch
        If ``entries`` is not square, or has non-zero entries above the
        diagonal.
    NonFiniteValues
        If ``entries`` contains NaN or infinities.
    NotPositiveDefinite
        If a diagonal entry is not strictly positive.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: ArrayLike) -> None:
        arr = _as_square(entries, "Cholesky factor")
        if np.any(np.triu(arr, k=1) != 0.0):
            raise DimensionMismatch("Cholesky factor must be lower triangular")
        if not np.all(np.diag(arr) > 0.0):
            raise NotPositiveDefinite("Cholesky factor must have a strictly positive diagonal")
        self._entries = _readonly(arr)

    @property
    def dim(self) -> int:
        """:class:`int`: matrix dimension ``m``."""
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """:class:`numpy.ndarray`: read-only lower triangular array."""
        return self._entries

    @property
    def strict_lower(self) -> np.ndarray:
        """:class:`numpy.ndarray`: the strictly lower triangular part ⌊L⌋."""
        return np.tril(self._entries, k=-1)

    @property
    def diagonal(self) -> np.ndarray:
        """:class:`numpy.ndarray`: the diagonal entries of ``L`` as a vector."""
        return np.diag(self._entries).copy()

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._entries.copy() if copy else self._entries
        return self._entries.astype(dtype)

    def __repr__(self) -> str:
        return f"CholFactor(dim={self.dim}, entries={self._entries.tolist()!r})"


class EmbeddedPoint:
    """
    Log-Cholesky coordinates of an SPD matrix.

    The coordinate vector has length ``m(m+1)/2`` and is laid out as the
    strict lower Cholesky entries in column-major order followed by the logs
    of the ``m`` diagonal entries.

    Parameters
    ----------
    coords : array-like
        One-dimensional coordinate vector.
    dim_m : :class:`int`, optional
        Source matrix dimension. Inferred from ``len(coords)`` when omitted.

    Raises
    ------
    DimensionMismatch
        If ``coords`` is not one-dimensional or its length is not
        ``dim_m(dim_m+1)/2``.
    NonFiniteValues
        If any coordinate is NaN or infinite.
    """

    __slots__ = ("_coords", "_dim_m")

    def __init__(self, coords: ArrayLike, dim_m: Optional[int] = None) -> None:
        arr = np.array(coords, dtype=np.float64)
        if arr.ndim != 1:
            raise DimensionMismatch(f"embedded coordinates must be a vector, got shape {arr.shape}")
        if dim_m is None:
            dim_m = matrix_dim_from_embedding(arr.size)
        elif dim_m < 1 or arr.size != embedding_dim(dim_m):
            raise DimensionMismatch(
                f"{arr.size} coordinates do not match matrix dimension {dim_m} "
                f"(expected {embedding_dim(max(dim_m, 0))})"
            )
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValues("embedded coordinates contain NaN or infinite values")
        self._coords = _readonly(arr)
        self._dim_m = int(dim_m)

    @property
    def dim_m(self) -> int:
        """:class:`int`: dimension of the source matrix."""
        return self._dim_m

    @property
    def coords(self) -> np.ndarray:
        """:class:`numpy.ndarray`: read-only coordinate vector."""
        return self._coords

    @property
    def strict_lower(self) -> np.ndarray:
        """:class:`numpy.ndarray`: the first ``m(m-1)/2`` coordinates."""
        return self._coords[: self._coords.size - self._dim_m]

    @property
    def log_diagonal(self) -> np.ndarray:
        """:class:`numpy.ndarray`: the last ``m`` coordinates."""
        return self._coords[self._coords.size - self._dim_m :]

    def __len__(self) -> int:
        return self._coords.size

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._coords.copy() if copy else self._coords
        return self._coords.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddedPoint):
            return NotImplemented
        return self._dim_m == other._dim_m and bool(np.array_equal(self._coords, other._coords))

    __hash__ = None

    def __repr__(self) -> str:
        return f"EmbeddedPoint(dim_m={self._dim_m}, coords={self._coords.tolist()!r})"
