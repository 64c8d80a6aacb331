# SPD_Kmeans/SPD_utils/src/metrics/agreement.py

"""
Agreement between two partitions of the same points.

:func:`adjusted_rand` is the Hubert–Arabie adjusted Rand index computed from
the pair counts of the contingency table. The pair counts are summed as exact
integers, so the degenerate case (maximum index equal to its expectation, for
example two single-cluster partitions) is detected exactly and returns 0.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from numpy.typing import ArrayLike

from SPD_Kmeans.SPD_utils.src.spd.errors import EmptyInput, InvalidLabels, LengthMismatch


def as_partition(labels: ArrayLike, what: str = "labels") -> np.ndarray:
    """
    Validate a label vector.

    Parameters
    ----------
    labels : array-like
        One-dimensional labels. Integer-valued floats are accepted.
    what : :class:`str`, optional
        Name used in error messages.

    Returns
    -------
    :class:`numpy.ndarray`
        ``int64`` copy of the labels.

    Raises
    ------
    InvalidLabels
        If the labels are not one-dimensional integers.
    """
    arr = np.asarray(labels)
    if arr.ndim != 1:
        raise InvalidLabels(f"{what} must be one-dimensional, got shape {arr.shape}")
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or np.any(arr != np.round(arr)):
            raise InvalidLabels(f"{what} must be integer-valued")
    elif arr.dtype.kind not in "iub":
        raise InvalidLabels(f"{what} must be integers, got dtype {arr.dtype}")
    return arr.astype(np.int64)


def contingency_table(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    """
    Counts of points in each (class of ``a``, class of ``b``) pair.

    Returns
    -------
    :class:`numpy.ndarray`
        Dense ``int64`` matrix with one row per distinct label of ``a`` and one
        column per distinct label of ``b``, both in increasing label order.
    """
    a = as_partition(a, "first partition")
    b = as_partition(b, "second partition")
    if a.size != b.size:
        raise LengthMismatch(f"partitions have {a.size} and {b.size} labels")
    classes, class_idx = np.unique(a, return_inverse=True)
    clusters, cluster_idx = np.unique(b, return_inverse=True)
    table = sp.coo_matrix(
        (np.ones(class_idx.shape[0], dtype=np.int64), (class_idx, cluster_idx)),
        shape=(classes.shape[0], clusters.shape[0]),
        dtype=np.int64,
    )
    return table.toarray()


def _pairs(counts: np.ndarray) -> int:
    counts = counts.astype(np.int64)
    return int(np.sum(counts * (counts - 1) // 2))


def adjusted_rand(a: ArrayLike, b: ArrayLike) -> float:
    """
    Adjusted Rand index of two partitions.

    Parameters
    ----------
    a, b : array-like
        Label vectors of equal length. Label ids are arbitrary integers.

    Returns
    -------
    :class:`float`
        ``(Index − Expected) / (Max − Expected)``; 1.0 for partitions equal up
        to renaming, 0.0 when ``Max == Expected``.

    Raises
    ------
    LengthMismatch
        If the vectors differ in length.
    EmptyInput
        If they are empty.

    Examples
    --------
    >>> adjusted_rand([1, 1, 2, 2], [1, 1, 2, 3])  # 4/7
    0.5714285714285714
    """
    table = contingency_table(a, b)
    n = int(table.sum())
    if n == 0:
        raise EmptyInput("the adjusted Rand index of empty partitions is undefined")

    index = _pairs(table.ravel())
    sum_a = _pairs(table.sum(axis=1))
    sum_b = _pairs(table.sum(axis=0))
    total = n * (n - 1) // 2

    # 2·(Index − Expected)·total over 2·(Max − Expected)·total, in integers
    numerator = 2 * (index * total - sum_a * sum_b)
    denominator = (sum_a + sum_b) * total - 2 * sum_a * sum_b
    if denominator == 0:
        return 0.0
    return numerator / denominator
