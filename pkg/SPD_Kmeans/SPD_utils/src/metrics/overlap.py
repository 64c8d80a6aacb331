# SPD_Kmeans/SPD_utils/src/metrics/overlap.py

"""Per-cluster overlap with the positive ground-truth class."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike

from SPD_Kmeans.SPD_utils.src.metrics.agreement import as_partition
from SPD_Kmeans.SPD_utils.src.spd.errors import InvalidParameter, LengthMismatch


@dataclass(frozen=True)
class OverlapRecord:
    """Overlap of one cluster with the positive class."""

    cluster: int
    size: int
    overlap_fraction: float
    flagged: bool


def overlap_report(model_labels: ArrayLike, truth: ArrayLike, threshold: float = 0.05) -> list[OverlapRecord]:
    """
    Fraction of each cluster whose ground truth is positive.

    Parameters
    ----------
    model_labels : array-like
        Cluster label of each point.
    truth : array-like
        Ground-truth value of each point; values ``> 0`` are positive and NaN
        marks unlabeled points, which are left out.
    threshold : :class:`float`, optional
        A cluster is flagged when its overlap is strictly greater than this
        value. Defaults to ``0.05``.

    Returns
    -------
    :class:`list` of :class:`OverlapRecord`
        One record per cluster, by increasing cluster id.

    Raises
    ------
    LengthMismatch
        If the vectors differ in length.
    InvalidParameter
        If ``threshold`` is outside ``[0, 1]``.
    """
    if not 0.0 <= threshold <= 1.0:
        raise InvalidParameter(f"overlap threshold must lie in [0, 1], got {threshold}")
    labels = as_partition(model_labels, "cluster labels")
    t = np.asarray(truth, dtype=np.float64)
    if t.ndim != 1 or t.size != labels.size:
        raise LengthMismatch(f"got {labels.size} cluster labels and {t.size} truth values")

    keep = ~np.isnan(t)
    labels, positive = labels[keep], t[keep] > 0

    records = []
    for cluster in np.unique(labels):
        members = labels == cluster
        size = int(members.sum())
        frac = float(np.count_nonzero(positive & members)) / size
        records.append(OverlapRecord(cluster=int(cluster), size=size, overlap_fraction=frac, flagged=frac > threshold))
    return records


def overlap_frame(records: list[OverlapRecord]) -> pd.DataFrame:
    """Table ``cluster, size, overlap_fraction, flagged`` of an overlap report."""
    return pd.DataFrame(
        {
            "cluster": [r.cluster for r in records],
            "size": [r.size for r in records],
            "overlap_fraction": [r.overlap_fraction for r in records],
            "flagged": [int(r.flagged) for r in records],
        },
        columns=["cluster", "size", "overlap_fraction", "flagged"],
    )
