# SPD_Kmeans/SPD_utils/src/metrics/anova.py

"""
Variance of a per-pixel quantity explained by a clustering.

One-way ANOVA with the clusters as the single categorical factor:
``r² = 1 − SS_within / SS_total`` and the adjusted coefficient
``1 − (1 − r²)(n − 1)/(n − g)`` for ``g`` non-empty groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.metrics.agreement import as_partition
from SPD_Kmeans.SPD_utils.src.spd.errors import DegenerateGroups, LengthMismatch, NonFiniteValues

logger = get_logger(__name__)


@dataclass(frozen=True)
class AnovaResult:
    """Explained variance of a one-way ANOVA."""

    r2: float
    r2_adjusted: float
    n: int
    groups: int


def anova_r2(y: ArrayLike, groups: ArrayLike) -> AnovaResult:
    """
    Fraction of the variance of ``y`` explained by group membership.

    Parameters
    ----------
    y : array-like
        Finite values, one per point.
    groups : array-like
        Integer group label of each point.

    Returns
    -------
    :class:`AnovaResult`

    Raises
    ------
    LengthMismatch
        If ``y`` and ``groups`` differ in length.
    DegenerateGroups
        If there are fewer than two groups, ``n <= g``, or ``y`` is constant.

    Examples
    --------
    >>> res = anova_r2([0.0, 0.0, 1.0, 3.0], [1, 1, 2, 2])
    >>> round(res.r2, 12), round(res.r2_adjusted, 12)
    (0.666666666667, 0.5)
    """
    values = np.asarray(y, dtype=np.float64)
    labels = as_partition(groups, "groups")
    if values.ndim != 1 or values.size != labels.size:
        raise LengthMismatch(f"got {values.size} values for {labels.size} group labels")
    if not np.all(np.isfinite(values)):
        raise NonFiniteValues("ANOVA values contain NaN or infinite entries")

    n = values.size
    _, idx = np.unique(labels, return_inverse=True)
    g = int(idx.max()) + 1 if n else 0
    if g < 2:
        raise DegenerateGroups(f"ANOVA needs at least two groups, got {g}")
    if n <= g:
        raise DegenerateGroups(f"ANOVA needs more points than groups, got n={n}, g={g}")

    counts = np.bincount(idx, minlength=g)
    means = np.bincount(idx, weights=values, minlength=g) / counts
    ss_total = float(np.sum((values - values.mean()) ** 2))
    if ss_total == 0.0:
        raise DegenerateGroups("ANOVA values are constant; there is no variance to explain")
    ss_within = float(np.sum((values - means[idx]) ** 2))

    r2 = 1.0 - ss_within / ss_total
    r2_adjusted = 1.0 - (1.0 - r2) * (n - 1) / (n - g)
    return AnovaResult(r2=r2, r2_adjusted=r2_adjusted, n=n, groups=g)


def anova_comparison(y: ArrayLike, labels_by_name: Mapping[str, ArrayLike]) -> pd.DataFrame:
    """
    Compare how several clusterings of the same points explain ``y``.

    Typical use is the chosen ``k`` against ``k = 2``. Clusterings for which
    the ANOVA is degenerate are reported with NaN coefficients.

    Parameters
    ----------
    y : array-like
        Values per point.
    labels_by_name : mapping
        Clustering name → label vector.

    Returns
    -------
    :class:`pandas.DataFrame`
        Columns ``labels, n, groups, r2, r2_adjusted``, one row per clustering
        in mapping order.
    """
    rows = []
    for name, labels in labels_by_name.items():
        try:
            res = anova_r2(y, labels)
            rows.append({"labels": name, "n": res.n, "groups": res.groups, "r2": res.r2, "r2_adjusted": res.r2_adjusted})
        except DegenerateGroups as exc:
            logger.warning("ANOVA for %s is degenerate: %s", name, exc)
            n = int(np.size(labels))
            g = int(np.unique(np.asarray(labels)).size)
            rows.append({"labels": name, "n": n, "groups": g, "r2": np.nan, "r2_adjusted": np.nan})
    return pd.DataFrame(rows, columns=["labels", "n", "groups", "r2", "r2_adjusted"])
