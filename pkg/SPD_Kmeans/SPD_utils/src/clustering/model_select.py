# SPD_Kmeans/SPD_utils/src/clustering/model_select.py

"""
Choosing the number of clusters with a BIC-style penalized objective.

For every candidate ``k`` the best-of-restarts k-means objective is penalized
by ``m(m+1)·k·log(n)/n`` (twice the embedding dimension per cluster) and the
smallest score wins, with ties going to the smaller ``k``.

Each candidate is fitted with its own seed derived from the base seed and
``k`` alone, so adding candidates never changes the fits of existing ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.clustering.kmeans import (
    KmeansConfig,
    PointsLike,
    as_point_array,
    fit_array,
)
from SPD_Kmeans.SPD_utils.src.spd.errors import DimensionMismatch, EmptyInput, InvalidParameter, KExceedsN
from SPD_Kmeans.SPD_utils.src.spd.geometry import embed_batch
from SPD_Kmeans.SPD_utils.src.spd.spd_matrix import SpdMatrix, embedding_dim

logger = get_logger(__name__)


def bic_penalty(m: int, k: int, n: int) -> float:
    """
    Penalty term ``m(m+1)·k·log(n)/n`` of the cluster-count estimator.

    Parameters
    ----------
    m : :class:`int`
        Matrix dimension.
    k : :class:`int`
        Number of clusters.
    n : :class:`int`
        Sample size.

    Returns
    -------
    :class:`float`
    """
    return m * (m + 1) * k * float(np.log(n)) / n


def candidate_seed(base_seed: int, k: int) -> int:
    """Seed of the fit for candidate ``k``; depends on ``(base_seed, k)`` only."""
    return int(np.random.SeedSequence([base_seed, k]).generate_state(1)[0])


@dataclass(frozen=True)
class KCandidate:
    """One scored candidate ``k``."""

    k: int
    objective: float
    penalty: float
    score: float


@dataclass(frozen=True)
class KSelectionReport:
    """
    Scores of every candidate and the chosen number of clusters.

    Attributes
    ----------
    candidates : :class:`tuple` of :class:`KCandidate`
        One record per candidate, in increasing ``k``.
    chosen_k : :class:`int`
        Candidate with the minimal score; ties go to the smaller ``k``.
    m : :class:`int`
        Matrix dimension.
    n : :class:`int`
        Sample size.
    models : :class:`dict`
        Winning :class:`~SPD_Kmeans.SPD_utils.src.clustering.kmeans.ClusterModel`
        for each candidate ``k``.
    """

    candidates: tuple
    chosen_k: int
    m: int
    n: int
    models: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def chosen(self) -> KCandidate:
        return next(c for c in self.candidates if c.k == self.chosen_k)

    def to_frame(self) -> pd.DataFrame:
        """
        Table with columns ``k, objective, penalty, score, chosen``.

        Returns
        -------
        :class:`pandas.DataFrame`
        """
        return pd.DataFrame(
            {
                "k": [c.k for c in self.candidates],
                "objective": [c.objective for c in self.candidates],
                "penalty": [c.penalty for c in self.candidates],
                "score": [c.score for c in self.candidates],
                "chosen": [int(c.k == self.chosen_k) for c in self.candidates],
            },
            columns=["k", "objective", "penalty", "score", "chosen"],
        )


def _normalize_k_set(k_set: Iterable[int], n: int) -> list[int]:
    ks = sorted({int(k) for k in k_set})
    if not ks:
        raise EmptyInput("the set of candidate k values is empty")
    if ks[0] < 1:
        raise InvalidParameter(f"candidate k values must be positive, got {ks[0]}")
    if ks[-1] > n:
        raise KExceedsN(f"largest candidate k={ks[-1]} exceeds the number of points n={n}")
    return ks


def select_k_embedded(
    points: PointsLike,
    m: Optional[int],
    k_set: Iterable[int],
    cfg_template: KmeansConfig,
    *,
    progress: bool = False,
) -> KSelectionReport:
    """
    Run the cluster-count estimator on embedded points.

    Parameters
    ----------
    points : array-like or sequence of :class:`~SPD_Kmeans.SPD_utils.src.spd.spd_matrix.EmbeddedPoint`
        ``(n, m(m+1)/2)`` log-Cholesky coordinates.
    m : :class:`int`, optional
        Matrix dimension; inferred from the coordinate count when ``None``.
    k_set : iterable of :class:`int`
        Candidate numbers of clusters. Duplicates are ignored.
    cfg_template : :class:`~SPD_Kmeans.SPD_utils.src.clustering.kmeans.KmeansConfig`
        Restarts, iteration limits and base seed; its ``k`` is ignored.
    progress : :class:`bool`, optional
        Show a progress bar over candidates.

    Returns
    -------
    :class:`KSelectionReport`

    Raises
    ------
    EmptyInput
        If there are no points or no candidates.
    KExceedsN
        If a candidate exceeds the number of points.
    """
    if isinstance(points, (list, tuple)) and not points:
        raise EmptyInput("model selection needs at least one point")
    X, inferred_m = as_point_array(points)
    if m is None:
        if inferred_m is None:
            raise DimensionMismatch(f"{X.shape[1]} coordinates do not come from an SPD matrix")
        m = inferred_m
    elif X.shape[1] != embedding_dim(m):
        raise DimensionMismatch(f"{X.shape[1]} coordinates do not match matrix dimension {m}")

    n = X.shape[0]
    ks = _normalize_k_set(k_set, n)

    candidates = []
    models = {}
    for k in tqdm(ks, desc="Selecting k", disable=None if progress else True, ncols=100):
        cfg = cfg_template.with_k(k, seed=candidate_seed(cfg_template.seed, k))
        model = fit_array(X, m, cfg)
        penalty = bic_penalty(m, k, n)
        candidates.append(KCandidate(k=k, objective=model.objective, penalty=penalty, score=model.objective + penalty))
        models[k] = model
        logger.debug("k=%d objective=%.6g penalty=%.6g", k, model.objective, penalty)

    chosen = candidates[0]
    for c in candidates[1:]:
        if c.score < chosen.score:
            chosen = c
    logger.info("Selected k=%d among %s (n=%d, m=%d).", chosen.k, ks, n, m)

    return KSelectionReport(candidates=tuple(candidates), chosen_k=chosen.k, m=m, n=n, models=models)


def select_k(
    matrices: Sequence[SpdMatrix],
    k_set: Iterable[int],
    cfg_template: KmeansConfig,
    *,
    progress: bool = False,
) -> KSelectionReport:
    """
    Run the cluster-count estimator on SPD matrices.

    Parameters
    ----------
    matrices : sequence of :class:`~SPD_Kmeans.SPD_utils.src.spd.spd_matrix.SpdMatrix`
        Matrices of equal dimension.
    k_set : iterable of :class:`int`
        Candidate numbers of clusters.
    cfg_template : :class:`~SPD_Kmeans.SPD_utils.src.clustering.kmeans.KmeansConfig`
        Restarts, iteration limits and base seed.

    Returns
    -------
    :class:`KSelectionReport`

    Examples
    --------
    A repeated point has zero objective, so the smallest candidate wins:

    >>> S = SpdMatrix([[2.0, 0.5], [0.5, 1.0]])
    >>> select_k([S] * 10, [1], KmeansConfig(k=1)).chosen_k
    1
    """
    matrices = list(matrices)
    if not matrices:
        raise EmptyInput("model selection needs at least one matrix")
    return select_k_embedded(embed_batch(matrices), matrices[0].dim, k_set, cfg_template, progress=progress)
