# SPD_Kmeans/SPD_utils/src/metrics/sweep.py

"""
Hyperparameter sweep scored by agreement with ground truth.

Every cell ``(band, lag, patch, k)`` builds the band's features, clusters
all feature points and scores the labels against the patched ground truth
with the adjusted Rand index. Only feature points with a label in the patched
truth enter the score.

Each cell seeds its k-means from its own coordinates (see :func:`cell_seed`),
so any cell can be recomputed alone with :func:`sweep_cell` and gives the same
ARI as inside the full grid.

Classes
-------
:class:`SweepCell`
    Score of one cell.
:class:`SweepResult`
    Full grid and its best cell.

Functions
---------
:func:`sweep`
    Run the full grid.
:func:`sweep_cell`
    Run a single cell.
:func:`cell_seed`
    Cell-local k-means seed.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike
from tqdm import tqdm

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.clustering.kmeans import KmeansConfig, fit_array
from SPD_Kmeans.SPD_utils.src.features.autocov import DEFAULT_JITTER
from SPD_Kmeans.SPD_utils.src.features.build import FeatureConfig, FeatureSet, build_features
from SPD_Kmeans.SPD_utils.src.features.patching import patch_labels
from SPD_Kmeans.SPD_utils.src.features.raster import RasterStack
from SPD_Kmeans.SPD_utils.src.metrics.agreement import adjusted_rand
from SPD_Kmeans.SPD_utils.src.spd.errors import DimensionMismatch, EmptyInput

logger = get_logger(__name__)

GRID_COLUMNS = ["band", "lag", "patch", "k", "ari"]


@dataclass(frozen=True)
class SweepCell:
    """ARI of one ``(band, lag, patch, k)`` configuration."""

    band: str
    lag: int
    patch: int
    k: int
    ari: float


@dataclass(frozen=True)
class SweepResult:
    """
    Result of :func:`sweep`.

    Attributes
    ----------
    grid : :class:`tuple` of :class:`SweepCell`
        Every cell, in band → patch → lag → k order.
    best : :class:`SweepCell`
        Cell with the largest ARI; ties go to the smaller ``(lag, patch, k)``
        and then to the earlier band.
    """

    grid: tuple
    best: SweepCell

    def to_frame(self) -> pd.DataFrame:
        """Table with columns ``band, lag, patch, k, ari``, one row per cell."""
        return pd.DataFrame(
            [[c.band, c.lag, c.patch, c.k, c.ari] for c in self.grid],
            columns=GRID_COLUMNS,
        )


def cell_seed(base_seed: int, band: str, lag: int, patch: int, k: int) -> int:
    """Seed of a cell, derived from the base seed and the cell coordinates only."""
    entropy = [int(base_seed), zlib.crc32(band.encode("utf-8")), int(lag), int(patch), int(k)]
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])


def _grid(values: Iterable[int], name: str) -> list[int]:
    out = sorted({int(v) for v in values})
    if not out:
        raise EmptyInput(f"sweep {name} grid is empty")
    return out


def _truth_raster(truth: ArrayLike, stacks: Mapping[str, RasterStack]) -> np.ndarray:
    arr = np.asarray(truth, dtype=np.float64)
    for name, stack in stacks.items():
        if arr.shape != (stack.H, stack.W):
            raise DimensionMismatch(f"truth raster is {arr.shape}, band {name!r} is {stack.H}×{stack.W}")
    return arr


def _score(
    features: FeatureSet,
    patched_truth: np.ndarray,
    lag: int,
    patch: int,
    k: int,
    cfg_template: KmeansConfig,
) -> SweepCell:
    cfg = cfg_template.with_k(k, seed=cell_seed(cfg_template.seed, features.band_name, lag, patch, k))
    model = fit_array(features.coords, features.m, cfg)

    rows, cols = features.pixel_index[:, 0], features.pixel_index[:, 1]
    point_truth = patched_truth[rows, cols]
    labeled = ~np.isnan(point_truth)
    if not labeled.any():
        raise EmptyInput(f"no feature point of band {features.band_name!r} has a ground-truth label")
    ari = adjusted_rand(point_truth[labeled], model.labels[labeled])

    logger.info(
        "Cell band=%s lag=%d patch=%d k=%d: ARI %.6f over %d labeled points.",
        features.band_name, lag, patch, k, ari, int(labeled.sum()),
    )
    return SweepCell(band=features.band_name, lag=lag, patch=patch, k=k, ari=ari)


def sweep_cell(
    stack: RasterStack,
    truth: ArrayLike,
    lag: int,
    patch: int,
    k: int,
    cfg_template: KmeansConfig,
    border_policy: str = "drop_partial",
    jitter: float = DEFAULT_JITTER,
) -> SweepCell:
    """
    Score a single sweep cell.

    Parameters
    ----------
    stack : :class:`~SPD_Kmeans.SPD_utils.src.features.raster.RasterStack`
        Band to cluster; its name enters the cell seed.
    truth : array-like
        ``H×W`` ground-truth raster, NaN for unlabeled pixels.
    lag, patch, k : :class:`int`
        Cell coordinates.
    cfg_template : :class:`~SPD_Kmeans.SPD_utils.src.clustering.kmeans.KmeansConfig`
        Restarts, iteration limits and base seed; ``k`` and ``seed`` are
        replaced per cell.
    border_policy : :class:`str`, optional
        Patching border policy.
    jitter : :class:`float`, optional
        Autocovariance jitter.

    Returns
    -------
    :class:`SweepCell`
    """
    truth_arr = _truth_raster(truth, {stack.band_name: stack})
    features = build_features(stack, FeatureConfig(lag=lag, patch=patch, jitter=jitter, border_policy=border_policy))
    patched_truth = patch_labels(truth_arr, patch, border_policy)
    return _score(features, patched_truth, lag, patch, k, cfg_template)


def sweep(
    stacks: Mapping[str, RasterStack],
    truth: ArrayLike,
    lags: Sequence[int],
    patches: Sequence[int],
    ks: Sequence[int],
    cfg_template: KmeansConfig,
    border_policy: str = "drop_partial",
    jitter: float = DEFAULT_JITTER,
    progress: bool = False,
) -> SweepResult:
    """
    Score every ``(band, lag, patch, k)`` combination.

    Parameters
    ----------
    stacks : mapping
        Band name → :class:`RasterStack`, all on the grid of ``truth``.
    truth : array-like
        ``H×W`` ground-truth raster, NaN for unlabeled pixels.
    lags, patches, ks : sequence of :class:`int`
        Axes of the grid; duplicates are ignored and each axis is sorted.
    cfg_template : :class:`~SPD_Kmeans.SPD_utils.src.clustering.kmeans.KmeansConfig`
        Shared k-means parameters and base seed.
    border_policy : :class:`str`, optional
        Patching border policy.
    jitter : :class:`float`, optional
        Autocovariance jitter.
    progress : :class:`bool`, optional
        Show a progress bar over cells.

    Returns
    -------
    :class:`SweepResult`

    Raises
    ------
    EmptyInput
        If any axis of the grid is empty.
    DimensionMismatch
        If the truth raster does not match the bands.
    """
    if not stacks:
        raise EmptyInput("sweep needs at least one band")
    lag_grid, patch_grid, k_grid = _grid(lags, "lag"), _grid(patches, "patch"), _grid(ks, "k")
    truth_arr = _truth_raster(truth, stacks)
    band_order = list(stacks)

    n_cells = len(band_order) * len(lag_grid) * len(patch_grid) * len(k_grid)
    bar = tqdm(total=n_cells, desc="Sweep", ncols=100, disable=None if progress else True)
    cells: list[SweepCell] = []
    try:
        for band in band_order:
            stack = stacks[band]
            if stack.band_name != band:
                stack = RasterStack(band, stack.values, stack.nodata_mask, stack.truth)
            for patch in patch_grid:
                patched_truth = patch_labels(truth_arr, patch, border_policy)
                for lag in lag_grid:
                    cfg = FeatureConfig(lag=lag, patch=patch, jitter=jitter, border_policy=border_policy)
                    features = build_features(stack, cfg)
                    for k in k_grid:
                        cells.append(_score(features, patched_truth, lag, patch, k, cfg_template))
                        bar.update(1)
    finally:
        bar.close()

    rank = {band: i for i, band in enumerate(band_order)}
    best = min(cells, key=lambda c: (-c.ari, c.lag, c.patch, c.k, rank[c.band]))
    logger.info("Sweep best: band=%s lag=%d patch=%d k=%d ARI=%.6f.", best.band, best.lag, best.patch, best.k, best.ari)
    return SweepResult(grid=tuple(cells), best=best)
