# SPD_Kmeans/SPD_utils/src/features/build.py

"""
From a raster stack to log-Cholesky feature points.

:func:`build_features` patches the band, computes one autocovariance matrix
per patched pixel and embeds it. Nodata blocks and constant series produce no
point; the surviving points keep their ``(row, col)`` on the patched grid in
:attr:`FeatureSet.pixel_index`, in row-major pixel order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pandas as pd

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.features.autocov import DEFAULT_JITTER, autocov_batch, check_lag
from SPD_Kmeans.SPD_utils.src.features.patching import patch_average
from SPD_Kmeans.SPD_utils.src.features.raster import RasterStack, normalize_border_policy
from SPD_Kmeans.SPD_utils.src.spd.errors import InvalidParameter
from SPD_Kmeans.SPD_utils.src.spd.geometry import embed_batch
from SPD_Kmeans.SPD_utils.src.spd.spd_matrix import EmbeddedPoint, embedding_dim

logger = get_logger(__name__)


@dataclass(frozen=True)
class FeatureConfig:
    """
    Feature pipeline parameters.

    Attributes
    ----------
    lag : :class:`int`
        Largest autocovariance lag ``ℓ``; matrices are ``(ℓ+1)×(ℓ+1)``.
    patch : :class:`int`
        Patch side ``p``. Defaults to 1 (no patching).
    jitter : :class:`float`
        Relative diagonal regularization. Defaults to ``1e-10``.
    border_policy : :class:`str`
        ``"drop_partial"`` (default) or ``"average_partial"``; ``"drop"`` and
        ``"avg"`` are accepted.
    """

    lag: int
    patch: int = 1
    jitter: float = DEFAULT_JITTER
    border_policy: str = "drop_partial"

    def __post_init__(self) -> None:
        if int(self.lag) != self.lag or self.lag < 0:
            raise InvalidParameter(f"lag must be a non-negative integer, got {self.lag}")
        if int(self.patch) != self.patch or self.patch < 1:
            raise InvalidParameter(f"patch must be a positive integer, got {self.patch}")
        if not self.jitter >= 0.0:
            raise InvalidParameter(f"jitter must be non-negative, got {self.jitter}")
        object.__setattr__(self, "border_policy", normalize_border_policy(self.border_policy))

    @property
    def m(self) -> int:
        return self.lag + 1


@dataclass(frozen=True, eq=False)
class FeatureSet:
    """
    Embedded autocovariance features of one band.

    Attributes
    ----------
    m : :class:`int`
        Matrix dimension ``ℓ+1``.
    coords : :class:`numpy.ndarray`
        ``(n, m(m+1)/2)`` log-Cholesky coordinates.
    pixel_index : :class:`numpy.ndarray`
        ``(n, 2)`` integer ``(row, col)`` of each point on the patched grid.
    grid_dims : :class:`tuple` of :class:`int`
        Patched grid size ``(H′, W′)``.
    band_name : :class:`str`
        Source band.
    """

    m: int
    coords: np.ndarray
    pixel_index: np.ndarray
    grid_dims: tuple
    band_name: str = ""

    @property
    def n_points(self) -> int:
        return int(self.coords.shape[0])

    @property
    def points(self) -> list[EmbeddedPoint]:
        """:class:`list` of :class:`EmbeddedPoint`: the features as embedded points."""
        return [EmbeddedPoint(row, dim_m=self.m) for row in self.coords]

    def pixel_frame(self) -> pd.DataFrame:
        """Table ``point_index, row, col`` mapping points back to the patched grid."""
        return pd.DataFrame(
            {
                "point_index": np.arange(self.n_points, dtype=np.int64),
                "row": self.pixel_index[:, 0],
                "col": self.pixel_index[:, 1],
            }
        )


def build_features(stack: RasterStack, cfg: FeatureConfig) -> FeatureSet:
    """
    Build the log-Cholesky autocovariance features of a band.

    Parameters
    ----------
    stack : :class:`~SPD_Kmeans.SPD_utils.src.features.raster.RasterStack`
        Input band.
    cfg : :class:`FeatureConfig`
        Lag, patch size, jitter and border policy.

    Returns
    -------
    :class:`FeatureSet`
        One point per unmasked, non-constant patched pixel.

    Raises
    ------
    InvalidParameter
        If the lag is too large for the number of time steps.
    DegenerateOutput
        If patching leaves an empty grid.
    """
    check_lag(cfg.lag, stack.T)
    patched = patch_average(stack, cfg.patch, cfg.border_policy)
    Hp, Wp = patched.H, patched.W

    flat_valid = np.flatnonzero(~patched.nodata_mask.ravel())
    series = patched.series()[flat_valid]
    mats, nonconstant = autocov_batch(series, cfg.lag, cfg.jitter)

    dropped = int(np.count_nonzero(~nonconstant))
    if dropped:
        logger.warning("Band %s: dropped %d constant pixel series.", stack.band_name, dropped)

    kept = flat_valid[nonconstant]
    coords = embed_batch(mats[nonconstant]) if kept.size else np.empty((0, embedding_dim(cfg.m)))
    rows, cols = np.divmod(kept, Wp)
    pixel_index = np.column_stack([rows, cols]).astype(np.int64)

    logger.info(
        "Band %s: %d feature points (m=%d) on a %d×%d grid (lag=%d, patch=%d).",
        stack.band_name, kept.size, cfg.m, Hp, Wp, cfg.lag, cfg.patch,
    )
    return FeatureSet(m=cfg.m, coords=coords, pixel_index=pixel_index, grid_dims=(Hp, Wp), band_name=stack.band_name)
