# SPD_Kmeans/SPD_utils/src/metrics/sargde.py

"""
The SARGDE_v1 index, ``1/(σ_cc · σ_vh · μ_cc)``.

``σ`` is the sample standard deviation with the ``1/(T−1)`` normalization and
``μ_cc`` the mean InSAR coherence. High values single out pixels whose
coherence is stable and low and whose cross-polarised backscatter barely
varies.

Functions
---------
:func:`sargde_v1`
    Index of one pair of series.
:func:`sargde_raster`
    Per-pixel index of two raster stacks.
:func:`sargde_quartile_classes`
    Lower quartile / middle half / upper quartile classes of index values.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from SPD_Kmeans.SPD_utils.src.features.raster import RasterStack
from SPD_Kmeans.SPD_utils.src.spd.errors import DegenerateSeries, DimensionMismatch, InvalidParameter, NonFiniteValues


def _series(values: ArrayLike, name: str) -> np.ndarray:
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1 or x.size < 2:
        raise InvalidParameter(f"{name} series needs at least 2 values, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise NonFiniteValues(f"{name} series contains NaN or infinite values")
    return x


def sargde_v1(cc_series: ArrayLike, vh_series: ArrayLike) -> float:
    """
    SARGDE_v1 index of one pixel.

    Parameters
    ----------
    cc_series : array-like
        InSAR coherence series, at least 2 values.
    vh_series : array-like
        VH backscatter series, at least 2 values. It need not have the length
        of ``cc_series``.

    Returns
    -------
    :class:`float`

    Raises
    ------
    DegenerateSeries
        If ``σ_cc``, ``σ_vh`` or ``μ_cc`` is zero.

    Examples
    --------
    >>> round(sargde_v1([0.4, 0.6], [1.0, 3.0]), 12)
    10.0
    """
    cc = _series(cc_series, "coherence")
    vh = _series(vh_series, "VH")
    s_cc = float(np.std(cc, ddof=1))
    s_vh = float(np.std(vh, ddof=1))
    mu_cc = float(np.mean(cc))
    if s_cc == 0.0 or s_vh == 0.0 or mu_cc == 0.0:
        raise DegenerateSeries(f"SARGDE factor is zero: sigma_cc={s_cc}, sigma_vh={s_vh}, mu_cc={mu_cc}")
    return 1.0 / (s_cc * s_vh * mu_cc)


def sargde_raster(cc: RasterStack, vh: RasterStack) -> np.ndarray:
    """
    Per-pixel SARGDE_v1 of two co-registered bands.

    Parameters
    ----------
    cc, vh : :class:`~SPD_Kmeans.SPD_utils.src.features.raster.RasterStack`
        Coherence and VH bands on the same ``H×W`` grid.

    Returns
    -------
    :class:`numpy.ndarray`
        ``H×W`` index values; NaN where either band is nodata or a factor is
        zero.

    Raises
    ------
    DimensionMismatch
        If the rasters have different sizes.
    """
    if (cc.H, cc.W) != (vh.H, vh.W):
        raise DimensionMismatch(f"coherence raster is {cc.H}×{cc.W}, VH raster is {vh.H}×{vh.W}")
    with np.errstate(invalid="ignore", divide="ignore"):
        s_cc = np.std(cc.values, axis=0, ddof=1)
        s_vh = np.std(vh.values, axis=0, ddof=1)
        mu_cc = np.mean(cc.values, axis=0)
        product = s_cc * s_vh * mu_cc
        out = 1.0 / product
    bad = cc.nodata_mask | vh.nodata_mask | (s_cc == 0.0) | (s_vh == 0.0) | (mu_cc == 0.0)
    out[bad] = np.nan
    return out


def sargde_quartile_classes(values: ArrayLike) -> np.ndarray:
    """
    Split index values into lower quartile, middle half and upper quartile.

    Parameters
    ----------
    values : array-like
        Index values; NaN entries are not classified.

    Returns
    -------
    :class:`numpy.ndarray`
        ``int64`` classes: 0 below the first sample quartile, 2 above the third,
        1 in between (quartiles included), -1 for NaN.
    """
    v = np.asarray(values, dtype=np.float64)
    out = np.full(v.shape, -1, dtype=np.int64)
    finite = np.isfinite(v)
    if not finite.any():
        return out
    q1, q3 = np.quantile(v[finite], [0.25, 0.75])
    out[finite] = 1
    out[finite & (v < q1)] = 0
    out[finite & (v > q3)] = 2
    return out
