# SPD_Kmeans/SPD_utils/src/features/patching.py

"""
Downsampling rasters into non-overlapping ``p×p`` patches.

Blocks are anchored at the top-left pixel. Under ``drop_partial`` the grid is
``floor(H/p) × floor(W/p)`` and the incomplete border blocks are discarded;
under ``average_partial`` it is ``ceil(H/p) × ceil(W/p)`` and border blocks
average whatever pixels they contain.

Functions
---------
:func:`patch_average`
    Average the raw series over each block, per time step.
:func:`patch_labels`
    Majority-vote a categorical raster over each block.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.features.raster import RasterStack, normalize_border_policy
from SPD_Kmeans.SPD_utils.src.spd.errors import DegenerateOutput, DimensionMismatch, InvalidLabels, InvalidParameter

logger = get_logger(__name__)


def patched_dims(H: int, W: int, p: int, border_policy: str = "drop_partial") -> tuple[int, int]:
    """
    Grid size after ``p×p`` patching.

    Raises
    ------
    InvalidParameter
        If ``p < 1`` or the policy is unknown.
    DegenerateOutput
        If the grid would be empty.
    """
    if int(p) != p or p < 1:
        raise InvalidParameter(f"patch size must be a positive integer, got {p}")
    if normalize_border_policy(border_policy) == "drop_partial":
        Hp, Wp = H // p, W // p
    else:
        Hp, Wp = -(-H // p), -(-W // p)
    if Hp == 0 or Wp == 0:
        raise DegenerateOutput(f"patch size {p} leaves an empty grid for a {H}×{W} raster")
    return Hp, Wp


def _blocks(arr: np.ndarray, p: int, Hp: int, Wp: int, fill) -> np.ndarray:
    """Crop or pad the last two axes to ``(Hp·p, Wp·p)`` and split them into blocks."""
    H, W = arr.shape[-2:]
    Hc, Wc = Hp * p, Wp * p
    out = np.full(arr.shape[:-2] + (Hc, Wc), fill, dtype=arr.dtype)
    h, w = min(H, Hc), min(W, Wc)
    out[..., :h, :w] = arr[..., :h, :w]
    return out.reshape(arr.shape[:-2] + (Hp, p, Wp, p))


def patch_average(stack: RasterStack, p: int, border_policy: str = "drop_partial") -> RasterStack:
    """
    Average a raster stack over ``p×p`` blocks.

    Each output value at time ``t`` is the arithmetic mean of the unmasked
    input values of its block at time ``t``; a block with no unmasked pixel
    is masked. An attached truth raster is patched with :func:`patch_labels`.

    Parameters
    ----------
    stack : :class:`~SPD_Kmeans.SPD_utils.src.features.raster.RasterStack`
        Input band.
    p : :class:`int`
        Patch side, at least 1.
    border_policy : :class:`str`, optional
        ``"drop_partial"`` (default) or ``"average_partial"``.

    Returns
    -------
    :class:`~SPD_Kmeans.SPD_utils.src.features.raster.RasterStack`
        The patched band; for ``p == 1`` a copy of the input.

    Raises
    ------
    DegenerateOutput
        If the patched grid is empty.

    Examples
    --------
    >>> values = np.array([[[1.0, 2.0], [3.0, 4.0]]] * 2)
    >>> patch_average(RasterStack("CC", values), 2).values[:, 0, 0]
    array([2.5, 2.5])
    """
    Hp, Wp = patched_dims(stack.H, stack.W, p, border_policy)
    truth = None if stack.truth is None else patch_labels(stack.truth, p, border_policy)
    if p == 1:
        return RasterStack(stack.band_name, stack.values.copy(), stack.nodata_mask.copy(), truth)

    valid = _blocks(~stack.nodata_mask, p, Hp, Wp, False)
    counts = valid.sum(axis=(1, 3))
    cleaned = np.where(stack.nodata_mask, 0.0, stack.values)
    sums = _blocks(cleaned, p, Hp, Wp, 0.0).sum(axis=(2, 4))

    out_mask = counts == 0
    with np.errstate(invalid="ignore", divide="ignore"):
        out = sums / counts
    out[:, out_mask] = np.nan

    logger.info(
        "Patched band %s with p=%d (%s): %d×%d → %d×%d, %d empty blocks.",
        stack.band_name, p, border_policy, stack.H, stack.W, Hp, Wp, int(out_mask.sum()),
    )
    return RasterStack(stack.band_name, out, out_mask, truth)


def patch_labels(truth: ArrayLike, p: int, border_policy: str = "drop_partial") -> np.ndarray:
    """
    Majority vote of a label raster over ``p×p`` blocks.

    Parameters
    ----------
    truth : array-like
        ``H×W`` raster of integer-valued labels; NaN marks unlabeled pixels.
    p : :class:`int`
        Patch side.
    border_policy : :class:`str`, optional
        ``"drop_partial"`` (default) or ``"average_partial"``.

    Returns
    -------
    :class:`numpy.ndarray`
        ``H′×W′`` float raster. Each block takes its most frequent label, ties
        going to the smaller label; blocks without labeled pixels are NaN.

    Raises
    ------
    InvalidLabels
        If a labeled pixel is not integer-valued.
    """
    arr = np.asarray(truth, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionMismatch(f"truth must be an H×W raster, got shape {arr.shape}")
    labeled = ~np.isnan(arr)
    if not np.all(np.isfinite(arr[labeled])) or np.any(arr[labeled] != np.round(arr[labeled])):
        raise InvalidLabels("truth raster must hold integer labels (NaN for unlabeled pixels)")

    Hp, Wp = patched_dims(arr.shape[0], arr.shape[1], p, border_policy)
    if p == 1:
        return arr.copy()

    levels = np.unique(arr[labeled])
    out = np.full((Hp, Wp), np.nan)
    if levels.size == 0:
        return out

    blocks = _blocks(arr, p, Hp, Wp, np.nan)
    votes = np.stack([(blocks == level).sum(axis=(1, 3)) for level in levels])
    winner = np.argmax(votes, axis=0)
    has_votes = votes.max(axis=0) > 0
    out[has_votes] = levels[winner[has_votes]]
    return out
