# SPD_Kmeans/SPD_utils/src/features/raster.py

"""
Pixel time-series rasters.

A :class:`RasterStack` holds one band (``"CC"``, ``"VV"``, ``"VH"``...) as a
``T×H×W`` array. NaN marks nodata: a pixel whose series is NaN at any time
step is flagged in :attr:`RasterStack.nodata_mask` and ignored downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.io.tensor_file import read_tensor
from SPD_Kmeans.SPD_utils.src.spd.errors import DimensionMismatch, InvalidParameter, NonFiniteValues

logger = get_logger(__name__)

BORDER_POLICIES = ("drop_partial", "average_partial")
_BORDER_ALIASES = {"drop": "drop_partial", "avg": "average_partial"}


def normalize_border_policy(policy: str) -> str:
    """
    Resolve a border policy name, accepting the short CLI spellings.

    Parameters
    ----------
    policy : :class:`str`
        ``"drop_partial"``/``"drop"`` or ``"average_partial"``/``"avg"``.

    Returns
    -------
    :class:`str`
        The canonical policy name.

    Raises
    ------
    InvalidParameter
        If the name is unknown.
    """
    resolved = _BORDER_ALIASES.get(policy, policy)
    if resolved not in BORDER_POLICIES:
        raise InvalidParameter(f"unknown border policy {policy!r}; expected drop_partial or average_partial")
    return resolved


@dataclass(frozen=True, eq=False)
class RasterStack:
    """
    One band of pixel time-series.

    Attributes
    ----------
    band_name : :class:`str`
        Band label.
    values : :class:`numpy.ndarray`
        ``T×H×W`` float array; NaN marks nodata.
    nodata_mask : :class:`numpy.ndarray`, optional
        ``H×W`` boolean mask of nodata pixels. When omitted it is derived from
        the NaNs in :attr:`values`.
    truth : :class:`numpy.ndarray`, optional
        ``H×W`` ground-truth label raster (NaN for unlabeled pixels).

    Raises
    ------
    DimensionMismatch
        If the arrays have the wrong rank or shape.
    InvalidParameter
        If ``T < 2``.
    NonFiniteValues
        If an unmasked pixel has a non-finite value.
    """

    band_name: str
    values: np.ndarray
    nodata_mask: Optional[np.ndarray] = None
    truth: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 3:
            raise DimensionMismatch(f"band {self.band_name!r} must be a T×H×W array, got shape {values.shape}")
        T, H, W = values.shape
        if T < 2:
            raise InvalidParameter(f"band {self.band_name!r} needs at least 2 time steps, got {T}")
        if H < 1 or W < 1:
            raise DimensionMismatch(f"band {self.band_name!r} has an empty raster {H}×{W}")

        if self.nodata_mask is None:
            mask = np.isnan(values).any(axis=0)
        else:
            mask = np.asarray(self.nodata_mask, dtype=bool)
            if mask.shape != (H, W):
                raise DimensionMismatch(f"nodata mask shape {mask.shape} does not match raster {H}×{W}")
        if not np.all(np.isfinite(values[:, ~mask])):
            raise NonFiniteValues(f"band {self.band_name!r} has non-finite values outside its nodata mask")

        truth = self.truth
        if truth is not None:
            truth = np.asarray(truth, dtype=np.float64)
            if truth.shape != (H, W):
                raise DimensionMismatch(f"truth raster shape {truth.shape} does not match raster {H}×{W}")

        object.__setattr__(self, "values", values)
        object.__setattr__(self, "nodata_mask", mask)
        object.__setattr__(self, "truth", truth)

    @property
    def T(self) -> int:
        return self.values.shape[0]

    @property
    def H(self) -> int:
        return self.values.shape[1]

    @property
    def W(self) -> int:
        return self.values.shape[2]

    @property
    def n_valid(self) -> int:
        """:class:`int`: number of pixels outside the nodata mask."""
        return int(np.count_nonzero(~self.nodata_mask))

    def series(self) -> np.ndarray:
        """Return the ``(H·W, T)`` matrix of pixel series in row-major pixel order."""
        return self.values.reshape(self.T, -1).T

    def truncate(self, T_new: int) -> "RasterStack":
        """
        Keep the first ``T_new`` time steps.

        The nodata mask is kept as is: nodata is a property of the pixel, not
        of the time window.

        Parameters
        ----------
        T_new : :class:`int`
            Number of time steps to keep, ``2 <= T_new <= T``.

        Returns
        -------
        :class:`RasterStack`
        """
        if not 2 <= T_new <= self.T:
            raise InvalidParameter(f"cannot truncate {self.T} time steps to {T_new}")
        return RasterStack(self.band_name, self.values[:T_new].copy(), self.nodata_mask.copy(), self.truth)

    @classmethod
    def from_tensor_file(
        cls,
        path: Union[str, Path],
        band_name: Optional[str] = None,
        truth: Optional[np.ndarray] = None,
    ) -> "RasterStack":
        """
        Load a ``T×H×W`` TensorFile.

        Parameters
        ----------
        path : :class:`str` or :class:`pathlib.Path`
            TensorFile path.
        band_name : :class:`str`, optional
            Band label; defaults to the file stem.
        truth : :class:`numpy.ndarray`, optional
            Ground-truth raster to attach.

        Returns
        -------
        :class:`RasterStack`
        """
        path = Path(path)
        values = read_tensor(path)
        stack = cls(band_name or path.stem, values, truth=truth)
        logger.info(
            "Loaded band %s from %s: T=%d, %d×%d, %d nodata pixels.",
            stack.band_name, path, stack.T, stack.H, stack.W, stack.H * stack.W - stack.n_valid,
        )
        return stack
