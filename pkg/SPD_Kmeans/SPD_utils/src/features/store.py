# SPD_Kmeans/SPD_utils/src/features/store.py

"""
Feature files on disk.

A feature file is a 2-D TensorFile of log-Cholesky coordinates
(``n_points × m(m+1)/2``). Next to it live two sidecars:

- ``<stem>.pixels.csv`` with columns ``point_index, row, col``
- ``<name>.manifest.yaml`` whose ``extra`` section records ``m``,
  ``grid_dims``, ``band`` and ``n_points``

:func:`load_features` only needs the TensorFile: without the pixel sidecar the
pixel coordinates are reported as ``-1`` and without the manifest the grid size
is unknown.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

import numpy as np

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.features.build import FeatureSet
from SPD_Kmeans.SPD_utils.src.io.manifest import RunManifest, manifest_path
from SPD_Kmeans.SPD_utils.src.io.tables import read_csv, write_csv
from SPD_Kmeans.SPD_utils.src.io.tensor_file import read_tensor, write_tensor
from SPD_Kmeans.SPD_utils.src.spd.errors import LengthMismatch, TensorFormatError
from SPD_Kmeans.SPD_utils.src.spd.spd_matrix import matrix_dim_from_embedding

logger = get_logger(__name__)

PIXELS_SUFFIX = ".pixels.csv"
PIXEL_COLUMNS = ("point_index", "row", "col")


def pixels_path(features_path: Union[str, Path]) -> Path:
    """Return ``<stem>.pixels.csv`` next to a feature file."""
    p = Path(features_path)
    return p.parent / f"{p.stem}{PIXELS_SUFFIX}"


def save_features(features: FeatureSet, path: Union[str, Path]) -> Path:
    """
    Write the coordinates and the pixel sidecar of a feature set.

    The manifest is left to the caller, which knows the run parameters.

    Parameters
    ----------
    features : :class:`~SPD_Kmeans.SPD_utils.src.features.build.FeatureSet`
    path : :class:`str` or :class:`pathlib.Path`
        TensorFile destination.

    Returns
    -------
    :class:`pathlib.Path`
        The sidecar path.
    """
    write_tensor(path, features.coords)
    return write_csv(features.pixel_frame(), pixels_path(path))


def load_features(path: Union[str, Path]) -> FeatureSet:
    """
    Read a feature file and whatever sidecars exist.

    Parameters
    ----------
    path : :class:`str` or :class:`pathlib.Path`
        2-D TensorFile of embedded points.

    Returns
    -------
    :class:`~SPD_Kmeans.SPD_utils.src.features.build.FeatureSet`

    Raises
    ------
    TensorFormatError
        If the file is not a 2-D TensorFile.
    DimensionMismatch
        If the column count is not of the form ``m(m+1)/2``.
    LengthMismatch
        If the pixel sidecar does not have one row per point.
    """
    path = Path(path)
    coords = read_tensor(path)
    if coords.ndim != 2:
        raise TensorFormatError(f"{path}: feature file must be 2-D, got {coords.ndim} dimensions")
    m = matrix_dim_from_embedding(coords.shape[1])
    n = coords.shape[0]

    sidecar = pixels_path(path)
    if sidecar.is_file():
        frame = read_csv(sidecar, required=PIXEL_COLUMNS).sort_values("point_index")
        if len(frame) != n:
            raise LengthMismatch(f"{sidecar} has {len(frame)} rows for {n} feature points")
        pixel_index = frame[["row", "col"]].to_numpy(dtype=np.int64)
    else:
        logger.warning("No pixel sidecar %s; pixel coordinates are reported as -1.", sidecar)
        pixel_index = np.full((n, 2), -1, dtype=np.int64)

    grid_dims, band = (-1, -1), path.stem
    mpath = manifest_path(path)
    if mpath.is_file():
        extra = RunManifest.read(mpath).extra or {}
        grid_dims = tuple(extra.get("grid_dims", grid_dims))
        band = extra.get("band", band)

    logger.info("Loaded %d feature points (m=%d) from %s.", n, m, path)
    return FeatureSet(m=m, coords=coords, pixel_index=pixel_index, grid_dims=grid_dims, band_name=band)
