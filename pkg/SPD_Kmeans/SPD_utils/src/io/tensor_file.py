# SPD_Kmeans/SPD_utils/src/io/tensor_file.py

"""
TensorFile: a minimal bit-exact binary array format.

Layout (all integers little-endian)::

    offset  size        field
    0       4           magic  b"SPDK"
    4       4           version  uint32  (= 1)
    8       4           ndim     uint32
    12      8·ndim      dims     uint64 each
    ...     8·∏dims     payload  float64 LE, row-major (last index fastest)

NaN in the payload marks nodata. Nothing else is stored, so writing then
reading returns the same dims and the same payload bytes.

Constants
---------
:data:`MAGIC`
    File signature.
:data:`VERSION`
    Supported format version.

Functions
---------
:func:`read_tensor`, :func:`write_tensor`
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Union

import numpy as np
from numpy.typing import ArrayLike

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.spd.errors import TensorFormatError

logger = get_logger(__name__)

MAGIC = b"SPDK"
VERSION = 1

_U32 = np.dtype("<u4")
_U64 = np.dtype("<u8")
_F64 = np.dtype("<f8")


def read_tensor(path: Union[str, Path]) -> np.ndarray:
    """
    Read a TensorFile.

    Parameters
    ----------
    path : :class:`str` or :class:`pathlib.Path`
        File to read.

    Returns
    -------
    :class:`numpy.ndarray`
        Native-endian ``float64`` array with the stored dims.

    Raises
    ------
    TensorFormatError
        If the magic, the version or the payload size is wrong.
    FileNotFoundError
        If ``path`` does not exist.
    """
    path = Path(path)
    data = path.read_bytes()

    if len(data) < 12 or data[:4] != MAGIC:
        raise TensorFormatError(f"{path}: not a TensorFile (bad magic)")
    version, ndim = (int(v) for v in np.frombuffer(data, dtype=_U32, count=2, offset=4))
    if version != VERSION:
        raise TensorFormatError(f"{path}: unsupported TensorFile version {version}, expected {VERSION}")

    header = 12 + 8 * ndim
    if len(data) < header:
        raise TensorFormatError(f"{path}: truncated header for ndim={ndim}")
    dims = tuple(int(d) for d in np.frombuffer(data, dtype=_U64, count=ndim, offset=12))

    expected = 8 * math.prod(dims)
    if len(data) - header != expected:
        raise TensorFormatError(
            f"{path}: payload is {len(data) - header} bytes, dims {dims} require {expected}"
        )

    arr = np.frombuffer(data, dtype=_F64, offset=header).reshape(dims).astype(np.float64)
    logger.debug("Read TensorFile %s with dims %s.", path, dims)
    return arr


def write_tensor(path: Union[str, Path], array: ArrayLike) -> Path:
    """
    Write an array as a TensorFile.

    Parameters
    ----------
    path : :class:`str` or :class:`pathlib.Path`
        Destination; parent directories are created.
    array : array-like
        Values to store, converted to ``float64``.

    Returns
    -------
    :class:`pathlib.Path`
        The written path.
    """
    path = Path(path)
    arr = np.ascontiguousarray(np.asarray(array, dtype=np.float64))
    header = MAGIC + np.array([VERSION, arr.ndim], dtype=_U32).tobytes() + np.array(arr.shape, dtype=_U64).tobytes()

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(header + arr.astype(_F64, copy=False).tobytes(order="C"))
    logger.debug("Wrote TensorFile %s with dims %s.", path, arr.shape)
    return path
