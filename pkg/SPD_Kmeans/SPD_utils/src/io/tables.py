# SPD_Kmeans/SPD_utils/src/io/tables.py

"""
CSV tables written and read by the command line.

Every CSV goes through :func:`write_csv`, which fixes the float format at 17
significant digits (lossless for ``float64``), the line terminator at ``\\n``
and drops the index, so identical frames always produce identical bytes.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Union

import pandas as pd

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.spd.errors import TableFormatError

logger = get_logger(__name__)

FLOAT_FORMAT = "%.17g"


def write_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """
    Write a table deterministically.

    Parameters
    ----------
    frame : :class:`pandas.DataFrame`
        Table to write; column order is preserved.
    path : :class:`str` or :class:`pathlib.Path`
        Destination; parent directories are created.

    Returns
    -------
    :class:`pathlib.Path`
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    logger.debug("Wrote %d rows to %s.", len(frame), path)
    return path


def read_csv(path: Union[str, Path], required: Iterable[str] = ()) -> pd.DataFrame:
    """
    Read a table and check that it has the expected columns.

    Parameters
    ----------
    path : :class:`str` or :class:`pathlib.Path`
        CSV file.
    required : iterable of :class:`str`, optional
        Column names that must be present.

    Returns
    -------
    :class:`pandas.DataFrame`

    Raises
    ------
    TableFormatError
        If the file is missing, unparsable, or lacks a required column.
    """
    path = Path(path)
    if not path.is_file():
        raise TableFormatError(f"{path}: no such table")
    try:
        frame = pd.read_csv(path)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as exc:
        raise TableFormatError(f"{path}: cannot parse CSV ({exc})") from exc
    missing = [c for c in required if c not in frame.columns]
    if missing:
        raise TableFormatError(f"{path}: missing column(s) {', '.join(missing)}")
    return frame
