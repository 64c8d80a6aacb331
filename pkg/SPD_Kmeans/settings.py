# SPD_Kmeans/settings.py

"""
Environment Configuration and Variable Management
=================================================

This module centralizes environment-driven configuration used across
SPD_Kmeans. Values are read from ``os.environ`` (optionally via a ``.env``
file loaded with :func:`dotenv.load_dotenv`) through small :class:`.EnvVar`
descriptors, and are always read lazily so tests can override them with
``monkeypatch.setenv``.

None of these settings change numerical results: they only control how
independent work (k-means restarts) is scheduled and which base seed is used
when a command is not given ``--seed``.

Constants
---------
EXECUTOR : :class:`.EnvVar`
    ``SPD_KMEANS_EXECUTOR``: ``"serial"``, ``"thread"`` or ``"process"``
    (default: ``"thread"``).
MAX_WORKERS : :class:`.EnvVar`
    ``SPD_KMEANS_MAX_WORKERS``: upper bound on pool workers (default: ``8``).
DEFAULT_SEED : :class:`.EnvVar`
    ``SPD_KMEANS_SEED``: base seed used when none is given (default: ``0``).
REFERENCE_DATA : :class:`.EnvVar`
    ``SPD_KMEANS_REFERENCE_DATA``: optional directory holding the reference
    scene rasters, used only by the data-dependent test suite.

Functions
---------
:func:`executor_mode`
    Resolve the validated executor mode.
:func:`max_workers`
    Resolve the bounded worker count for a number of tasks.
:func:`default_seed`
    Resolve the base seed.

Classes
-------
:class:`EnvVar`
    Representation of a named environment variable with an optional default.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any, Optional

from dotenv import load_dotenv

from SPD_Kmeans.logging_utils import get_logger

logger = get_logger(__name__)


load_dotenv()


@dataclass
class EnvVar:
    """
    Representation of an environment variable with an optional default value.

    Attributes
    ----------
    name : :class:`str`
        Name of the environment variable.
    default : :class:`object`, optional
        Default value used when the environment variable is not present.
        Defaults to ``None``.
    """

    name: str
    default: Optional[Any] = None

    def get(self) -> Optional[Any]:
        """
        Retrieve the environment variable value or its default.

        If the variable exists in the environment and is a string, leading and
        trailing whitespace are stripped. If the resulting string is empty, the
        value is treated as missing and ``None`` is returned.

        Returns
        -------
        :class:`object`, optional
            The value of the environment variable, the configured default, or
            ``None`` if the variable is unset (or set to an empty string).
        """
        val: Any = os.environ.get(self.name, self.default)
        if isinstance(val, str):
            val = val.strip()
            if val == "":
                return None
        return val


EXECUTOR = EnvVar("SPD_KMEANS_EXECUTOR", "thread")
MAX_WORKERS = EnvVar("SPD_KMEANS_MAX_WORKERS", 8)
DEFAULT_SEED = EnvVar("SPD_KMEANS_SEED", 0)
REFERENCE_DATA = EnvVar("SPD_KMEANS_REFERENCE_DATA")

_EXECUTOR_MODES = ("serial", "thread", "process")


def executor_mode() -> str:
    """
    Resolve the executor mode used for independent k-means restarts.

    Returns
    -------
    :class:`str`
        One of ``"serial"``, ``"thread"`` or ``"process"``. Unknown values fall
        back to ``"thread"`` with a warning.
    """
    requested = str(EXECUTOR.get() or "thread").lower()
    if requested not in _EXECUTOR_MODES:
        logger.warning(
            "Ignoring %s=%r; expected one of %s.", EXECUTOR.name, requested, ", ".join(_EXECUTOR_MODES)
        )
        return "thread"
    return requested


def max_workers(n_tasks: int) -> int:
    """
    Return a bounded worker count for ``n_tasks`` independent tasks.

    Parameters
    ----------
    n_tasks : :class:`int`
        Number of tasks that will be submitted.

    Returns
    -------
    :class:`int`
        At least one worker, at most ``SPD_KMEANS_MAX_WORKERS``, capped by the
        number of tasks.
    """
    try:
        cap = int(MAX_WORKERS.get() or 1)
    except (TypeError, ValueError):
        logger.warning("Ignoring non-integer %s.", MAX_WORKERS.name)
        cap = 8
    return max(1, min(cap, n_tasks or 1))


def default_seed() -> int:
    """
    Return the base seed used when a command is not given ``--seed``.

    Returns
    -------
    :class:`int`
        The value of ``SPD_KMEANS_SEED`` (default ``0``).

    Raises
    ------
    ValueError
        If ``SPD_KMEANS_SEED`` is set to a non-integer value.
    """
    raw = DEFAULT_SEED.get()
    try:
        return int(raw if raw is not None else 0)
    except ValueError as exc:
        raise ValueError(f"{DEFAULT_SEED.name} must be an integer, got {raw!r}") from exc
