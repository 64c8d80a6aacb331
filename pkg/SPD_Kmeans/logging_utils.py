"""
Logging Utilities
=================

Package loggers live under the ``SPD_Kmeans`` namespace and carry only a
:class:`logging.NullHandler` until an entry point opts in. Library modules get
their logger from :func:`get_logger` and never attach handlers; the CLI
resolves the threshold from ``--log-level``/``--verbose`` with
:func:`resolve_level` and installs one stderr handler with
:func:`configure_logging`.

Log lines go to stderr only, so command results on stdout stay machine
readable.

Functions
---------
:func:`get_logger`
    Logger in the package namespace.
:func:`resolve_level`
    Threshold from the CLI flags.
:func:`configure_logging`
    Install the stderr handler.
:func:`log_invocation`
    One INFO line with the parameters of a command run.
"""

from __future__ import annotations

import logging
from typing import Any, Mapping, Optional

PACKAGE_LOGGER_NAME = "SPD_Kmeans"
DEFAULT_LOG_FORMAT = "%(levelname)s:%(name)s:%(message)s"
DEFAULT_LEVEL = logging.WARNING

logging.getLogger(PACKAGE_LOGGER_NAME).addHandler(logging.NullHandler())


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Return a logger in the package namespace.

    Parameters
    ----------
    name : :class:`str`, optional
        Module name, usually ``__name__``. Names outside the namespace are
        appended to it.

    Returns
    -------
    :class:`logging.Logger`
    """
    if not name:
        return logging.getLogger(PACKAGE_LOGGER_NAME)
    if name == PACKAGE_LOGGER_NAME or name.startswith(f"{PACKAGE_LOGGER_NAME}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{PACKAGE_LOGGER_NAME}.{name}")


def _level_number(level: int | str) -> int:
    if isinstance(level, int):
        return level
    number = logging.getLevelName(str(level).upper())
    if not isinstance(number, int):
        raise ValueError(f"Unknown logging level: {level!r}")
    return number


def resolve_level(log_level: Optional[str] = None, verbose: bool = False) -> int:
    """
    Threshold for a CLI run.

    An explicit ``--log-level`` wins. Otherwise ``--verbose`` means INFO and
    the default is WARNING, which keeps warnings such as dropped constant
    series or duplicate centroids visible.

    Parameters
    ----------
    log_level : :class:`str`, optional
        Level name from ``--log-level``.
    verbose : :class:`bool`, optional
        Value of a command's ``--verbose`` flag.

    Returns
    -------
    :class:`int`

    Raises
    ------
    ValueError
        If ``log_level`` does not name a logging level.
    """
    if log_level:
        return _level_number(log_level)
    return logging.INFO if verbose else DEFAULT_LEVEL


def configure_logging(
    level: int | str = DEFAULT_LEVEL,
    *,
    force: bool = False,
    fmt: str = DEFAULT_LOG_FORMAT,
) -> logging.Logger:
    """
    Send package logs to stderr at ``level``.

    Calling it again only changes the level, unless ``force`` replaces the
    handlers. The package logger stops propagating so records are not printed
    twice by a configured root logger.

    Parameters
    ----------
    level : :class:`int` or :class:`str`, optional
        Threshold. Defaults to WARNING.
    force : :class:`bool`, optional
        Drop existing package handlers first.
    fmt : :class:`str`, optional
        Record format.

    Returns
    -------
    :class:`logging.Logger`
        The package logger.

    Raises
    ------
    ValueError
        If ``level`` is a string that does not name a logging level.
    """
    level = _level_number(level)
    logger = logging.getLogger(PACKAGE_LOGGER_NAME)

    if force:
        logger.handlers.clear()
    if not any(isinstance(h, logging.StreamHandler) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(fmt))
        logger.addHandler(handler)

    logger.setLevel(level)
    logger.propagate = False
    return logger


def log_invocation(command: str, params: Mapping[str, Any]) -> None:
    """
    Log ``<command>: key=value, ...`` at INFO, keys sorted.

    Parameters
    ----------
    command : :class:`str`
        Command name.
    params : mapping
        Parameters of the run, as recorded in its manifest.
    """
    text = ", ".join(f"{key}={params[key]}" for key in sorted(params))
    get_logger(f"commands.{command}").info("%s: %s", command, text)
