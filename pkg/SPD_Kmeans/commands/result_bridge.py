# SPD_Kmeans/commands/result_bridge.py

"""
Handler Results and Exit Codes
==============================

Command handlers do their work and return ``None``. Failures surface as
exceptions of the :class:`~SPD_Kmeans.SPD_utils.src.spd.errors.SPDKmeansError`
hierarchy, each carrying the exit code of its category:

== ======================================================
0  success
2  malformed input (bad file, shape mismatch, non-SPD data)
3  invalid configuration (lag too large, degenerate data)
4  infeasible clustering (``k > n``, no points)
== ======================================================

:func:`wrap_handler_for_exit_code` wraps ``cli_handler`` so that these
exceptions become a one-line message on stderr and an exit code.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.spd.errors import MalformedInputError, SPDKmeansError

logger = get_logger(__name__)

EXIT_OK = 0
PROG = "SPD_Kmeans"


def report_error(cmd_name: str, message: str) -> None:
    """Print ``SPD_Kmeans <cmd>: error: <message>`` on stderr."""
    print(f"{PROG} {cmd_name}: error: {message}", file=sys.stderr)


def wrap_handler_for_exit_code(cmd: Any) -> Callable[[argparse.Namespace], int]:
    """
    Wrap a command's ``cli_handler`` so it returns an exit code.

    Parameters
    ----------
    cmd : :class:`object`
        Command module exposing ``cli_handler`` and :data:`COMMAND`.

    Returns
    -------
    callable
        ``handler(args) -> int``: 0 on success, the error's ``exit_code`` for
        package errors, 2 for unreadable or missing files.
    """
    cmd_name = getattr(getattr(cmd, "COMMAND", None), "name", None) or getattr(cmd, "__name__", "command")

    def _handler(args: argparse.Namespace) -> int:
        try:
            result = cmd.cli_handler(args)
        except SPDKmeansError as exc:
            logger.debug("%s failed", cmd_name, exc_info=True)
            report_error(cmd_name, str(exc))
            return exc.exit_code
        except OSError as exc:
            logger.debug("%s failed", cmd_name, exc_info=True)
            report_error(cmd_name, str(exc))
            return MalformedInputError.exit_code
        return EXIT_OK if result is None else int(result)

    return _handler
