# SPD_Kmeans/cli.py

"""
Entry Point for the SPD_Kmeans Command-Line Interface
=====================================================

:func:`main` is used by ``python -m SPD_Kmeans`` and by the installed console
scripts. The command tree is not written out here: it is built from the
declarative registry in :mod:`SPD_Kmeans.commands` by
:func:`~SPD_Kmeans.commands.parser_builder.build_subparser`.

Workflow
--------
1. Record ``argv`` for parse-error reports.
2. Build the root :class:`~SPD_Kmeans.commands.smart_parser.SmartArgumentParser`
   with the global flags and attach the commands.
3. Parse. A :class:`~SPD_Kmeans.commands.argparse_errors.CliParseError` prints
   usage and the error and returns 2; after ``--help`` or ``--version`` it
   returns 0.
4. Configure logging (``--log-level`` wins over ``--verbose``), then
   dispatch to the command handler, which returns the exit code (see
   :mod:`SPD_Kmeans.commands.result_bridge`).
5. Without a command, print help and return 0.

Available Commands
------------------
- ``features`` (:mod:`SPD_Kmeans.commands.features`)
- ``cluster`` (:mod:`SPD_Kmeans.commands.cluster`)
- ``select_k`` (:mod:`SPD_Kmeans.commands.select_k`)
- ``sweep`` (:mod:`SPD_Kmeans.commands.sweep`)
- ``report`` (:mod:`SPD_Kmeans.commands.report`)
"""

from __future__ import annotations

import sys
from typing import List, Optional

from SPD_Kmeans import commands
from SPD_Kmeans._version import __version__
from SPD_Kmeans.commands import cli_core
from SPD_Kmeans.commands.argparse_errors import CliParseError
from SPD_Kmeans.commands.smart_parser import SmartArgumentParser, set_current_argv
from SPD_Kmeans.logging_utils import configure_logging, get_logger, resolve_level

logger = get_logger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def build_parser(argv: Optional[List[str]] = None) -> SmartArgumentParser:
    """
    Build the full command parser.

    Parameters
    ----------
    argv : :class:`list` of :class:`str`, optional
        Argument vector reported with parse errors.

    Returns
    -------
    :class:`~SPD_Kmeans.commands.smart_parser.SmartArgumentParser`
    """
    parser = SmartArgumentParser(
        prog="SPD_Kmeans",
        description="k-means of SPD matrices under the log-Cholesky metric.",
        argv=argv,
    )
    parser.add_argument("--version", action="version", version=f"SPD_Kmeans {__version__}")
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default=None,
        help="Package logging threshold on stderr (default: WARNING).",
    )
    return cli_core.build_subparser(parser, commands)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the SPD_Kmeans command-line interface.

    Parameters
    ----------
    argv : :class:`list` of :class:`str`, optional
        Arguments to parse instead of ``sys.argv[1:]``.

    Returns
    -------
    :class:`int`
        Exit code: 0 on success, 2 for malformed input or usage errors, 3 for
        invalid configurations, 4 for infeasible clusterings.
    """
    actual_argv: List[str] = sys.argv[1:] if argv is None else list(argv)
    set_current_argv(actual_argv)
    parser = build_parser(actual_argv)

    try:
        args = parser.parse_args(actual_argv)
    except CliParseError as e:
        if e.status == 0:
            return 0
        logger.debug("Parse error (%s) for %s", e.kind.value, e.cmd_tokens)
        parser.print_usage(sys.stderr)
        if e.message:
            print(f"{parser.prog}: error: {e.message}", file=sys.stderr)
        return e.status

    configure_logging(resolve_level(args.log_level, getattr(args, "verbose", False)))

    if not hasattr(args, "handler"):
        parser.print_help()
        return 0

    return args.handler(args)
