# SPD_Kmeans/commands/parser_builder.py

"""
CLI Parser Construction Utilities
=================================

Builds the :mod:`argparse` command tree from the declarative :data:`PARSER`
and :data:`COMMAND` specifications. Each leaf command's handler is wrapped by
:func:`~SPD_Kmeans.commands.result_bridge.wrap_handler_for_exit_code` and
attached with ``set_defaults(handler=...)``.

Functions
---------
:func:`register_simple_subcommand`
    Register one leaf command on a subparser group.
:func:`build_subparser`
    Attach the command group of a package.
"""

from __future__ import annotations

import argparse
from typing import Any

from SPD_Kmeans.commands.result_bridge import wrap_handler_for_exit_code


def register_simple_subcommand(subparsers: argparse._SubParsersAction, cmd: Any) -> argparse.ArgumentParser:
    """
    Add the parser of one command to a subparser group.

    Parameters
    ----------
    subparsers : :class:`argparse._SubParsersAction`
        Group to extend.
    cmd : :class:`object`
        Module exposing :data:`COMMAND` and, optionally, ``cli_handler``.

    Returns
    -------
    :class:`argparse.ArgumentParser`
        The new command parser.

    Raises
    ------
    AttributeError
        If ``cmd`` has no :data:`COMMAND`.
    """
    spec = cmd.COMMAND
    parser = subparsers.add_parser(
        spec.name,
        help=spec.help,
        description=spec.description or spec.help,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )

    for entry in spec.args:
        kwargs = {k: v for k, v in entry.items() if k != "flags"}
        parser.add_argument(*entry.get("flags", ()), **kwargs)

    if hasattr(cmd, "cli_handler"):
        parser.set_defaults(handler=wrap_handler_for_exit_code(cmd))
    return parser


def build_subparser(parser: argparse.ArgumentParser, package) -> argparse.ArgumentParser:
    """
    Attach the command group described by ``package.PARSER`` to ``parser``.

    Subparsers are created with ``parser_class=parser.__class__`` so they share
    the error handling of a
    :class:`~SPD_Kmeans.commands.smart_parser.SmartArgumentParser` root.

    Parameters
    ----------
    parser : :class:`argparse.ArgumentParser`
        Parser to extend.
    package : :class:`object`
        Package exposing :data:`PARSER`.

    Returns
    -------
    :class:`argparse.ArgumentParser`
        ``parser``, for chaining.
    """
    subparsers = parser.add_subparsers(
        dest=package.PARSER.dest,
        help=package.PARSER.help,
        parser_class=parser.__class__,
    )

    for cmd in package.PARSER.args.get("commands", ()):
        register_simple_subcommand(subparsers, cmd)

    return parser
