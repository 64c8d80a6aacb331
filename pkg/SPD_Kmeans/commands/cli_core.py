# SPD_Kmeans/commands/cli_core.py

"""
Command-Line Interface Core
===========================

One import point for what command modules and the CLI driver need from the
infrastructure modules:

- :mod:`SPD_Kmeans.commands.specs`
- :mod:`SPD_Kmeans.commands.inputs`
- :mod:`SPD_Kmeans.commands.result_bridge`
- :mod:`SPD_Kmeans.commands.parser_builder`
"""

from __future__ import annotations

from SPD_Kmeans.commands.specs import CommandSpec, ParserSpec
from SPD_Kmeans.commands.inputs import (
    command_params,
    existing_file,
    int_list,
    named_path,
    named_paths,
    resolve_seed,
    sibling_path,
)
from SPD_Kmeans.commands.result_bridge import report_error, wrap_handler_for_exit_code
from SPD_Kmeans.commands.parser_builder import build_subparser, register_simple_subcommand

__all__ = [
    "ParserSpec",
    "CommandSpec",
    "command_params",
    "existing_file",
    "int_list",
    "named_path",
    "named_paths",
    "resolve_seed",
    "sibling_path",
    "report_error",
    "wrap_handler_for_exit_code",
    "build_subparser",
    "register_simple_subcommand",
]
