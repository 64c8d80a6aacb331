# SPD_Kmeans/commands/specs.py

"""
Declarative CLI Specification Models
====================================

Dataclasses that describe the SPD_Kmeans command tree. Command modules declare
their flags once in a :class:`CommandSpec`; :mod:`.parser_builder` turns the
specs into :mod:`argparse` parsers.

Classes
-------
:class:`ParserSpec`
    A group of subcommands.
:class:`CommandSpec`
    A single command and its argument definitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ParserSpec:
    """
    Declarative specification for a subparser group.

    Attributes
    ----------
    dest : :class:`str`
        Namespace attribute that receives the chosen command name.
    help : :class:`str`
        Help string of the group.
    args : :class:`dict`
        Group configuration. ``"commands"`` lists command modules exposing
        :data:`COMMAND` and ``cli_handler``.
    """

    dest: str
    help: str
    args: dict


@dataclass
class CommandSpec:
    """
    Declarative specification for a single CLI command.

    Attributes
    ----------
    name : :class:`str`
        Command name as typed on the command line.
    help : :class:`str`
        One-line help.
    args : :class:`list` of :class:`dict`
        Keyword dictionaries for :meth:`argparse.ArgumentParser.add_argument`;
        the ``"flags"`` entry holds the positional name or option strings.
    description : :class:`str`, optional
        Longer text shown by ``<command> --help``.
    """

    name: str
    help: str
    args: list
    description: str = field(default="")
