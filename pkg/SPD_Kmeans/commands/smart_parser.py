# SPD_Kmeans/commands/smart_parser.py

"""
Argparse Wrapper with Classified Parse Errors
=============================================

:class:`SmartArgumentParser` raises
:class:`~SPD_Kmeans.commands.argparse_errors.CliParseError` where argparse
would call ``sys.exit``. Subparsers inherit the class through
:func:`~SPD_Kmeans.commands.parser_builder.build_subparser`, so every command
reports failures the same way.

It also rewrites ``--opt -1`` as ``--opt=-1`` before parsing, so negative
numbers reach the command (and its range checks) instead of being taken for
an unknown option.

Functions
---------
:func:`.set_current_argv`
    Record the argument vector for error reports raised by subparsers.
:func:`.normalize_negative_option_values`
    Attach negative numeric values to the option before them.

Classes
-------
:class:`.SmartArgumentParser`
    :class:`argparse.ArgumentParser` that raises instead of exiting.
"""

from __future__ import annotations

import argparse
from typing import Optional, Sequence

from SPD_Kmeans.commands.argparse_errors import CliParseError, ParseErrorKind

_CURRENT_ARGV: list[str] = []


def set_current_argv(argv: Sequence[str]) -> None:
    """Store the argument vector of the current invocation."""
    global _CURRENT_ARGV
    _CURRENT_ARGV = list(argv)


def _guess_cmd_tokens(argv: Sequence[str]) -> list[str]:
    """Leading tokens of ``argv`` up to the first option."""
    toks: list[str] = []
    for t in argv:
        if t.startswith("-"):
            break
        toks.append(t)
    return toks


def _looks_like_negative_number(token: str) -> bool:
    if not token.startswith("-") or token.startswith("--"):
        return False
    body = token[1:]
    return bool(body) and (body[0].isdigit() or body[0] == ".")


def _collect_option_actions(parser: argparse.ArgumentParser) -> dict[str, argparse.Action]:
    """Option string → action over the whole parser tree."""
    option_actions: dict[str, argparse.Action] = {}
    for action in parser._actions:
        for option_string in action.option_strings:
            option_actions[option_string] = action
        if isinstance(action, argparse._SubParsersAction):
            for subparser in action.choices.values():
                option_actions.update(_collect_option_actions(subparser))
    return option_actions


def normalize_negative_option_values(parser: argparse.ArgumentParser, argv: Sequence[str]) -> list[str]:
    """
    Rewrite ``--opt -3`` as ``--opt=-3`` for single-valued options.

    Parameters
    ----------
    parser : :class:`argparse.ArgumentParser`
        Root parser; options of every subcommand are considered.
    argv : sequence of :class:`str`
        Raw argument vector.

    Returns
    -------
    :class:`list` of :class:`str`
    """
    option_actions = _collect_option_actions(parser)
    raw = list(argv)
    out: list[str] = []
    i = 0
    while i < len(raw):
        token = raw[i]
        action = option_actions.get(token) if token.startswith("--") and "=" not in token else None
        nxt = raw[i + 1] if i + 1 < len(raw) else None
        if action is not None and action.nargs in (None, "?", 1) and nxt is not None and _looks_like_negative_number(nxt):
            out.append(f"{token}={nxt}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def _classify(message: str) -> ParseErrorKind:
    msg = (message or "").lower()
    if "the following arguments are required" in msg:
        return ParseErrorKind.MISSING_REQUIRED
    if "unrecognized arguments:" in msg:
        return ParseErrorKind.UNKNOWN_ARGS
    if "invalid" in msg and ("value" in msg or "choice" in msg):
        return ParseErrorKind.INVALID_VALUE
    return ParseErrorKind.OTHER


class SmartArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that raises :class:`CliParseError` instead of exiting.

    Parameters
    ----------
    *args, **kwargs
        Forwarded to :class:`argparse.ArgumentParser`.
    argv : sequence of :class:`str`, optional
        Argument vector reported with errors; defaults to the one recorded by
        :func:`set_current_argv`.
    """

    def __init__(self, *args, argv: Optional[Sequence[str]] = None, **kwargs):
        super().__init__(*args, **kwargs)
        self._argv = list(argv) if argv is not None else None

    def _effective_argv(self) -> list[str]:
        return list(self._argv) if self._argv is not None else list(_CURRENT_ARGV)

    def parse_args(self, args=None, namespace=None):
        if args is not None:
            args = normalize_negative_option_values(self, args)
        return super().parse_args(args, namespace)

    def error(self, message: str) -> None:
        """
        Raise a classified :class:`CliParseError` with status 2.

        Raises
        ------
        CliParseError
            Always.
        """
        argv = self._effective_argv()
        raise CliParseError(
            kind=_classify(message),
            message=message,
            status=2,
            argv=tuple(argv),
            cmd_tokens=tuple(_guess_cmd_tokens(argv)),
        )

    def exit(self, status: int = 0, message: Optional[str] = None) -> None:
        """
        Raise :class:`CliParseError` carrying the requested status.

        Argparse calls this after printing ``--help`` or ``--version`` output
        (status 0).

        Raises
        ------
        CliParseError
            Always.
        """
        argv = self._effective_argv()
        raise CliParseError(
            kind=ParseErrorKind.EXIT if status == 0 else ParseErrorKind.OTHER,
            message=(message or "").strip(),
            status=status,
            argv=tuple(argv),
            cmd_tokens=tuple(_guess_cmd_tokens(argv)),
        )
