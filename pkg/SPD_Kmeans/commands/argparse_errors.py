# SPD_Kmeans/commands/argparse_errors.py

"""
CLI Parse Error Models
======================

Typed representation of argument-parsing outcomes that would otherwise end
the process through :class:`SystemExit`. :func:`SPD_Kmeans.cli.main` catches
them and turns them into an exit code, so the CLI can be driven from tests
and scripts without trapping ``SystemExit``.

Classes
-------
:class:`.ParseErrorKind`
    Broad category of a parse failure.
:class:`.CliParseError`
    Exception carrying the category, message, requested status and context.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence


class ParseErrorKind(str, Enum):
    """
    Classification of parse outcomes.

    Attributes
    ----------
    MISSING_REQUIRED : :class:`str`
        A required argument was not provided.
    UNKNOWN_ARGS : :class:`str`
        Unrecognized tokens were given.
    INVALID_VALUE : :class:`str`
        A value failed its ``type`` conversion or ``choices`` check.
    EXIT : :class:`str`
        Argparse asked to exit after ``--help`` or ``--version``.
    OTHER : :class:`str`
        Any other failure.
    """

    MISSING_REQUIRED = "missing_required"
    UNKNOWN_ARGS = "unknown_args"
    INVALID_VALUE = "invalid_value"
    EXIT = "exit"
    OTHER = "other"


@dataclass
class CliParseError(Exception):
    """
    Raised instead of exiting when argument parsing ends early.

    Attributes
    ----------
    kind : :class:`.ParseErrorKind`
        Classification of the outcome.
    message : :class:`str`
        Argparse message (empty after ``--help``).
    status : :class:`int`
        Exit status argparse requested: 0 after ``--help``/``--version``,
        2 for usage errors.
    argv : sequence of :class:`str`, optional
        Argument vector that was parsed.
    cmd_tokens : sequence of :class:`str`, optional
        Leading command tokens of ``argv`` (e.g. ``("cluster",)``).
    """

    kind: ParseErrorKind
    message: str
    status: int = 2
    argv: Optional[Sequence[str]] = None
    cmd_tokens: Optional[Sequence[str]] = None

    def __str__(self) -> str:
        return self.message
