# SPD_Kmeans/commands/inputs.py

"""
CLI Input Parsing Helpers
=========================

``type=`` converters for the flags shared by several commands, plus small
helpers that resolve paths, seeds and manifest parameters. Converters raise
:class:`argparse.ArgumentTypeError`, which the parser reports as a usage
error (exit code 2).

Functions
---------
:func:`existing_file`
    Path of an existing file.
:func:`int_list`
    Comma-separated integers, e.g. ``1,2,4``.
:func:`named_path`
    ``NAME=FILE`` pair.
:func:`named_paths`
    Comma-separated ``NAME=FILE`` pairs.
:func:`resolve_seed`
    ``--seed`` value or the configured default seed.
:func:`command_params`
    Resolved parameters of a namespace, for the run manifest.
:func:`sibling_path`
    ``<stem><suffix>`` next to an output file.
"""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Optional

from SPD_Kmeans import settings
from SPD_Kmeans.SPD_utils.src.spd.errors import InvalidParameter

_NOT_PARAMS = ("handler", "command", "log_level", "verbose")


def existing_file(token: str) -> Path:
    """Return ``token`` as a :class:`pathlib.Path` if it names an existing file."""
    p = Path(token).expanduser()
    if not p.is_file():
        raise argparse.ArgumentTypeError(f"no such file: {token!r}")
    return p


def int_list(token: str) -> list[int]:
    """
    Parse ``"1,2,4"`` into ``[1, 2, 4]``.

    Raises
    ------
    argparse.ArgumentTypeError
        If the list is empty or an item is not an integer.
    """
    items = [t.strip() for t in token.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers")
    try:
        return [int(t) for t in items]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected integers, got {token!r}") from exc


def named_path(token: str) -> tuple[str, Path]:
    """
    Parse ``NAME=FILE`` into ``(NAME, Path(FILE))``.

    The file must exist.
    """
    name, sep, path = token.partition("=")
    name, path = name.strip(), path.strip()
    if not sep or not name or not path:
        raise argparse.ArgumentTypeError(f"expected NAME=FILE, got {token!r}")
    return name, existing_file(path)


def named_paths(token: str) -> dict[str, Path]:
    """Parse ``"CC=cc.spdk,VH=vh.spdk"`` into a name → path mapping."""
    out: dict[str, Path] = {}
    for item in token.split(","):
        if item.strip():
            name, path = named_path(item)
            out[name] = path
    if not out:
        raise argparse.ArgumentTypeError(f"expected NAME=FILE pairs, got {token!r}")
    return out


def resolve_seed(seed: Optional[int]) -> int:
    """
    Return ``seed``, or ``SPD_KMEANS_SEED`` when it is ``None``.

    Raises
    ------
    InvalidParameter
        If the environment value is not an integer.
    """
    if seed is not None:
        return seed
    try:
        return settings.default_seed()
    except ValueError as exc:
        raise InvalidParameter(str(exc)) from exc


def command_params(args: argparse.Namespace, **overrides) -> dict:
    """Namespace entries that define the run, with ``overrides`` applied."""
    params = {k: v for k, v in vars(args).items() if k not in _NOT_PARAMS}
    params.update(overrides)
    return params


def sibling_path(output: Path, suffix: str) -> Path:
    """Return ``<stem><suffix>`` in the directory of ``output``."""
    output = Path(output)
    return output.parent / f"{output.stem}{suffix}"
