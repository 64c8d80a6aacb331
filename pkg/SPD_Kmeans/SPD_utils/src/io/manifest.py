# SPD_Kmeans/SPD_utils/src/io/manifest.py

"""
Run manifests.

Every command writes ``<output name>.manifest.yaml`` next to its primary
output, keeping the extension so ``labels.csv`` and ``labels.spdk`` in one
directory get separate manifests. The manifest records the command, every resolved parameter, the base
seed, the sha256 digest of every input file, the package version and the run
timestamps. Given the same inputs and the same installed version, the
parameters and seed reproduce every output byte; the timestamps are the only
fields that change between runs.
"""

from __future__ import annotations

import hashlib
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Mapping, Optional, Union

import numpy as np
import yaml

from SPD_Kmeans._version import __version__
from SPD_Kmeans.logging_utils import get_logger

logger = get_logger(__name__)

MANIFEST_SUFFIX = ".manifest.yaml"


def file_sha256(path: Union[str, Path]) -> str:
    """
    Hex sha256 digest of a file, read in chunks.

    Parameters
    ----------
    path : :class:`str` or :class:`pathlib.Path`

    Returns
    -------
    :class:`str`
    """
    hasher = hashlib.sha256()
    with open(path, "rb") as f:
        while chunk := f.read(1 << 16):
            hasher.update(chunk)
    return hasher.hexdigest()


def manifest_path(output: Union[str, Path]) -> Path:
    """Return ``<output name>.manifest.yaml`` in the directory of ``output``."""
    output = Path(output)
    return output.parent / f"{output.name}{MANIFEST_SUFFIX}"


def _plain(value: Any) -> Any:
    """Convert paths, tuples and numpy scalars into YAML-safe builtins."""
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class RunManifest:
    """
    Provenance record of one command invocation.

    Attributes
    ----------
    command : :class:`str`
        Command name.
    params : :class:`dict`
        Every resolved parameter, defaults included.
    seed : :class:`int` or None
        Base seed, for commands that draw random numbers.
    inputs : :class:`dict`
        Input path → sha256 digest.
    version : :class:`str`
        Installed package version.
    started : :class:`str`
        UTC start time (ISO 8601).
    finished : :class:`str`
        UTC end time (ISO 8601), set by :meth:`write`.
    extra : :class:`dict`
        Command-specific facts about the outputs (grid size, point count...).
    """

    command: str
    params: dict
    seed: Optional[int] = None
    inputs: dict = field(default_factory=dict)
    version: str = __version__
    started: str = field(default_factory=_now)
    finished: str = ""
    extra: dict = field(default_factory=dict)

    @classmethod
    def collect(
        cls,
        command: str,
        params: Mapping[str, Any],
        inputs: Mapping[str, Union[str, Path]],
        seed: Optional[int] = None,
    ) -> "RunManifest":
        """
        Start a manifest, hashing every input file.

        Parameters
        ----------
        command : :class:`str`
            Command name.
        params : mapping
            Resolved parameters.
        inputs : mapping
            Role → input path (e.g. ``{"band": "cc.spdk"}``).
        seed : :class:`int`, optional
            Base seed.

        Returns
        -------
        :class:`RunManifest`
        """
        digests = {role: {"path": str(p), "sha256": file_sha256(p)} for role, p in inputs.items()}
        return cls(command=command, params=_plain(dict(params)), seed=seed, inputs=digests)

    def write(self, output: Union[str, Path]) -> Path:
        """
        Write the manifest next to ``output``.

        Parameters
        ----------
        output : :class:`str` or :class:`pathlib.Path`
            Primary output of the command.

        Returns
        -------
        :class:`pathlib.Path`
            The manifest path.
        """
        self.finished = _now()
        path = manifest_path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            yaml.safe_dump(_plain(asdict(self)), f, sort_keys=True, default_flow_style=False)
        logger.info("Wrote run manifest %s.", path)
        return path

    @classmethod
    def read(cls, path: Union[str, Path]) -> "RunManifest":
        """Load a manifest written by :meth:`write`."""
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
        return cls(**{k: raw[k] for k in raw if k in cls.__dataclass_fields__})
