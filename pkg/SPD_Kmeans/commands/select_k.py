"""
CLI command that chooses the number of clusters.

``select_k`` fits k-means for every ``k`` in ``[kmin, kmax]`` and scores each
fit by its objective plus the BIC-style penalty. The report CSV has one row
per candidate (``k, objective, penalty, score, chosen``) and the winner is
printed as ``k_star=<k>``.
"""

from __future__ import annotations

import argparse

from SPD_Kmeans.commands.cli_core import CommandSpec, command_params, existing_file, resolve_seed
from SPD_Kmeans.logging_utils import log_invocation
from SPD_Kmeans.SPD_utils.src.clustering.kmeans import KmeansConfig
from SPD_Kmeans.SPD_utils.src.clustering.model_select import select_k_embedded
from SPD_Kmeans.SPD_utils.src.features.store import load_features
from SPD_Kmeans.SPD_utils.src.io.manifest import RunManifest
from SPD_Kmeans.SPD_utils.src.io.tables import write_csv
from SPD_Kmeans.SPD_utils.src.spd.errors import InvalidParameter

COMMAND = CommandSpec(
    name="select_k",
    help="Choose the number of clusters with the penalized k-means objective.",
    args=[
        {"flags": ["--features"], "type": existing_file, "required": True, "help": "Feature TensorFile."},
        {"flags": ["--kmin"], "type": int, "required": True, "help": "Smallest candidate k."},
        {"flags": ["--kmax"], "type": int, "required": True, "help": "Largest candidate k."},
        {"flags": ["--restarts"], "type": int, "default": 8, "help": "Restarts per candidate."},
        {"flags": ["--seed"], "type": int, "default": None, "help": "Base seed (default: SPD_KMEANS_SEED, else 0)."},
        {"flags": ["--max-iters"], "type": int, "default": 300, "help": "Lloyd iterations per restart."},
        {"flags": ["--rel-tol"], "type": float, "default": 1e-6, "help": "Relative objective tolerance."},
        {"flags": ["--out"], "required": True, "help": "Report CSV."},
        {"flags": ["--progress"], "action": "store_true", "help": "Show a progress bar over candidates."},
        {"flags": ["--verbose"], "action": "store_true", "help": "Enable verbose logging (INFO level)."},
    ],
)


def cli_handler(args: argparse.Namespace) -> None:
    """
    CLI handler for the ``select_k`` command.

    Parameters
    ----------
    args : :class:`argparse.Namespace`
        Parsed command-line arguments.

    Raises
    ------
    InvalidParameter
        If ``kmin < 1`` or ``kmin > kmax``.
    KExceedsN
        If ``kmax`` exceeds the number of points.
    """
    if args.kmin < 1:
        raise InvalidParameter(f"--kmin must be at least 1, got {args.kmin}")
    if args.kmin > args.kmax:
        raise InvalidParameter(f"--kmin {args.kmin} exceeds --kmax {args.kmax}")

    seed = resolve_seed(args.seed)
    template = KmeansConfig(k=1, max_iters=args.max_iters, rel_tol=args.rel_tol, restarts=args.restarts, seed=seed)
    manifest = RunManifest.collect("select_k", command_params(args, seed=seed), inputs={"features": args.features}, seed=seed)
    log_invocation(manifest.command, manifest.params)

    features = load_features(args.features)
    report = select_k_embedded(
        features.coords, features.m, range(args.kmin, args.kmax + 1), template, progress=args.progress
    )

    write_csv(report.to_frame(), args.out)
    manifest.extra = {"k_star": report.chosen_k, "n_points": report.n, "m": report.m}
    manifest.write(args.out)
    print(f"k_star={report.chosen_k}")
