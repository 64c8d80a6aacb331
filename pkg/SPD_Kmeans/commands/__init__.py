# SPD_Kmeans/commands/__init__.py

"""
Command Definitions for the SPD_Kmeans CLI
==========================================

Declarative registry of the user-invoked commands. Each command lives in its
own module and exposes a :data:`COMMAND`
(:class:`~SPD_Kmeans.commands.specs.CommandSpec`) plus a ``cli_handler(args)``
function. :func:`~SPD_Kmeans.commands.parser_builder.build_subparser` wires
them into an :mod:`argparse` tree.

Infrastructure
--------------
- :mod:`SPD_Kmeans.commands.specs`: :class:`CommandSpec` and :class:`ParserSpec`.
- :mod:`SPD_Kmeans.commands.inputs`: ``type=`` converters and path helpers.
- :mod:`SPD_Kmeans.commands.smart_parser`: parser that raises instead of exiting.
- :mod:`SPD_Kmeans.commands.result_bridge`: handler wrapper mapping errors to exit codes.
- :mod:`SPD_Kmeans.commands.parser_builder`: builds the parser tree.
- :mod:`SPD_Kmeans.commands.cli_core`: re-exports of the above.

Available Commands
------------------
:mod:`SPD_Kmeans.commands.features`
    Band → log-Cholesky autocovariance features.
:mod:`SPD_Kmeans.commands.cluster`
    k-means on a feature file.
:mod:`SPD_Kmeans.commands.select_k`
    Choice of the number of clusters.
:mod:`SPD_Kmeans.commands.sweep`
    ARI grid over bands, lags, patch sizes and cluster counts.
:mod:`SPD_Kmeans.commands.report`
    Overlap with ground truth, SARGDE and ANOVA tables.

Constants
---------
:data:`COMMANDS` : :class:`tuple`
    Top-level command modules, in help order.
:data:`PARSER` : :class:`~SPD_Kmeans.commands.specs.ParserSpec`
    Root parser specification.
"""

from SPD_Kmeans.commands import features, cluster, select_k, sweep, report
from .cli_core import ParserSpec

COMMANDS = (features, cluster, select_k, sweep, report)

PARSER = ParserSpec(
    dest="command",
    help="Top-level commands for the SPD_Kmeans CLI.",
    args={"commands": COMMANDS},
)
