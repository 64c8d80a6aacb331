# SPD_Kmeans/__main__.py

"""
Module entry point for `python -m SPD_Kmeans` and the console script.

This file re-exports :func:`SPD_Kmeans.cli.main` as ``main`` and turns its
return value into the process exit status.
"""

from SPD_Kmeans import cli as _cli


def main(argv=None) -> None:
    """
    Delegate to :func:`SPD_Kmeans.cli.main` and exit with its status.

    Parameters
    ----------
    argv : list of str, optional
        Optional argument vector to pass to the CLI. When None, ``sys.argv[1:]``
        is used, matching standard command-line behavior.

    Raises
    ------
    SystemExit
        Always, carrying the exit code returned by the CLI.
    """
    raise SystemExit(_cli.main(argv))


if __name__ == "__main__":
    main()
