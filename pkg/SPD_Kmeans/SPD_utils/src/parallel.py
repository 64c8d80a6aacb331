# SPD_Kmeans/SPD_utils/src/parallel.py

"""
Order-preserving parallel map over independent tasks.

Work is scheduled with the executor selected by ``SPD_KMEANS_EXECUTOR``
(see :func:`SPD_Kmeans.settings.executor_mode`). Results are always returned
in task order, whatever order the workers finish in, so callers can reduce
them deterministically.

Functions
---------
:func:`ordered_map`
    Apply a function to every task and return the results in task order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from typing import Callable, Optional, Sequence, TypeVar

from tqdm import tqdm

from SPD_Kmeans import settings

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    func: Callable[[T], R],
    tasks: Sequence[T],
    *,
    desc: Optional[str] = None,
    progress: bool = False,
) -> list[R]:
    """
    Apply ``func`` to every task using the configured executor.

    Parameters
    ----------
    func : callable
        Function of one task. In ``process`` mode it must be picklable (a
        module-level function or a :func:`functools.partial` of one).
    tasks : sequence
        Independent task descriptions.
    desc : :class:`str`, optional
        Progress-bar label.
    progress : :class:`bool`, optional
        Show a :mod:`tqdm` progress bar on stderr (only when stderr is a
        terminal). Defaults to ``False``.

    Returns
    -------
    :class:`list`
        ``[func(t) for t in tasks]``, in task order.

    Raises
    ------
    Exception
        The first exception raised by a task, in task order.
    """
    tasks = list(tasks)
    if not tasks:
        return []

    disable = None if progress else True
    mode = settings.executor_mode()

    if mode == "serial" or len(tasks) == 1:
        return [func(task) for task in tqdm(tasks, total=len(tasks), desc=desc, disable=disable, ncols=100)]

    executor_class = ThreadPoolExecutor if mode == "thread" else ProcessPoolExecutor
    with executor_class(max_workers=settings.max_workers(len(tasks))) as executor:
        futures = [executor.submit(func, task) for task in tasks]
        for _ in tqdm(as_completed(futures), total=len(futures), desc=desc, disable=disable, ncols=100):
            pass
        return [future.result() for future in futures]
