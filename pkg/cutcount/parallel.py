# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Tuple

from .utils import vertex_chunks

logger = logging.getLogger("cutcount")

# chunks handed to each worker, for load balancing across skewed degrees
CHUNKS_PER_WORKER = 4

_payload = None


def _install(payload):
    global _payload
    _payload = payload


def _run(kernel, start, stop):
    return kernel(_payload, start, stop)


def _add(left: Tuple[int, ...], right: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(a + b for a, b in zip(left, right))


def sum_over_ranges(
    kernel: Callable[[object, int, int], Tuple[int, ...]],
    payload,
    size: int,
    workers: int = 1,
) -> Tuple[int, ...]:
    """Evaluate ``kernel(payload, start, stop)`` over a split of ``range(size)`` and
    add the returned integer tuples.

    With ``workers > 1`` the ranges run in a process pool; the payload is
    shipped once per worker process. Integer sums do not depend on the order
    in which chunks finish, so the result is the same for every worker count.
    ``kernel`` must be a module-level function.
    """
    if workers <= 1 or size < 2:
        return kernel(payload, 0, size)

    chunks = vertex_chunks(size, workers * CHUNKS_PER_WORKER)
    logger.debug(f"Running {kernel.__name__} on {len(chunks)} chunks with {workers} workers")
    with ProcessPoolExecutor(max_workers=workers, initializer=_install, initargs=(payload,)) as executor:
        futures = [executor.submit(_run, kernel, start, stop) for start, stop in chunks]
        results = [f.result() for f in futures]
    total = results[0]
    for result in results[1:]:
        total = _add(total, result)
    return total
