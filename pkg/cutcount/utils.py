# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/

import sys
import time
from math import factorial
from contextlib import contextmanager

import numpy as np


__version__ = "UNKNOWN"
# https://packaging.python.org/en/latest/guides/single-sourcing-package-version/#single-sourcing-the-package-version
if sys.version_info >= (3, 8):
    from importlib import metadata
else:
    import importlib_metadata as metadata

try:
    __version__ = metadata.version("cutcount")
except metadata.PackageNotFoundError:
    # running from a source checkout
    pass


def vertex_chunks(n, parts):
    """Split ``range(n)`` into at most ``parts`` contiguous ``(start, stop)`` ranges."""
    parts = max(1, min(parts, n)) if n else 1
    step, extra = divmod(n, parts)
    chunks = []
    start = 0
    for p in range(parts):
        stop = start + step + (1 if p < extra else 0)
        chunks.append((start, stop))
        start = stop
    return chunks


@contextmanager
def stage_timer(timings, name):
    """Record the wall-clock seconds spent in a ``with`` block under ``timings[name]``."""
    start = time.perf_counter()
    try:
        yield
    finally:
        timings[name] = round(time.perf_counter() - start, 6)


def exact(values):
    """Object-dtype copy of ``values`` so that arithmetic cannot overflow."""
    return np.asarray(values).astype(object)


def exact_total(values):
    return int(exact(values).sum())


def choose(values, r):
    """Elementwise binomial ``C(x, r)`` with exact integers; zero where ``x < r``."""
    x = exact(values)
    product = np.ones(x.shape, dtype=object)
    for i in range(r):
        product = product * (x - i)
    return np.where(x >= r, product // factorial(r), 0)
