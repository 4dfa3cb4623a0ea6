# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/

import sys

from .core import SubgraphCounter, setup_logging
from .errors import (
    BudgetExceededError,
    CatalogIntegrityError,
    CutCountError,
    GraphFormatError,
    IntegrityError,
)
from .graph import (
    DegreeOrientedDag,
    Graph,
    build_degree_ordered_dag,
    load_edge_list,
    read_edge_list,
)
from .oracle import OracleResult, brute_force_induced
from .patterns.catalog import PatternCatalog, build_catalog, noninduced_to_induced
from .patterns.disconnected import disconnected_counts
from .report import CountReport, emit_trends
from .utils import __version__


if sys.version_info.major < 3:
    raise ImportError("Python < 3 is unsupported.")

__all__ = [
    "BudgetExceededError",
    "CatalogIntegrityError",
    "CountReport",
    "CutCountError",
    "DegreeOrientedDag",
    "Graph",
    "GraphFormatError",
    "IntegrityError",
    "OracleResult",
    "PatternCatalog",
    "SubgraphCounter",
    "__version__",
    "brute_force_induced",
    "build_catalog",
    "build_degree_ordered_dag",
    "disconnected_counts",
    "emit_trends",
    "load_edge_list",
    "noninduced_to_induced",
    "read_edge_list",
    "setup_logging",
]
