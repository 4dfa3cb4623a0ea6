# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/

from .catalog import PatternCatalog, build_catalog, induced_to_noninduced, noninduced_to_induced
from .disconnected import count_symbol, disconnected_counts, disconnected_polynomials
from .pattern import Pattern
