# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
"""Published conversion matrices for the connected 5-vertex patterns.

Rows and columns follow the catalog order ``5-1`` .. ``5-21``.
``FIVE_VERTEX_OCCURRENCES[i][j]`` is the number of copies of pattern ``i``
inside pattern ``j`` on the same five vertices, so that non-induced counts are
``N = A C``. :mod:`cutcount.patterns.catalog` recomputes both tables from the
pattern edge lists and refuses to build when they disagree.
"""

# fmt: off
FIVE_VERTEX_OCCURRENCES = (
    (1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 1, 1, 0, 1, 2, 3, 5),
    (0, 1, 0, 2, 1, 2, 2, 0, 4, 4, 5, 4, 6, 12, 9, 10, 10, 20, 20, 36, 60),
    (0, 0, 1, 0, 2, 1, 2, 5, 4, 4, 2, 7, 6, 6, 6, 10, 14, 24, 18, 36, 60),
    (0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 2, 0, 0, 6, 3, 3, 0, 4, 8, 15, 30),
    (0, 0, 0, 0, 1, 0, 0, 0, 4, 2, 0, 2, 0, 0, 3, 6, 6, 16, 12, 30, 60),
    (0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 2, 1, 0, 6, 6, 5, 4, 12, 14, 30, 60),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 2, 6, 6, 3, 4, 8, 16, 12, 30, 60),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 4, 2, 6, 12),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 6, 15),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 3, 2, 2, 8, 8, 24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 6, 3, 2, 0, 4, 10, 24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 4, 12, 6, 24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 2, 1, 4, 10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 3, 10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 6, 20),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 4, 4, 18, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 1, 9, 30),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 15),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 6, 30),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)

FIVE_VERTEX_INVERSE = (
    (1, 0, 0, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, -2, -1, -1, 0, 1, 2, -3, 5),
    (0, 1, 0, -2, -1, -2, -2, 0, 4, 4, 5, 4, 6, -12, -9, -10, -10, 20, 20, -36, 60),
    (0, 0, 1, 0, -2, -1, -2, -5, 4, 4, 2, 7, 6, -6, -6, -10, -14, 24, 18, -36, 60),
    (0, 0, 0, 1, 0, 0, 0, 0, -2, 0, -2, 0, 0, 6, 3, 3, 0, -4, -8, 15, -30),
    (0, 0, 0, 0, 1, 0, 0, 0, -4, -2, 0, -2, 0, 0, 3, 6, 6, -16, -12, 30, -60),
    (0, 0, 0, 0, 0, 1, 0, 0, 0, -2, -2, -1, 0, 6, 6, 5, 4, -12, -14, 30, -60),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -2, -6, 6, 3, 4, 8, -16, -12, 30, -60),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 2, -4, -2, 6, -12),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 2, 2, -6, 15),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -3, -2, -2, 8, 8, -24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -6, -3, -2, 0, 4, 10, -24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -2, -4, 12, 6, -24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 2, 1, -4, 10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 3, -10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -2, 6, -20),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -4, -4, 18, -60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -4, -1, 9, -30),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -3, 15),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -6, 30),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)
# fmt: on
