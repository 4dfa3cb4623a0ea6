# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import pytest

from ..errors import (
    BudgetExceededError,
    CatalogIntegrityError,
    CutCountError,
    GraphFormatError,
    IntegrityError,
    exit_status_for,
)


@pytest.mark.parametrize(
    "error, status",
    [
        (GraphFormatError("bad token", lineno=3), 2),
        (FileNotFoundError("missing.txt"), 2),
        (IntegrityError("negative", pattern_id="5-4"), 3),
        (CatalogIntegrityError("mismatch"), 3),
        (BudgetExceededError("too many subsets", required=10, budget=1), 4),
        (CutCountError("other"), 1),
        (RuntimeError("unexpected"), 1),
    ],
)
def test_exit_status(error, status):
    assert exit_status_for(error) == status


def test_messages():
    assert str(GraphFormatError("expected two ids", lineno=7)) == "line 7: expected two ids"
    assert str(BudgetExceededError("over", required=10, budget=1)) == "over (required 10, budget 1)"


def test_builtin_bases():
    assert isinstance(GraphFormatError("x"), ValueError)
    assert isinstance(IntegrityError("x"), ArithmeticError)
    assert isinstance(BudgetExceededError("x"), MemoryError)
