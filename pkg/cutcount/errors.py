# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/


class CutCountError(Exception):
    """Base class of every error raised by cutcount."""

    code = "CutCount"


class GraphFormatError(CutCountError, ValueError):
    """An edge list line could not be parsed."""

    code = "GraphFormat"

    def __init__(self, message, lineno=None, line=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
        self.line = line


class IntegrityError(CutCountError, ArithmeticError):
    """A count came out negative, fractional or inconsistent with another count.

    This is the tripwire for formula bugs: on a real graph every induced
    count is a nonnegative integer.
    """

    code = "Integrity"

    def __init__(self, message, pattern_id=None):
        super().__init__(message)
        self.pattern_id = pattern_id


class CatalogIntegrityError(IntegrityError):
    """The pattern catalog failed its self-check at construction."""


class BudgetExceededError(CutCountError, MemoryError):
    """A configured budget (oracle subsets, triangle-list bytes) is too small.

    ``report`` holds the counts finished before the refusal, if any.
    """

    code = "BudgetExceeded"
    report = None

    def __init__(self, message, required=None, budget=None):
        if required is not None and budget is not None:
            message = f"{message} (required {required}, budget {budget})"
        super().__init__(message)
        self.required = required
        self.budget = budget


ERROR_CODE_TO_EXIT_STATUS = {
    "GraphFormat": 2,
    "OSError": 2,
    "Integrity": 3,
    "BudgetExceeded": 4,
    "CutCount": 1,
}


def exit_status_for(error):
    """Translate an exception into the command-line exit status.

    Parameters
    ----------
    error : BaseException
        The exception that stopped the pipeline.

    Returns
    -------
    int
        2 for unreadable or malformed input, 3 for integrity failures,
        4 for budget refusals, 1 for anything else.
    """
    code = getattr(error, "code", None)
    if code is None and isinstance(error, OSError):
        code = "OSError"
    return ERROR_CODE_TO_EXIT_STATUS.get(code, 1)
