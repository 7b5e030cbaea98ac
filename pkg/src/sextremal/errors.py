#!/usr/bin/env python3


class InputException(Exception):
    """Raised when the supplied input violates a precondition (CLI exit code 1)"""

    pass


class ConsistencyException(Exception):
    """Raised when an internal consistency check fails (CLI exit code 2)"""

    pass


class GroundSetTooLargeException(InputException):
    """Raised when a ground set exceeds the configured cap of an operation"""

    pass


class ParameterOutOfRangeException(InputException):
    """Raised when a numeric parameter is outside its admissible range"""

    pass
