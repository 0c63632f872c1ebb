#!/usr/bin/env python3
"""
Exception hierarchy for sncsym.

Everything the library raises on bad input derives from SncsymError so the
command-line entry point can report it uniformly.
"""

from typing import Optional


class SncsymError(Exception):
    """Base class for all sncsym errors"""


class NotationError(SncsymError, ValueError):
    """Text or JSON input that does not match the index/element grammar"""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None,
                 expected: str = ""):
        self.text = text
        self.position = position
        self.expected = expected
        detail = message
        if position is not None:
            detail += f" at position {position}"
        if expected:
            detail += f" (expected {expected})"
        if text:
            detail += f": {text!r}"
        super().__init__(detail)


class InvalidIndexError(SncsymError, ValueError):
    """A block, supercomposition or superpartition violating its invariants"""


class BidegreeError(SncsymError, ValueError):
    """Operands that must share a bidegree do not"""


class BasisError(SncsymError, ValueError):
    """A basis or conversion route that is not supported"""


class VerificationError(SncsymError):
    """An identity check failed"""

    def __init__(self, name: str, counterexample: str = ""):
        self.name = name
        self.counterexample = counterexample
        message = f"identity {name} failed"
        if counterexample:
            message += f": {counterexample}"
        super().__init__(message)
