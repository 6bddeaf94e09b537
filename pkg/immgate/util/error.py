"""Exception types raised by ``immgate`` and helpers to format their messages.

Every error is rooted at :class:`ImmgateError` and also derives from the
builtin exception that best describes it, so callers can catch either.
"""
from __future__ import annotations

from typing import Sequence


def shorten_list(seq: Sequence[object], max_length: int = 5) -> str:
    """Converts a sequence into an abridged string for use in error messages.
    """
    if len(seq) <= max_length:
        return str(list(seq))
    shortened = ", ".join(str(i) for i in seq[:max_length])
    return f"[{shortened}, ...] ({len(seq)})"


class ImmgateError(Exception):
    """Base class for all errors raised by this package."""


######################
####    TABLES    ####
######################


class OutOfTable(ImmgateError, LookupError):
    """A homotopy group or table entry outside the bundled window."""


class MissingCompositionData(ImmgateError, LookupError):
    """A composition map needed to compute a homomorphism is not bundled."""


class TableFormatError(ImmgateError, ValueError):
    """The sphere table file is malformed or its checksum does not match."""


###########################
####    DIOPHANTINE    ####
###########################


class MalformedIndices(ImmgateError, ValueError):
    """A coefficient index is out of range or not in increasing order."""


class BudgetExceeded(ImmgateError, RuntimeError):
    """A bounded search ran out of nodes before covering its box."""


class InternalError(ImmgateError, AssertionError):
    """A result failed re-verification against the data it was built from."""


######################
####    BRIDGE    ####
######################


class OddHalfDegree(ImmgateError, ValueError):
    """The half-degree of a lifting instance is not an even integer >= 2."""


class DiagonalTermsPresent(ImmgateError, ValueError):
    """A system with square terms was given to the lifting compiler."""


###########################
####    OBSTRUCTION    ####
###########################


class InvalidCodimension(ImmgateError, ValueError):
    """The codimension is too small for the requested construction."""


class OddCodimension(ImmgateError, ValueError):
    """An even codimension was required."""


class MissingClassData(ImmgateError, ValueError):
    """Characteristic class data needed for a test was not supplied."""


class NotApplicable(ImmgateError, ValueError):
    """A test was requested outside the class of manifolds it covers."""


#####################
####    FORMS    ####
#####################


class Degenerate(ImmgateError, ValueError):
    """A bilinear form has determinant zero."""


class WrongParity(ImmgateError, ValueError):
    """A form of the wrong kind was supplied for the given dimension."""


class NonEvenForm(ImmgateError, ValueError):
    """A symmetric form has an odd diagonal entry."""


class NonUnimodularForm(ImmgateError, ValueError):
    """A symmetric form has determinant other than +1 or -1."""


class SignatureNotDivisibleBy8(ImmgateError, ValueError):
    """An even form has a signature that is not a multiple of 8."""


class NonIntegralR(ImmgateError, ValueError):
    """A Bernoulli index derived from a dimension is not an integer."""


###################
####    I/O    ####
###################


class SchemaError(ImmgateError, ValueError):
    """A JSON or TOML document does not match its expected schema."""
