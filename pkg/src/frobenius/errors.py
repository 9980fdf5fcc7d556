"""Exception hierarchy for basis validation and solver limits.

Everything derives from FrobeniusError so callers (and the CLI) can catch
one type; FrobeniusError itself is a ValueError because every condition
here is ultimately a bad input or an input outside a routine's envelope.
"""

from __future__ import annotations


class FrobeniusError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidElementError(FrobeniusError):
    """A basis element is not a positive integer."""


class NonCoprimeError(FrobeniusError):
    """The basis elements share a common factor > 1, so no largest
    non-representable integer exists."""


class ArityError(FrobeniusError):
    """Fewer than two distinct elements, or an operation needs a larger basis."""


class InvalidInputError(FrobeniusError):
    """A scalar argument is outside its documented domain."""


class OutOfEnvelopeError(FrobeniusError):
    """The input selects a closed-form branch whose printed formula does not
    reproduce oracle values, so no answer is returned for it."""


class ResourceLimitError(FrobeniusError):
    """A requested table or scan would exceed the configured size cap."""
