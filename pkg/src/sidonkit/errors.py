"""Exception types shared across the package."""

from __future__ import annotations


class SidonkitError(Exception):
    """Base class for all package errors."""


class SpecError(SidonkitError, ValueError):
    """Malformed group spec, element literal, or operation parameters."""


class CapExceeded(SidonkitError):
    """A configured work, order, or search budget would be exceeded."""


class InvalidInput(SidonkitError, ValueError):
    """Input violates an operation precondition (e.g. identity in a Cayley set)."""
