"""Common exception base for the toolkit.

Module-specific errors subclass HrefitError so callers can catch one type
at the CLI/server boundary and map it to a data-error exit code.
"""


class HrefitError(Exception):
    """Base class for all toolkit errors."""
