"""Exception hierarchy.

Decode failures are deliberately distinct from a negative match result:
a tag that fails to parse is rejected, never silently treated as
"no match".
"""


class PbcapError(Exception):
    """Base class for all library errors."""


class GroupMismatchError(PbcapError):
    """An element was used in the wrong pairing group."""


class DecodeError(PbcapError):
    """A serialized element or file could not be decoded."""


class ValidationError(PbcapError):
    """Structurally invalid input (fragment, graph, or policy)."""
