"""Exception types shared across the toolkit."""


class SizeLimitError(ValueError):
    """An exact routine was asked to run beyond its hard size cap."""


class InvariantError(AssertionError):
    """A structural invariant that should hold by construction was violated.

    This signals a bug in the library, not bad input.
    """


class MalformedEncodingError(ValueError):
    """A colour encoding could not be decoded."""


class InadmissibleExpressionError(ValueError):
    """An NLC expression reuses a vertex label or has malformed letters."""
