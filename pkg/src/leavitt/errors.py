"""Exception types shared across the package.

Every library error derives from LeavittError so callers can catch the
whole family at once.  Names follow the operation contracts; messages
carry the offending identifiers.
"""


class LeavittError(Exception):
    """Base class for all errors raised by this package."""


# graph construction and lookup

class DuplicateId(LeavittError):
    """An id was declared twice, or a vertex id collides with an edge id."""


class UnknownEndpoint(LeavittError):
    """An edge refers to a source or range vertex that was not declared."""


class ReservedCharacter(LeavittError):
    """An id is empty or contains a character the expression grammar reserves."""


class UnknownVertex(LeavittError):
    """A vertex id does not exist in the graph."""


class UnknownId(LeavittError):
    """An id is neither a vertex nor an edge of the graph."""


class NotACycle(LeavittError):
    """The given path is not a closed path with pairwise distinct sources."""


# graph analysis

class TooLarge(LeavittError):
    """The vertex set exceeds the configured enumeration bound."""


class UnsupportedFlaggedGraph(LeavittError):
    """The operation is only defined for graphs without infinite emitters."""


# symbolic families

class NotConcretelyBuildable(LeavittError):
    """The descriptor has no finite presentation to materialize."""


class NotAGraphFamily(LeavittError):
    """The descriptor does not denote a graph (for example a unitization)."""


class DimensionRuleUnavailable(LeavittError):
    """No dimension rule applies to the descriptor."""


class NotApplicable(LeavittError):
    """The operation does not apply to the given descriptor."""


# algebra engine

class ContextMismatch(LeavittError):
    """Elements of different algebra contexts were combined."""


# classification and witnesses

class NoCommonDescendant(LeavittError):
    """The two vertices have no common descendant."""


class MT3Fails(LeavittError):
    """A common-descendant step required by the construction does not exist."""


class NotFoundWithinBound(LeavittError):
    """The bounded witness search was exhausted without a hit."""


class WitnessInvalid(LeavittError):
    """The supplied witness data fails its defining equations."""


class ProductNotZero(LeavittError):
    """The two elements do not multiply to zero."""


# expression parsing

class ExprSyntaxError(LeavittError):
    """Malformed element expression; carries the character position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
