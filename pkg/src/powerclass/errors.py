"""Exception types shared across the package."""


class GroupError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(GroupError):
    """An enumeration grew past its configured cap."""


class DegreeMismatch(GroupError):
    """Permutations of different degrees were combined."""


class AmbientMismatch(GroupError):
    """Subgroups of different ambient groups were combined."""


class NotNormal(GroupError):
    """A subgroup required to be normal is not."""


class NotPGroup(GroupError):
    """A group required to have prime-power order does not."""


class NotSylow(GroupError):
    """A subgroup required to be a Sylow p-subgroup is not one."""


class SylowNotInside(GroupError):
    """No Sylow p-subgroup of the whole group lies inside the given subgroup."""


class NotPowerfullyEmbedded(GroupError):
    """A construction requires a powerfully embedded subgroup."""


class HypothesisViolated(GroupError):
    """An explicit precondition of a construction does not hold."""


class GreedyStalled(GroupError):
    """The greedy series ascent failed to make progress."""


class ConsistencyError(GroupError):
    """A runtime postcondition that is mathematically guaranteed failed.

    Raised when a computed value contradicts a proved fact; it always
    indicates a bug in this package, never bad user input.
    """


class UnsupportedPrime(GroupError):
    """The requested prime is outside the supported range for this check."""


class BadParameter(GroupError):
    """A constructor was called with parameters outside its domain."""


class ParseError(GroupError):
    """A serialized group or corpus document is malformed."""


class UnknownGroup(GroupError):
    """A group reference did not resolve to a corpus entry or file."""
