"""
Exceptions raised by gaplab.

Every error that reflects bad input or a broken invariant derives from
`GapLabError`; the command line maps these to exit code 1.  Checks that
report a verdict (admissibility clauses, event reports) never raise.
"""


class GapLabError(Exception):
    ...


class SizeMismatchError(GapLabError, ValueError):
    """Graphs or permutations of different vertex counts were combined."""


class DomainError(GapLabError, ValueError):
    """A closed form was evaluated outside the region where it is defined."""


class CapExceededError(GapLabError):
    """An exhaustive search was requested beyond its configured size cap."""


class MissingTrajectoryError(GapLabError):
    """Trajectory requested from a run that did not capture one."""


class PreconditionError(GapLabError, ValueError):
    """An operation's documented precondition does not hold."""


class IncompatibleEventsError(GapLabError):
    """
    All four interpolation events held at once.  They are provably
    disjoint, so this signals a bug rather than a property of the input.
    """


class ConfigurationError(GapLabError, ValueError):
    """An experiment configuration cannot be resolved."""


class EdgeListFormatError(GapLabError, ValueError):
    """An edge-list document does not follow the "n m" + "i j" layout."""
