"""Exception hierarchy shared by all irrforge modules."""


class IrrforgeError(Exception):
    """Base class for every error raised by this package."""


class BadIndex(IrrforgeError):
    """An edge endpoint lies outside the declared vertex range."""


class CycleOrDisconnected(IrrforgeError):
    """The supplied edge set is not a spanning tree."""


class BadLabel(IrrforgeError):
    """A code entry names a vertex outside 1..n."""


class InvalidArrangement(IrrforgeError):
    """A backbone arrangement breaks the end/internal degree rules."""


class WrongArity(IrrforgeError):
    """A fixed-length formula received the wrong number of entries."""


class NotSorted(IrrforgeError):
    """Input entries violate the required non-decreasing order."""


class NotRealizable(IrrforgeError):
    """No tree realizes the given degree sequence."""


class NoValidArrangement(IrrforgeError):
    """No permutation of the multiset is a valid backbone arrangement."""


class CapExceeded(IrrforgeError):
    """A search or enumeration exceeds its configured size cap."""


class TooLarge(CapExceeded):
    """A realization search exceeds the vertex-count cap."""


class DegenerateDenominator(IrrforgeError):
    """A derived quantity requires dividing by zero."""


class InputNotViolated(IrrforgeError):
    """Shrinking requires a counterexample whose verdict is VIOLATED."""
