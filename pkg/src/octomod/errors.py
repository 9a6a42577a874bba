"""Exception hierarchy shared by every octomod operation."""


class OctomodError(Exception):
    """Base class for domain errors (reported by the CLI with exit code 1)."""


class DivisionByZero(OctomodError, ZeroDivisionError):
    pass


class NotImaginary(OctomodError):
    pass


class DependentArguments(OctomodError):
    pass


class RealArgument(OctomodError):
    pass


class InvalidSignature(OctomodError):
    pass


class SignatureMismatch(OctomodError):
    pass


class ZeroElement(OctomodError):
    pass


class NotCyclic(OctomodError):
    pass


class ConjugateSlotsPresent(OctomodError):
    pass


class UnknownSuite(OctomodError):
    pass


class InternalTableInconsistent(OctomodError):
    """The multiplication table failed a structural self-check."""


class InternalFormulaMismatch(OctomodError):
    """Two independent formulas for the same quantity disagreed."""
