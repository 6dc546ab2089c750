"""Exception types raised by arcfourier."""


class ArcFourierError(Exception):
    """Base class for every error raised by this package."""


class DegenerateArc(ArcFourierError, ValueError):
    pass


class DegreeMismatch(ArcFourierError, ValueError):
    pass


class NearZeroConstantTerm(ArcFourierError, ZeroDivisionError):
    pass


class ConformalPole(NearZeroConstantTerm):
    """The series u + 1 in the Cayley step has a vanishing constant term."""


class OutsideDisk(ArcFourierError, ValueError):
    pass


class NoConvergence(ArcFourierError, ArithmeticError):
    """An iterative solver hit its iteration cap.

    Treated as a hard numerical failure, never as a verdict on the input.
    """


class EmptyEigenspace(ArcFourierError):
    pass


class OffCircleRoot(ArcFourierError):
    pass


class NotBlaschke(ArcFourierError):
    """A candidate quotient p/q fails one of the Blaschke product checks."""


class NotUnimodularOnCircle(NotBlaschke):
    pass


class PoleInDisk(NotBlaschke):
    pass


class ZeroCountMismatch(NotBlaschke):
    pass


class NonAlternatingRoots(ArcFourierError):
    pass


class DegenerateFormula(ArcFourierError, ZeroDivisionError):
    pass


class RoundTripFailure(ArcFourierError):
    pass
