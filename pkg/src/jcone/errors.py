"""Exception hierarchy shared by all jcone modules."""


class JConeError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(JConeError):
    pass


class SignatureMismatch(JConeError):
    pass


class NotHermitian(JConeError):
    pass


class NotPositive(JConeError):
    pass


class NotJHermitian(JConeError):
    pass


class NotJPositive(JConeError):
    pass


class Singular(JConeError):
    pass


class NotInImage(JConeError):
    """A complex matrix fails the structural test for the quaternionic embedding."""


class NotBulletCommuting(JConeError):
    pass


class PremiseViolated(JConeError):
    pass


class WeightOutOfRange(JConeError):
    pass


class StepTooSmall(JConeError):
    pass


class UnknownSuite(JConeError):
    pass


class IndeterminateSchur(JConeError):
    """Schur positivity test requested with a (numerically) singular leading block."""
