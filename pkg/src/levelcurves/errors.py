"""Exception hierarchy shared across the library."""


class LevelCurveError(Exception):
    """Base class for all library errors."""


class DivisionByZero(LevelCurveError, ZeroDivisionError):
    pass


class BothZero(LevelCurveError):
    pass


class DegreeZero(LevelCurveError):
    pass


class ZeroPolynomial(LevelCurveError):
    pass


class ZeroDenominator(LevelCurveError):
    pass


class PoleInBall(LevelCurveError):
    pass


class CertificationFailed(LevelCurveError):
    def __init__(self, message, precision_cap=None):
        super().__init__(message)
        self.precision_cap = precision_cap


class NotCirclePreserving(LevelCurveError):
    pass


class InternalDisagreement(LevelCurveError):
    """Two independent exact criteria disagreed; an implementation bug."""


class ConstantInput(LevelCurveError):
    pass


class BoundViolation(LevelCurveError):
    """More certified points than the theorem allows; an implementation bug."""


class WitnessFitFailed(LevelCurveError):
    pass


class ImagePoint(LevelCurveError):
    pass


class SharedComponentUnresolved(LevelCurveError):
    pass


class NotAFactor(LevelCurveError):
    pass


class BothConstant(LevelCurveError):
    pass


class DependentInputs(LevelCurveError):
    pass


class HorizonTooSmall(LevelCurveError):
    pass


class ZeroInput(LevelCurveError):
    pass


class ParseError(LevelCurveError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class NonGaussianCoefficient(LevelCurveError):
    pass


class WrongVariable(LevelCurveError):
    pass
