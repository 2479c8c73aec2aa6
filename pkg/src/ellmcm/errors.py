"""Exception hierarchy. Every error raised on purpose derives from EllMCMError."""


class EllMCMError(Exception):
    pass


class UnsupportedDegree(EllMCMError, ValueError):
    def __init__(self, n, allowed="n in {1, 2} or n >= 4"):
        self.n = n
        if n == 3:
            msg = "n=3 unsupported (see prior work)"
        else:
            msg = f"n={n} unsupported ({allowed})"
        super().__init__(msg)


class MixedDiscriminant(EllMCMError, ValueError):
    pass


class DivisionByZero(EllMCMError, ZeroDivisionError):
    pass


class InvalidSpeciality(EllMCMError, ValueError):
    pass


class ScanBudgetExceeded(EllMCMError, RuntimeError):
    pass


class NotKoszul(EllMCMError, ValueError):
    pass


class PoleAtZero(EllMCMError, ValueError):
    pass


class NonIntegralCoefficient(EllMCMError, ArithmeticError):
    pass


class NonIntegralValue(EllMCMError, ArithmeticError):
    pass


class OddGeneratorCount(EllMCMError, ValueError):
    pass


class ZeroCharge(EllMCMError, ValueError):
    pass


class DomainAmbiguity(EllMCMError, RuntimeError):
    pass


class InvalidAtiyahFlag(EllMCMError, ValueError):
    pass
