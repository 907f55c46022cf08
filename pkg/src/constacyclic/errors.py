"""Exception hierarchy shared by every module of the package."""


class ConstacyclicError(Exception):
    """Base class for all errors raised by this package."""


class CompositeP(ConstacyclicError, ValueError):
    pass


class ReducibleModulus(ConstacyclicError, ValueError):
    pass


class FieldTooLarge(ConstacyclicError, ValueError):
    pass


class FieldMismatch(ConstacyclicError, TypeError):
    pass


class DivisionByZero(ConstacyclicError, ZeroDivisionError):
    pass


class ZeroElement(ConstacyclicError, ValueError):
    pass


class NoSuchRoot(ConstacyclicError, ValueError):
    pass


# Used by the twisted-grid constructors when the required root of unity is missing.
NoSuchRootOfUnity = NoSuchRoot


class ZeroScale(ConstacyclicError, ValueError):
    pass


class ZeroConstantTerm(ConstacyclicError, ValueError):
    pass


class ZeroPolynomial(ConstacyclicError, ValueError):
    pass


class NotCoprime(ConstacyclicError, ValueError):
    pass


NotCoprimeToCharacteristic = NotCoprime


class ZeroConstant(ConstacyclicError, ValueError):
    pass


class EvenM(ConstacyclicError, ValueError):
    pass


class BadBase(ConstacyclicError, ValueError):
    pass


class ExponentRange(ConstacyclicError, ValueError):
    pass


class NotADivisor(ConstacyclicError, ValueError):
    pass


class ZeroDimension(ConstacyclicError, ValueError):
    pass


class HypothesisViolated(ConstacyclicError, ValueError):
    pass


class TooLarge(ConstacyclicError, ValueError):
    pass


class RankDeficient(ConstacyclicError, ValueError):
    pass
