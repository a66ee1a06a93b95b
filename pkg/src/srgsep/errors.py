"""Exception hierarchy shared by all srgsep modules."""


class SrgSepError(Exception):
    """Base class for every error raised by this package."""


# finite fields
class NotPrime(SrgSepError, ValueError):
    pass


class DegreeZero(SrgSepError, ValueError):
    pass


class TooLarge(SrgSepError, ValueError):
    pass


class ZeroInverse(SrgSepError, ZeroDivisionError):
    pass


class FieldMismatch(SrgSepError, ValueError):
    pass


class DoesNotDivide(SrgSepError, ValueError):
    pass


class NotDivisor(SrgSepError, ValueError):
    pass


# graphs
class IndexOutOfRange(SrgSepError, IndexError):
    pass


class NotRegular(SrgSepError, ValueError):
    pass


class NotStronglyRegular(SrgSepError, ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class Disconnected(SrgSepError, ValueError):
    pass


class CompleteGraph(SrgSepError, ValueError):
    pass


class EmptyGraph(SrgSepError, ValueError):
    pass


# families / catalog
class InvalidParams(SrgSepError, ValueError):
    pass


class UnknownFamily(SrgSepError, KeyError):
    pass


class NotConstructible(SrgSepError, ValueError):
    pass


class CorruptTableData(SrgSepError, RuntimeError):
    pass


class WrongCode(SrgSepError, ValueError):
    pass


# bounds / classification
class BoundViolated(SrgSepError, ValueError):
    pass


class NotSrg(SrgSepError, ValueError):
    pass


class NotPrimePower(SrgSepError, ValueError):
    pass


class ClassificationConflict(SrgSepError, RuntimeError):
    """Family-rule and search verdicts disagree for the same graph."""


class CorruptCacheEntry(SrgSepError, ValueError):
    pass
