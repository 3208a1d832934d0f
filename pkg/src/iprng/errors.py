"""Exception types raised by the iprng package."""


class IprngError(ValueError):
    pass


class ZeroInverse(IprngError, ZeroDivisionError):
    pass


class NotASquare(IprngError):
    pass


class ZeroOrder(IprngError):
    pass


class RepeatedRoot(IprngError):
    pass


class DegenerateRoots(IprngError):
    pass


class RootHit(IprngError):
    pass


class BadTarget(IprngError):
    pass


class NotPrime(IprngError):
    pass


class ModulusTooSmall(IprngError):
    pass


class TooLarge(IprngError):
    pass


class FamilyMismatch(IprngError):
    pass
