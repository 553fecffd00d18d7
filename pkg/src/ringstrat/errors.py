"""Exception types raised across the package.

The CLI maps each family to an exit status (see ``EXIT_CODES``).
"""


class RingStratError(Exception):
    exit_code = 1


class InvalidParameter(RingStratError, ValueError):
    exit_code = 2


class InvalidIdeal(InvalidParameter):
    pass


class ZeroIdeal(InvalidParameter):
    pass


class InvalidSubsemigroup(InvalidParameter):
    pass


class UnsupportedRing(RingStratError):
    exit_code = 3


class InfiniteQuotient(UnsupportedRing):
    pass


class NotPrincipal(UnsupportedRing):
    pass


class ResourceLimit(UnsupportedRing):
    pass


class InvariantFailure(RingStratError):
    exit_code = 4


class FactorisationFailure(InvariantFailure):
    pass


class SemilatticeLawViolation(InvariantFailure):
    pass


class OracleMismatch(InvariantFailure):
    pass
