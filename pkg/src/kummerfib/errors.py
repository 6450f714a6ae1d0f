"""Exception hierarchy shared by all modules.

Everything a caller can get wrong about the mathematics derives from
:class:`DomainError`; the CLI maps those to exit code 3.
"""


class DomainError(ValueError):
    pass


class DimensionMismatch(DomainError):
    pass


class InvalidLattice(DomainError):
    pass


class DegenerateLattice(InvalidLattice):
    pass


class ZeroVector(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class OutOfRegime(DomainError):
    """A vanishing theorem or dimension hypothesis behind a formula fails."""


class GenusMismatch(DomainError):
    pass


class InvalidDegree(DomainError):
    pass


class ConsistencyFailure(RuntimeError):
    """Two independent routes to the same verdict disagreed."""


class OutOfRegimeWarning(UserWarning):
    pass
