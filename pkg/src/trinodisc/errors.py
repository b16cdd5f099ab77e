"""Exception types shared across the package."""


class TrinodiscError(Exception):
    """Base class for all computational errors raised by this package."""


class InvalidPrime(TrinodiscError):
    """The argument is not an odd prime in the supported range."""


class InvalidArgument(TrinodiscError):
    """An argument violates a documented precondition."""


class NotInvertible(TrinodiscError):
    """Modular inverse requested for a non-unit."""


class NotCoprime(TrinodiscError):
    """Exponent pair must be coprime."""


class PreconditionFailed(TrinodiscError):
    """A mathematical hypothesis required by the operation does not hold."""


class OrbitDecompositionFailure(TrinodiscError):
    """Root set did not split into the expected orbit structure."""


class WitnessConstructionFailure(TrinodiscError):
    """A constructed witness failed its verification; indicates a bug."""


class SizeGuard(TrinodiscError):
    """Input would require an unreasonable amount of memory or time."""


class IncompleteCache(TrinodiscError):
    """A per-prime cache is missing entries required by the computation."""


class CacheCorrupt(TrinodiscError):
    """A cache file is malformed or fails its structural checks."""
