"""Exception types raised by the library.

Numeric failures derive from :class:`NumericError`; malformed input derives
from :class:`InputError`. The command line maps the two families onto
distinct exit codes.
"""


class LdgcError(Exception):
    """Base class for every error raised by this package."""


class NumericError(LdgcError):
    pass


class InputError(LdgcError):
    pass


class OutOfDomain(NumericError):
    def __init__(self, t, domain):
        self.t = t
        self.domain = domain
        super().__init__(f"t={t!r} lies outside [{domain.alpha!r}, {domain.beta!r}]")


class VanishingSpeed(NumericError):
    def __init__(self, t):
        self.t = t
        super().__init__(f"speed vanishes at t={t!r}")


class CurvatureVanishes(NumericError):
    """Curvature is (numerically) zero, so the radius of curvature is infinite."""

    def __init__(self, t):
        self.t = t
        super().__init__(f"CurvatureVanishes at t={t!r}")


class QuadratureNonConvergence(NumericError):
    def __init__(self, a, b, depth):
        self.a, self.b, self.depth = a, b, depth
        super().__init__(
            f"adaptive quadrature on [{a!r}, {b!r}] exceeded max depth {depth}"
        )


class TargetOutOfRange(NumericError):
    def __init__(self, target, available):
        self.target, self.available = target, available
        super().__init__(
            f"target length {target!r} exceeds available arc length {available!r}"
        )


class TooFewPoints(NumericError):
    pass


class DegenerateAbscissa(NumericError):
    pass


class PartitionMismatch(NumericError):
    pass


class UnknownFamily(InputError):
    pass


class EmptyData(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ValidationError(InputError):
    def __init__(self, field, reason):
        self.field, self.reason = field, reason
        super().__init__(f"{field}: {reason}")
