"""Exception types shared across the package."""


class CodesError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedParameters(CodesError):
    """Requested object is outside the supported parameter range."""


class FieldMismatch(CodesError):
    """Operation requires a different (or a common) base field."""


class GuardExceeded(CodesError):
    """Input is past a hard resource guard."""


class SizeExceeded(GuardExceeded):
    """Codeword enumeration would be too large."""


class NotProjective(CodesError):
    """Operation is only defined for projective codes."""


class ComplementNotSpanning(CodesError):
    """Anticode undefined: the complementary point set does not span."""


class ZeroVector(CodesError):
    """A nonzero vector was required."""


class DegenerateWeights(CodesError):
    """Weights were required to be pairwise distinct."""


class DuplicateWeights(DegenerateWeights):
    """Alias used by the spectrum layer."""


class ZeroInOmega(CodesError):
    """Triple-sum sets must not contain the zero vector."""


class RankDeficient(CodesError):
    """Generator matrix does not have full row rank."""


class ParseError(CodesError):
    """Malformed generator-matrix file."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
