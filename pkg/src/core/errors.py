"""
Exception hierarchy for the Landau cluster toolkit.

Every error raised by a numerical package carries the name of the module that
produced it, so that the command-line front end can report it as
``module: message`` and choose the exit status:

- ConfigurationError -> exit status 2
- NumericalError (and subclasses) -> exit status 3
"""


class LandauClustersError(Exception):
    """Base class for all toolkit errors."""

    def __init__(self, message: str, module: str = "landau_clusters"):
        super().__init__(message)
        self.module = module

    def __str__(self):
        return f"{self.module}: {self.args[0]}"


class ConfigurationError(LandauClustersError):
    """Invalid parameters, unknown configuration keys or malformed input files."""


class NumericalError(LandauClustersError):
    """A computation failed or cannot deliver the requested accuracy."""


class QuadratureError(NumericalError):
    """Quadrature did not converge to the requested tolerance."""


class PrecisionError(NumericalError):
    """The working precision is insufficient for the requested depth."""


class TruncationError(NumericalError):
    """A basis or series truncation leaves a tail above tolerance."""


class SingularSystemError(NumericalError):
    """A discretized operator is numerically singular."""


class DegenerateCapacityError(SingularSystemError):
    """The equilibrium system stays singular after rescaling the curve."""


class ExtrapolationError(NumericalError):
    """Richardson extrapolation of one-sided limits did not settle."""
