"""Exception types shared across the package.

Validation problems (bad configs, violated physical invariants) and
numerical failures (non-converged propagators, singular thermodynamic
response) are kept distinct so the CLI can map them to exit codes 1 and 2.
"""


class QdpumpError(Exception):
    """Base class for all package errors."""


class ValidationError(QdpumpError):
    """A configuration or argument violates a documented precondition."""


class NumericalError(QdpumpError):
    """A numerical procedure failed to meet its accuracy contract."""


class DegenerateBathError(ValidationError):
    """Spectral-density moments do not define a usable reaction coordinate."""


class StepSizeError(NumericalError):
    """Propagator did not converge under step doubling."""


class FoldAmbiguityError(NumericalError):
    """A quasienergy landed on the fold-window boundary."""


class LabelingError(NumericalError):
    """Floquet modes could not be assigned unambiguous channel labels."""


class TruncationError(NumericalError):
    """Harmonic truncation too small (Parseval deficit above threshold)."""


class DecoupledModeError(NumericalError):
    """A Floquet mode has zero total birth and death rate."""


class SingularJacobianError(NumericalError):
    """Bath thermodynamic response matrix is numerically singular."""


class TrajectoryError(NumericalError):
    """Time integration of the bath state had to terminate early."""
