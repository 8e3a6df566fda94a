"""Exception hierarchy for qdrive.

Every error raised by the library derives from :class:`QdriveError`, so
callers can catch one type at the boundary.  Names follow the invariant or
contract they report on.
"""


class QdriveError(Exception):
    """Base class for all qdrive errors."""


class NotHermitian(QdriveError):
    """Matrix fails the Hermiticity check (rho10 != conj(rho01) or complex diagonal)."""


class TraceNotOne(QdriveError):
    """Density-matrix trace differs from 1 beyond tolerance."""


class NotPositive(QdriveError):
    """Density matrix has an eigenvalue below -tolerance."""


class NotNormalized(QdriveError):
    """State-vector norm differs from 1 beyond tolerance."""


class DiscriminantNegative(QdriveError):
    """Eigenvalue radicand 1/4 + |rho01|^2 - rho00*rho11 is below -1e-12 (invalid state)."""


class DegenerateDrive(QdriveError):
    """Rabi frequency is zero (zero coupling and zero detuning); closed forms divide by it."""


class ZeroCoupling(QdriveError):
    """Operation divides by the drive coupling, which is zero."""


class BadParam(QdriveError):
    """Parameter outside its documented domain (non-positive, non-finite, ...)."""


class OutOfRange(QdriveError):
    """Time lies outside the range covered by a sampled drive."""


class StepSpansDiscontinuity(QdriveError):
    """A square-pulse switching time falls strictly inside an integration step."""


class InvariantDrift(QdriveError):
    """Trace or Hermiticity drift of the propagated state exceeded 1e-6."""


class ConfigInvalid(QdriveError):
    """Scenario configuration failed validation; message names the offending field."""
