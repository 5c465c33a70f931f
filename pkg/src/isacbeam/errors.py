"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration file or scenario setting. Carries the offending key path."""


class SolverError(RuntimeError):
    """Conic solver failed or returned an unusable status."""


class InfeasibleError(SolverError):
    """Problem certified (or pre-checked) infeasible."""


class ExtractionError(SolverError):
    """No feasible rank-one beamformer found during randomization."""


class VerificationError(RuntimeError):
    """Exported solution failed re-verification."""
