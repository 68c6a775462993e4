"""Exception types shared across the package."""


class ChannelRangeError(ValueError):
    """A channel label N falls outside [T - J, T + J]."""


class IncompatibleScaleError(ValueError):
    """A rescale factor does not map J and T onto integers."""


class DegenerateSystemError(ValueError):
    """Fewer than two channels; mixing measures are undefined."""


class NumericalError(RuntimeError):
    """A numerical routine failed to converge or produced invalid output."""


class ConfigError(ValueError):
    """Invalid run configuration. Carries the offending line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
