"""
Exception hierarchy for spinqpt.
Library code raises these; sweeps turn domain errors into row flags and the CLI maps them to exit codes.
"""

from typing import Optional, Union
from pathlib import Path


class SpinQPTError(Exception):
    """Base class for all spinqpt errors."""


class DomainError(SpinQPTError, ValueError):
    """An argument lies outside the domain where a formula or operation is defined."""


class UndefinedRegimeError(DomainError):
    """g_tilde or lambda_c is undefined because omega_tilde * omega0_tilde <= 0."""


class InadmissibleError(DomainError):
    """The superradiant transition requires |delta| < omega."""


class ResourceLimitError(SpinQPTError):
    """A dense computation would exceed its configured size cap."""


class ConfigError(SpinQPTError):
    """A run configuration could not be read or validated."""

    def __init__(self, message: str, path: Optional[Union[str, Path]] = None):
        self.path = str(path) if path is not None else None
        if self.path:
            message = f"{self.path}: {message}"
        super().__init__(message)


class OutputError(SpinQPTError, OSError):
    """Writing an output artifact failed."""

    def __init__(self, message: str, path: Union[str, Path]):
        self.path = str(path)
        super().__init__(f"{self.path}: {message}")
