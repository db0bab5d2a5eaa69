"""Exception types raised across the package."""

from __future__ import annotations


class TxmlError(Exception):
    """Base class for all package errors."""


class DomainError(TxmlError, ValueError):
    """An input lies outside the region where a model is defined."""


class SingularityError(DomainError):
    """An input hits a pole of a closed-form expression."""


class ConfigurationError(TxmlError, ValueError):
    """Mutually exclusive or missing configuration values."""


class UnknownKindError(TxmlError, KeyError):
    """A line kind, model kind or plot kind is not registered."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class EmptyRangeError(DomainError):
    pass


class DegenerateRangeError(TxmlError, ValueError):
    """Min equals max, so a range cannot be normalized."""


class InsufficientDataError(TxmlError, ValueError):
    pass


class InvalidLayoutError(TxmlError, ValueError):
    pass


class UnfittedScalerError(TxmlError, RuntimeError):
    pass


class DivergenceError(TxmlError, RuntimeError):
    """Training loss became non-finite."""

    def __init__(self, epoch: int, loss: float):
        super().__init__(f"training diverged at epoch {epoch} (loss={loss!r})")
        self.epoch = epoch
        self.loss = loss


class SchemaError(TxmlError, ValueError):
    """A file does not conform to its schema.

    ``line`` is the 1-based line number of the offending row, when known.
    """

    def __init__(self, message: str, line: int | None = None, path=None):
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        prefix = ":".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.line = line
        self.path = path


class VersionMismatchError(SchemaError):
    def __init__(self, expected: str, found: str, path=None):
        super().__init__(
            f"model file version mismatch: expected {expected!r}, found {found!r}",
            line=1,
            path=path,
        )
        self.expected = expected
        self.found = found


class TruncatedFileError(SchemaError):
    pass


class DimensionError(SchemaError):
    pass


class EmptyReportError(TxmlError, ValueError):
    pass


class EvaluationError(TxmlError, RuntimeError):
    """A predictor failed at a specific evaluation point."""

    def __init__(self, x: float, cause: BaseException):
        super().__init__(f"predictor failed at w/h={x!r}: {cause}")
        self.x = x
