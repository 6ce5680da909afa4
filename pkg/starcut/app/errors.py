from __future__ import annotations


class StarcutError(Exception):
    """Base error. `detail` is shown to CLI users, `exit_code` is the process status."""

    exit_code = 2

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


class ParameterError(StarcutError):
    pass


class InvalidInputError(StarcutError):
    pass


class OutOfTheoremRangeError(ParameterError):
    pass


class PreconditionError(ParameterError):
    pass


class SizeError(StarcutError):
    pass


class OutputError(StarcutError):
    pass


class ConfigError(StarcutError):
    pass
