"""Exception hierarchy shared by every fibdir module."""

from __future__ import annotations


class FibdirError(Exception):
    """Base class for all library errors."""

    code = "error"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class DivisionByZero(FibdirError, ZeroDivisionError):
    code = "division_by_zero"


class InvalidWord(FibdirError, ValueError):
    code = "invalid_word"


class EmptyWord(FibdirError, ValueError):
    code = "empty_word"


class DomainError(FibdirError, ValueError):
    code = "domain_error"


class PrecisionError(FibdirError):
    code = "precision_error"


class NoConvergence(FibdirError):
    code = "no_convergence"


class PoleProximity(FibdirError):
    """Raised when an evaluation point sits on (or too close to) a pole."""

    code = "pole_proximity"

    def __init__(self, distance, s=None, quantity: str = "|1 - 2*beta^-s + beta^-3s|"):
        self.distance = distance
        self.s = s
        super().__init__(f"{quantity} = {float(distance):.3e} at s = {s}")

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["distance"] = str(self.distance)
        return d


class ParseError(FibdirError, ValueError):
    code = "parse_error"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["line"] = self.line
        return d


class ConfigError(FibdirError, ValueError):
    code = "config_error"
