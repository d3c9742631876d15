"""
Custom exceptions for cliquehom.

This module defines the exception classes raised by the complex, homology,
gadget and reduction services. Every exception carries a stable error code
and the process exit code the command line front end reports.
"""

from typing import Any, Dict, Optional


class CliqueHomException(Exception):
    """Base exception class for cliquehom."""

    def __init__(self, message: str, error_code: str = None, exit_code: int = 2):
        """
        Initialize cliquehom exception.

        Args:
            message: Error message
            error_code: Optional error code for categorization
            exit_code: Process exit code reported by the CLI
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.exit_code = exit_code

    def to_dict(self) -> Dict[str, Any]:
        """Structured error payload used by the CLI."""
        return {'error': self.error_code, 'message': self.message}


class DomainError(CliqueHomException):
    """Raised when an argument lies outside the operation's domain."""

    def __init__(self, message: str):
        super().__init__(message, "DOMAIN_ERROR")


class ResourceError(CliqueHomException):
    """Raised when a configured resource cap would be exceeded."""

    def __init__(self, message: str):
        super().__init__(message, "RESOURCE_ERROR")


class ParseError(CliqueHomException):
    """Raised when an input file cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, "PARSE_ERROR")
        self.line = line

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload['line'] = self.line
        return payload


class PreconditionError(CliqueHomException):
    """Raised when an input violates an operation precondition."""

    def __init__(self, message: str):
        super().__init__(message, "PRECONDITION_ERROR")


class ConstructionError(CliqueHomException):
    """Raised when a gadget or surface cannot be constructed."""

    def __init__(self, message: str):
        super().__init__(message, "CONSTRUCTION_ERROR")


class ValidationError(CliqueHomException):
    """Raised for structurally invalid data (graphs, states, terms)."""

    def __init__(self, message: str):
        super().__init__(message, "VALIDATION_ERROR")


class ConfigurationError(CliqueHomException):
    """Raised for configuration-related errors."""

    def __init__(self, message: str):
        super().__init__(message, "CONFIGURATION_ERROR")
