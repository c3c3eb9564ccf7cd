"""
Application-specific exception classes.
Organized by error categories with the process exit code each category maps to.
"""

from typing import Any

__all__ = [  # noqa:  RUF022
    # base
    'AppException',
    # netflow / parameters (usage errors)
    'NetflowError',
    'NonZeroSumError',
    'EmptyPolytopeError',
    'LengthMismatchError',
    'BadParamsError',
    'NegativeEntryError',
    'NonPositiveEntryError',
    'NegativeArgError',
    'DomainViolationError',
    'HypothesisViolationError',
    'RegimeViolationError',
    'DisconnectedError',
    'UnsupportedError',
    'UnsupportedFamilyError',
    # flows
    'FlowError',
    'InfeasibleFlowError',
    'ZeroMarginalError',
    # limits
    'ResourceLimitError',
    'NoConvergenceError',
]

EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_CONVERGENCE = 4


class AppException(Exception):  # noqa: N818
    """
    Base exception class for application errors.
    """

    exit_code: int = 1

    def __init__(self, message: str = '', details: Any = None) -> None:
        self.message = message
        self.details = details
        super().__init__(self.message)


# Netflow and parameter validation
class NetflowError(AppException):
    """
    Base exception for invalid netflow vectors and operation parameters.
    """

    exit_code = EXIT_USAGE
    message = 'Invalid netflow or parameters'

    def __init__(self, message: str | None = None, details: Any = None):
        message = message or getattr(self, 'message', '')
        super().__init__(message=message, details=details)


class NonZeroSumError(NetflowError):
    """
    Raised when the netflow entries do not sum to zero.
    """

    message = 'Netflow entries must sum to zero'


class EmptyPolytopeError(NetflowError):
    """
    Raised when a partial sum s_k is negative.
    """

    message = 'Flow polytope is empty: some partial sum is negative'


class LengthMismatchError(NetflowError):
    """
    Raised when two vectors compared entrywise differ in length.
    """

    message = 'Vectors must have equal lengths'


class BadParamsError(NetflowError):
    """
    Raised when family or operation parameters are out of range.
    """

    message = 'Bad parameters'


class NegativeEntryError(NetflowError):
    """
    Raised when a nonnegative netflow is required.
    """

    message = 'Netflow entries N_0..N_{n-1} must be nonnegative'


class NonPositiveEntryError(NetflowError):
    """
    Raised when a strictly positive netflow is required.
    """

    message = 'Netflow entries N_0..N_{n-1} must be positive'


class NegativeArgError(NetflowError):
    """
    Raised when an entropy function receives a negative argument.
    """

    message = 'Argument must be nonnegative'


class DomainViolationError(NetflowError):
    """
    Raised when a closed form is evaluated outside its domain.
    """

    message = 'Argument outside the domain of the formula'


class HypothesisViolationError(NetflowError):
    """
    Raised when a bound is requested outside its hypotheses.
    """

    message = 'Hypotheses of the bound are not satisfied'


class RegimeViolationError(NetflowError):
    """
    Raised when a regime-specific bound is requested outside its regime.
    """

    message = 'Parameters outside the regime of the bound'


class DisconnectedError(NetflowError):
    """
    Raised when a DAG is required to be connected.
    """

    message = 'Graph must be connected'


class UnsupportedError(NetflowError):
    """
    Raised when no algorithm covers the requested instance.
    """

    message = 'Unsupported instance'


class UnsupportedFamilyError(UnsupportedError):
    """
    The requested family tag is not registered in the factory.
    """

    def __init__(self, message: str | None = None, details: Any = None):
        message = message or getattr(self, 'message', '')
        super().__init__(message=f'Family `{message}` is not supported.', details=details)


# Flow feasibility
class FlowError(AppException):
    """
    Base exception for flows that are not points of their polytope.
    """

    exit_code = EXIT_USAGE
    message = 'Invalid flow'

    def __init__(self, message: str | None = None, details: Any = None):
        message = message or getattr(self, 'message', '')
        super().__init__(message=message, details=details)


class InfeasibleFlowError(FlowError):
    """
    Raised when a flow violates nonnegativity or the netflow constraints.
    """

    message = 'Flow is not a point of the flow polytope'


class ZeroMarginalError(FlowError):
    """
    Raised when a log-product bound meets a zero marginal or zero support entry.
    """

    message = 'Zero marginal or zero support entry'


# Limits
class ResourceLimitError(AppException):
    """
    Raised when a counter exceeds its configured state or enumeration cap.
    """

    exit_code = EXIT_RESOURCE
    message = 'Resource limit exceeded'

    def __init__(self, message: str | None = None, details: Any = None):
        message = message or getattr(self, 'message', '')
        super().__init__(message=message, details=details)


class NoConvergenceError(AppException):
    """
    Raised when the capacity optimizer fails to reach its tolerance.
    """

    exit_code = EXIT_CONVERGENCE
    message = 'Optimizer did not converge'

    def __init__(self, message: str | None = None, details: Any = None):
        message = message or getattr(self, 'message', '')
        super().__init__(message=message, details=details)
