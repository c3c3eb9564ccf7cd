"""
Exception handlers for the command-line front-end.
Turn exceptions into an exit code and a structured error payload.
"""

from collections.abc import Callable
from typing import Any

import msgspec

from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.lib.errors.exceptions import (
    EXIT_USAGE,
    AppException,
    FlowError,
    NetflowError,
    NoConvergenceError,
    ResourceLimitError,
)

__all__ = ['ErrorPayload', 'collect_exception_handlers', 'handle_exception']

settings = get_settings()


class ErrorPayload(msgspec.Struct, frozen=True):
    """
    Error document written to standard error.
    """

    type: str
    message: str
    details: Any = None


Handler = Callable[[BaseException], tuple[int, ErrorPayload]]


def get_error_details(exception):
    """
    Returns error details only in non-production environments.
    """

    return exception.details if settings.app.MODE != 'PROD' or settings.app.DEBUG else None


def netflow_exception_handler(exception: NetflowError) -> tuple[int, ErrorPayload]:
    """
    Handler for invalid netflow vectors and parameters.
    """

    return exception.exit_code, ErrorPayload(
        type=type(exception).__name__,
        message=exception.message,
        details=get_error_details(exception),
    )


def flow_exception_handler(exception: FlowError) -> tuple[int, ErrorPayload]:
    """
    Handler for infeasible flows.
    """

    return exception.exit_code, ErrorPayload(
        type=type(exception).__name__,
        message=exception.message,
        details=get_error_details(exception),
    )


def resource_limit_exception_handler(exception: ResourceLimitError) -> tuple[int, ErrorPayload]:
    """
    Handler for exceeded state or enumeration caps.
    """

    return exception.exit_code, ErrorPayload(
        type=type(exception).__name__,
        message=exception.message,
        details=get_error_details(exception),
    )


def no_convergence_exception_handler(exception: NoConvergenceError) -> tuple[int, ErrorPayload]:
    """
    Handler for optimizer failures.
    """

    return exception.exit_code, ErrorPayload(
        type=type(exception).__name__,
        message=exception.message,
        details=get_error_details(exception),
    )


def app_exception_handler(exception: AppException) -> tuple[int, ErrorPayload]:
    """
    Fallback handler for custom AppExceptions.
    """

    return exception.exit_code, ErrorPayload(
        type=type(exception).__name__,
        message=exception.message,
        details=get_error_details(exception),
    )


def value_error_handler(exception: ValueError) -> tuple[int, ErrorPayload]:
    """
    Handler for malformed command-line values (bad integers, ranges, settings).
    """

    return EXIT_USAGE, ErrorPayload(type=type(exception).__name__, message=str(exception))


def collect_exception_handlers() -> dict[type[BaseException], Handler]:
    """
    Collects all exception handlers into a single mapping.
    """

    return {
        NetflowError: netflow_exception_handler,
        FlowError: flow_exception_handler,
        ResourceLimitError: resource_limit_exception_handler,
        NoConvergenceError: no_convergence_exception_handler,
        AppException: app_exception_handler,
        ValueError: value_error_handler,
    }


def handle_exception(exception: BaseException) -> tuple[int, ErrorPayload] | None:
    """
    Resolve the most specific handler along the exception's MRO.

    Args:
        exception: The raised exception.

    Returns:
        The exit code and payload, or None when no handler is registered.
    """

    handlers = collect_exception_handlers()
    for klass in type(exception).__mro__:
        handler = handlers.get(klass)
        if handler is not None:
            return handler(exception)
    return None
