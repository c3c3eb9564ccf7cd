from .exceptions import (
    AppException,
    BadParamsError,
    DisconnectedError,
    DomainViolationError,
    EmptyPolytopeError,
    FlowError,
    HypothesisViolationError,
    InfeasibleFlowError,
    LengthMismatchError,
    NegativeArgError,
    NegativeEntryError,
    NetflowError,
    NoConvergenceError,
    NonPositiveEntryError,
    NonZeroSumError,
    RegimeViolationError,
    ResourceLimitError,
    UnsupportedError,
    UnsupportedFamilyError,
    ZeroMarginalError,
)
from .handlers import collect_exception_handlers, handle_exception

__all__ = [
    'AppException',
    'BadParamsError',
    'DisconnectedError',
    'DomainViolationError',
    'EmptyPolytopeError',
    'FlowError',
    'HypothesisViolationError',
    'InfeasibleFlowError',
    'LengthMismatchError',
    'NegativeArgError',
    'NegativeEntryError',
    'NetflowError',
    'NoConvergenceError',
    'NonPositiveEntryError',
    'NonZeroSumError',
    'RegimeViolationError',
    'ResourceLimitError',
    'UnsupportedError',
    'UnsupportedFamilyError',
    'ZeroMarginalError',
    'collect_exception_handlers',
    'handle_exception',
]
