"""
Property suite report schema.
Summarises a suite run as a status plus its individual cases, failing cases first-class.
"""

from enum import StrEnum
from typing import Any

import msgspec

__all__ = ['CaseResult', 'CheckReport', 'CheckStatus']


class CheckStatus(StrEnum):
    OK = 'ok'
    FAILED = 'failed'
    ERROR = 'error'


class CaseResult(msgspec.Struct, kw_only=True):
    """
    Outcome of one property check.

    Attributes:
        name: Case identifier, e.g. ``lidskii_count[1,1,1,-3]``.
        status: OK, FAILED (property violated) or ERROR (the check raised).
        details: Observed values for failing cases.
    """

    name: str
    status: CheckStatus = CheckStatus.OK
    details: dict[str, Any] | None = None


class CheckReport(msgspec.Struct, kw_only=True):
    """
    Result of a property suite.

    Attributes:
        suite: Suite name.
        status: OK when every case passed.
        total: Number of cases run.
        failures: Cases that failed or raised.
    """

    suite: str
    status: CheckStatus
    total: int
    failures: list[CaseResult] = msgspec.field(default_factory=list)
