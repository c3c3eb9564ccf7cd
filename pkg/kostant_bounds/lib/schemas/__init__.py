from .bound_report import BoundMethod, BoundReport
from .check_report import CaseResult, CheckReport, CheckStatus
from .dag import Dag
from .flow_schema import FlowMatrixSchema, format_value
from .scaling_point import ScalingPoint, ScalingTraceRow
from .sweep_row import SweepRow
from .weak_composition import WeakComposition

__all__ = [
    'BoundMethod',
    'BoundReport',
    'CaseResult',
    'CheckReport',
    'CheckStatus',
    'Dag',
    'FlowMatrixSchema',
    'ScalingPoint',
    'ScalingTraceRow',
    'SweepRow',
    'WeakComposition',
    'format_value',
]
