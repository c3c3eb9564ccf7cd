"""
Serialisers for everything the command line emits.

JSON goes through msgspec with sorted keys and floats rounded to a fixed number of significant
digits, so identical inputs give byte-identical output. Tables go through the csv module.
"""

import csv
import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import IO, Any

import msgspec

from kostant_bounds.application.services.lidskii import LidskiiTerm
from kostant_bounds.config.base_settings import get_settings
from kostant_bounds.config.constants import COUNT_KEY, SWEEP_COLUMNS
from kostant_bounds.domain.flow_matrix import FlowMatrix
from kostant_bounds.lib.schemas import BoundReport, FlowMatrixSchema, ScalingTraceRow, SweepRow, format_value

__all__ = [
    'encode_json',
    'flow_schema',
    'round_floats',
    'write_capacity_csv',
    'write_count_csv',
    'write_json',
    'write_lidskii_csv',
    'write_reports_csv',
    'write_sweep_csv',
    'write_trace_csv',
    'write_vertices_jsonl',
]

settings = get_settings()

LIDSKII_COLUMNS = ('composition', 'binomial', 'kostant', 'term')
TRACE_COLUMNS = ('sweep', 'residual', 'dual', 'phase')
REPORT_COLUMNS = ('name', 'method', 'log_lower', 'log_upper', 'certified')
CAPACITY_COLUMNS = ('capacity_log', 'entropy', 'gap', 'sweeps', 'residual', 'fallback')


def flow_schema(flow: FlowMatrix) -> FlowMatrixSchema:
    return FlowMatrixSchema(
        n=flow.n,
        upper=[[format_value(value) for value in row] for row in flow.upper],
        subdiag=[format_value(value) for value in flow.subdiag],
    )


def _enc_hook(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_value(obj)
    raise NotImplementedError(f'Objects of type {type(obj).__name__} are not supported')


def round_floats(document: Any, digits: int | None = None) -> Any:
    """
    Round every float in a builtin document to `digits` significant digits; non-finite floats become None.
    """

    digits = digits or settings.output.FLOAT_DIGITS
    if isinstance(document, float):
        return float(f'{document:.{digits}g}') if math.isfinite(document) else None
    if isinstance(document, dict):
        return {key: round_floats(value, digits) for key, value in document.items()}
    if isinstance(document, list | tuple):
        return [round_floats(value, digits) for value in document]
    return document


def encode_json(document: Any) -> bytes:
    """
    Deterministic JSON: builtins conversion, float rounding, sorted keys.
    """

    builtins = msgspec.to_builtins(document, enc_hook=_enc_hook)
    return msgspec.json.encode(round_floats(builtins), order='sorted')


def write_json(document: Any, stream: IO[str]) -> None:
    stream.write(encode_json(document).decode())
    stream.write('\n')


def _format_cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, float):
        return f'{value:.{settings.output.FLOAT_DIGITS}g}'
    return str(value)


def _write_table(header: Sequence[str], rows: Iterable[Sequence[Any]], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(value) for value in row])


def write_sweep_csv(rows: Iterable[SweepRow], stream: IO[str]) -> None:
    """
    Sweep table with columns n, family, params, K, log_lower_avg, log_lower_lidskii, log_upper, gap.
    """

    _write_table(SWEEP_COLUMNS, (row.values() for row in rows), stream)


def write_trace_csv(trace: Iterable[ScalingTraceRow], stream: IO[str]) -> None:
    _write_table(TRACE_COLUMNS, (msgspec.to_builtins(row) for row in trace), stream)


def write_lidskii_csv(terms: Iterable[LidskiiTerm], stream: IO[str]) -> None:
    """
    Per-term dump of the Lidskii sum; compositions are written as space-separated parts.
    """

    rows = (
        (' '.join(str(part) for part in term.composition.parts), term.binomial, term.kostant, term.term)
        for term in terms
    )
    _write_table(LIDSKII_COLUMNS, rows, stream)


def write_vertices_jsonl(vertices: Iterable[FlowMatrix], stream: IO[str]) -> None:
    """
    One JSON flow per line.
    """

    for vertex in vertices:
        write_json(flow_schema(vertex), stream)


def write_count_csv(value: int, stream: IO[str]) -> None:
    _write_table((COUNT_KEY,), [(value,)], stream)


def write_reports_csv(reports: Mapping[str, BoundReport], stream: IO[str]) -> None:
    """
    One row per named bound report.
    """

    rows = (
        (name, report.method.value, report.log_lower, report.log_upper, report.certified)
        for name, report in reports.items()
    )
    _write_table(REPORT_COLUMNS, rows, stream)


def write_capacity_csv(document: Mapping[str, Any], stream: IO[str]) -> None:
    """
    The scalar fields of a capacity document as a single row; the flow and point stay JSON-only.
    """

    _write_table(CAPACITY_COLUMNS, [[document[column] for column in CAPACITY_COLUMNS]], stream)
