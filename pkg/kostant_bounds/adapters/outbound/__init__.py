from .writers import (
    encode_json,
    flow_schema,
    write_capacity_csv,
    write_count_csv,
    write_json,
    write_lidskii_csv,
    write_reports_csv,
    write_sweep_csv,
    write_trace_csv,
    write_vertices_jsonl,
)

__all__ = [
    'encode_json',
    'flow_schema',
    'write_capacity_csv',
    'write_count_csv',
    'write_json',
    'write_lidskii_csv',
    'write_reports_csv',
    'write_sweep_csv',
    'write_trace_csv',
    'write_vertices_jsonl',
]
