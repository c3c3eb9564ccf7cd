"""
`capacity`: log-capacity of the flow generating series with its primal flow and gap.
"""

import argparse
from typing import IO

from kostant_bounds.adapters.inbound.cli.arguments import add_netflow_arguments, resolve_netflow
from kostant_bounds.adapters.outbound import flow_schema, write_capacity_csv, write_json, write_trace_csv
from kostant_bounds.application.services.scaling_opt import solve_entropy

from .command_interface import CommandInterface
from .utils import is_csv, output_stream

__all__ = ['CapacityCommand']


class CapacityCommand(CommandInterface):
    name = 'capacity'
    help = 'Capacity optimizer: dual value, maximum-entropy flow and duality gap'

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_netflow_arguments(parser)
        parser.add_argument('--tol', type=float, help='Marginal residual tolerance')
        parser.add_argument('--trace', help='CSV file receiving the per-sweep trace')
        parser.add_argument('--out', help='Output file; .csv for the scalar fields as a table, JSON otherwise')

    def handle(self, args: argparse.Namespace, stdout: IO[str]) -> int:
        netflow, _ = resolve_netflow(args)
        result = solve_entropy(netflow, args.tol)
        document = {
            'capacity_log': result.dual,
            'entropy': result.objective,
            'gap': result.gap,
            'sweeps': result.sweeps,
            'residual': result.residual,
            'fallback': result.fallback,
            'point': result.point,
            'flow': flow_schema(result.flow),
        }
        with output_stream(args.out, stdout) as stream:
            if is_csv(args.out):
                write_capacity_csv(document, stream)
            else:
                write_json(document, stream)
        if args.trace:
            with output_stream(args.trace, stdout) as stream:
                write_trace_csv(result.trace, stream)
        return 0
