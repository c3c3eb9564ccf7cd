"""
`bound`: entropy bound on log K_n(N) at a chosen flow.
"""

import argparse
from typing import IO

from kostant_bounds.adapters.inbound.cli.arguments import add_netflow_arguments, resolve_netflow
from kostant_bounds.adapters.outbound import write_json, write_reports_csv
from kostant_bounds.application.services.entropy_bounds import lower_bound_at, upper_bound_at
from kostant_bounds.application.services.scaling_opt import solve_entropy
from kostant_bounds.application.services.vertex_average import reference_flow

from .command_interface import CommandInterface
from .utils import is_csv, output_stream

__all__ = ['BoundCommand']


class BoundCommand(CommandInterface):
    name = 'bound'
    help = 'Entropy lower bound at the vertex average or midpoint, or the optimizer sandwich'

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_netflow_arguments(parser)
        parser.add_argument('--flow', choices=('average', 'optimizer', 'midpoint'), default='average')
        parser.add_argument('--out', help='Output file; .csv for a one-row table, JSON otherwise')

    def handle(self, args: argparse.Namespace, stdout: IO[str]) -> int:
        netflow, _ = resolve_netflow(args)
        if args.flow == 'optimizer':
            result = solve_entropy(netflow)
            report = upper_bound_at(result.flow, netflow, result.gap)
        else:
            report = lower_bound_at(reference_flow(netflow, args.flow), netflow)
        with output_stream(args.out, stdout) as stream:
            if is_csv(args.out):
                write_reports_csv({args.flow: report}, stream)
            else:
                write_json(report, stream)
        return 0
