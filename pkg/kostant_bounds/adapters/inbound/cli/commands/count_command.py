"""
`count`: exact value of K_n(N).
"""

import argparse
from typing import IO

from kostant_bounds.adapters.inbound.cli.arguments import add_netflow_arguments, resolve_netflow
from kostant_bounds.adapters.outbound import write_count_csv, write_json, write_lidskii_csv
from kostant_bounds.application.services.exact_count import count_brute, count_exact
from kostant_bounds.application.services.lidskii import lidskii_count, lidskii_terms
from kostant_bounds.config.constants import COUNT_KEY

from .command_interface import CommandInterface
from .utils import is_csv, output_stream

__all__ = ['CountCommand']


class CountCommand(CommandInterface):
    name = 'count'
    help = 'Exact Kostant partition function value'

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_netflow_arguments(parser)
        parser.add_argument('--method', choices=('exact', 'lidskii', 'brute'), default='exact')
        parser.add_argument(
            '--out', help='Output file; a .csv path gets a table (every term with --method lidskii), JSON otherwise'
        )

    def handle(self, args: argparse.Namespace, stdout: IO[str]) -> int:
        netflow, _ = resolve_netflow(args)
        with output_stream(args.out, stdout) as stream:
            if args.method == 'lidskii' and is_csv(args.out):
                write_lidskii_csv(lidskii_terms(netflow), stream)
                return 0
            counters = {'exact': count_exact, 'lidskii': lidskii_count, 'brute': count_brute}
            value = counters[args.method](netflow)
            if is_csv(args.out):
                write_count_csv(value, stream)
            else:
                write_json({COUNT_KEY: str(value)}, stream)
        return 0
