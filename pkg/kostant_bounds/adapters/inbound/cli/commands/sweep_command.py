"""
`sweep`: exact counts against every bound over a range of sizes.
"""

import argparse
from typing import IO

from kostant_bounds.adapters.inbound.cli.arguments import add_family_arguments, named_family, parse_n_range
from kostant_bounds.adapters.outbound import write_json, write_sweep_csv
from kostant_bounds.application.use_case import SweepService

from .command_interface import CommandInterface
from .utils import is_csv, output_stream

__all__ = ['SweepCommand']


class SweepCommand(CommandInterface):
    name = 'sweep'
    help = 'Tabulate exact counts and bounds for a family over a size range'

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser, required=True, n_type=str)
        parser.add_argument('--out', help='Output file; .csv for a table, JSON otherwise')
        parser.add_argument('--threads', type=int, help='Worker count (defaults to KOSTANT_THREADS)')

    def handle(self, args: argparse.Namespace, stdout: IO[str]) -> int:
        sizes = parse_n_range(args.n or '')
        rows = SweepService(threads=args.threads).run(named_family(args), sizes)
        with output_stream(args.out, stdout) as stream:
            if is_csv(args.out):
                write_sweep_csv(rows, stream)
            else:
                write_json(rows, stream)
        return 0
