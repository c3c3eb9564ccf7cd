"""
`asymptotic`: leading asymptotic term for a family, with the known comparators at integer n.
"""

import argparse
from typing import IO

from kostant_bounds.adapters.inbound.cli.arguments import add_family_arguments, named_family
from kostant_bounds.adapters.outbound import write_json, write_reports_csv
from kostant_bounds.application.services.closed_forms import asymptotic_bound, comparators
from kostant_bounds.config.constants import COMPARATOR_MAX_N
from kostant_bounds.lib.errors import BadParamsError

from .command_interface import CommandInterface
from .utils import is_csv, output_stream

__all__ = ['AsymptoticCommand']


class AsymptoticCommand(CommandInterface):
    name = 'asymptotic'
    help = 'Uncertified asymptotic lower bound of a named family'

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_family_arguments(parser, required=True, n_type=float)
        parser.add_argument('--out', help='Output file; .csv for one row per bound, JSON otherwise')

    def handle(self, args: argparse.Namespace, stdout: IO[str]) -> int:
        if args.n is None:
            raise BadParamsError('--family needs --n')
        params = named_family(args)
        document = {'bound': asymptotic_bound(params, args.n)}
        if args.n.is_integer() and 1 <= args.n <= COMPARATOR_MAX_N:
            document['comparators'] = comparators(params, int(args.n))
        with output_stream(args.out, stdout) as stream:
            if is_csv(args.out):
                write_reports_csv({'asymptotic': document['bound'], **document.get('comparators', {})}, stream)
            else:
                write_json(document, stream)
        return 0
