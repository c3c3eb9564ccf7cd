"""
`check`: run a property suite.
"""

import argparse
from typing import IO

from kostant_bounds.adapters.outbound import write_json
from kostant_bounds.application.use_case import CheckService
from kostant_bounds.lib.schemas import CheckStatus

from .command_interface import CommandInterface
from .utils import output_stream, reject_csv

__all__ = ['CheckCommand']

EXIT_FAILED = 1


class CheckCommand(CommandInterface):
    name = 'check'
    help = 'Run a property suite: appendix, duality, lidskii, oracle or monotone'

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('--suite', required=True, choices=('appendix', 'duality', 'lidskii', 'oracle', 'monotone'))
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--samples', type=int, default=1000, help='Random cases per randomized property')
        parser.add_argument('--n-max', type=int, default=5, help='Largest netflow size in the suites')
        parser.add_argument('--out', help='Output file (JSON)')

    def handle(self, args: argparse.Namespace, stdout: IO[str]) -> int:
        reject_csv(args.out, self.name)
        report = CheckService(seed=args.seed, samples=args.samples, n_max=args.n_max).run(args.suite)
        with output_stream(args.out, stdout) as stream:
            write_json(report, stream)
        return 0 if report.status == CheckStatus.OK else EXIT_FAILED
