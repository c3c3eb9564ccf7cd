"""
`vertices`: every vertex of F_n(N), one JSON flow per line.
"""

import argparse
from typing import IO

from kostant_bounds.adapters.inbound.cli.arguments import add_netflow_arguments, resolve_netflow
from kostant_bounds.adapters.outbound import write_vertices_jsonl
from kostant_bounds.application.services.vertex_average import enumerate_vertices

from .command_interface import CommandInterface
from .utils import output_stream, reject_csv

__all__ = ['VerticesCommand']


class VerticesCommand(CommandInterface):
    name = 'vertices'
    help = 'Enumerate the vertices of the flow polytope'

    def configure(self, parser: argparse.ArgumentParser) -> None:
        add_netflow_arguments(parser)
        parser.add_argument('--out', help='Output file (JSON lines)')

    def handle(self, args: argparse.Namespace, stdout: IO[str]) -> int:
        reject_csv(args.out, self.name)
        netflow, _ = resolve_netflow(args)
        vertices = enumerate_vertices(netflow)
        with output_stream(args.out, stdout) as stream:
            write_vertices_jsonl(vertices, stream)
        return 0
