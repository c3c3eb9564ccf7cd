"""
Shared command-line arguments: netflow sources, family parameters and size ranges.
"""

import argparse
from fractions import Fraction

from kostant_bounds.domain.families import FamilyFactory, NamedFamily, family
from kostant_bounds.domain.netflow import NetflowVector, parse_netflow
from kostant_bounds.lib.errors import BadParamsError

__all__ = ['add_family_arguments', 'add_netflow_arguments', 'named_family', 'parse_n_range', 'resolve_netflow']


def add_family_arguments(parser: argparse.ArgumentParser, required: bool = False, n_type: type = int) -> None:
    parser.add_argument('--family', required=required, choices=FamilyFactory.names(), help='Named netflow family')
    parser.add_argument('--n', type=n_type, help='Last vertex of the DAG')
    parser.add_argument('--t', type=int, default=1, help='Dilation parameter t')
    parser.add_argument('--a', type=Fraction, default=Fraction(1), help='Scale a (linear, constant_an, power)')
    parser.add_argument('--p', type=Fraction, default=Fraction(1), help='Exponent p (power)')


def add_netflow_arguments(parser: argparse.ArgumentParser) -> None:
    """
    Either ``--netflow 1,1,1,-3`` or a family with its parameters.
    """

    parser.add_argument('--netflow', help='Comma-separated netflow, e.g. 1,1,1,-3')
    add_family_arguments(parser)


def named_family(args: argparse.Namespace) -> NamedFamily:
    return NamedFamily(tag=args.family, t=args.t, a=args.a, p=args.p)


def resolve_netflow(args: argparse.Namespace) -> tuple[NetflowVector, NamedFamily | None]:
    """
    The netflow named on the command line, with its family when one was given.

    Raises:
        BadParamsError: If neither or both sources are given, or `--n` is missing.
    """

    if (args.netflow is None) == (args.family is None):
        raise BadParamsError('Give exactly one of --netflow and --family')
    if args.netflow is not None:
        return parse_netflow(args.netflow), None
    if args.n is None:
        raise BadParamsError('--family needs --n')
    params = named_family(args)
    return family(params, args.n), params


def parse_n_range(text: str) -> list[int]:
    """
    ``3..9`` (inclusive), ``3,5,8`` or a single size.
    """

    try:
        if '..' in text:
            start, stop = text.split('..', 1)
            sizes = list(range(int(start), int(stop) + 1))
        else:
            sizes = [int(part) for part in text.split(',') if part]
    except ValueError as exc:
        raise BadParamsError(f'Cannot parse size range `{text}`') from exc
    if not sizes:
        raise BadParamsError('Empty size range', details={'range': text})
    return sizes
