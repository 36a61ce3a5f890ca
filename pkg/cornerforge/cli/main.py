"""
cornerforge command line.
"""

import argparse
import logging
import sys
from typing import List, Optional

from ..utils import Config
from .commands import CommandHandler


def _int_list(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--format',
        choices=('json', 'csv'),
        default='json',
        help='Output format (default: json)'
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='cornerforge',
        description='Corner-free sets: construction, counting, verification and baselines',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s construct --q 4 --d 1 --r 1 --out a1.txt   # write A_1 and report it
  %(prog)s count --q 2 --d 16                          # exact |A_r| for every r
  %(prog)s verify --in a1.txt                          # exit 0 if corner-free, 1 if not
  %(prog)s compare --d-list 10,12,14                   # green vs Behrend at matched N
  %(prog)s oracle --n 3                                # exact optimum on a 3x3 grid

Exit codes: 0 ok / corner-free, 1 corner found, 2 usage error, 3 resource cap.
Environment: CORNERFORGE_THREADS (0 = one per CPU).
        """
    )
    parser.add_argument(
        '--config', '-c',
        help='Configuration file path (JSON)'
    )
    parser.add_argument(
        '--verbose', '-v',
        action='count',
        default=0,
        help='Log progress to stderr (-v info, -vv debug)'
    )

    sub = parser.add_subparsers(dest='command', required=True)

    construct = sub.add_parser('construct', help='Build A_r and report its density')
    construct.add_argument('--q', type=int, required=True, help='Digit base q >= 2')
    construct.add_argument('--d', type=int, required=True, help='Number of digits d >= 1')
    construct.add_argument('--r', type=int, help='Radius (default: the most populated one)')
    construct.add_argument('--out', help='Write the point set to this file')
    construct.add_argument('--max-points', type=int, help='Refuse to write more points than this')
    _add_format(construct)

    count = sub.add_parser('count', help='Exact |A_r| for every radius')
    count.add_argument('--q', type=int, required=True, help='Digit base q >= 2')
    count.add_argument('--d', type=int, required=True, help='Number of digits d >= 1')
    _add_format(count)

    verify = sub.add_parser('verify', help='Check a point-set file for corners')
    verify.add_argument('--in', dest='input', required=True, help='Point-set file')

    behrend = sub.add_parser('behrend', help='Behrend sphere baseline')
    behrend.add_argument('--n-target', type=int, help='Grid side to search the best (D, n, r) for')
    behrend.add_argument('--D', type=int, help='Digit bound D >= 2 (base 2D-1)')
    behrend.add_argument('--n', type=int, help='Dimension n >= 1')
    behrend.add_argument('--r', type=int, help='Radius (default: the most populated sphere)')
    behrend.add_argument('--out', help='Write the lifted corner-free set to this file')
    behrend.add_argument('--max-points', type=int, help='Refuse to write more points than this')
    _add_format(behrend)

    compare = sub.add_parser('compare', help='Green vs Behrend density at matched N')
    compare.add_argument('--d-list', type=_int_list, required=True,
                         help='Comma-separated digit counts d >= 5')
    compare.add_argument('--n-target', type=int,
                         help='Grid side for the Behrend baseline (default: the same N)')
    _add_format(compare)

    oracle = sub.add_parser('oracle', help='Exact maximum corner-free subset of [0,n)^2')
    oracle.add_argument('--n', type=int, required=True, help='Grid side')
    oracle.add_argument('--max-n', type=int, help='Override the grid side cap')

    return parser


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for cornerforge."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    setup_logging(args.verbose)
    config = Config(args.config)
    handler = CommandHandler(config)
    return handler.process_command(args)


if __name__ == "__main__":
    sys.exit(main())
