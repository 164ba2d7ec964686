"""
Copyright (c) 2026 pyChainmail contributors

Command-line front end. Exit codes: 0 on success, 1 when the mathematics
fails (hypotheses, inconclusive certificates, rejected diagrams), 2 on
unreadable or invalid input. Reports go to stdout or --output; logging goes
to stderr.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import argparse
import logging
import os
import sys
from collections import namedtuple

from . import pyChainmail
from .graph import parse_graph
from .tait import parse_pd
from .utils import ChainmailError, HypothesisError, NugatoryCrossingError, SplitDiagramError, parse_int_range


logger = logging.getLogger(__name__)


RunConfig = namedtuple('RunConfig', ['command', 'input', 'output', 'outer_color', 'root', 'prefix', 'pivot', 'n_max', 'n_range',
                                     'kill', 'max_vertices', 'max_mult', 'weight_range', 'workers', 'max_candidates', 'seed', 'verbose'])

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


def build_parser():
    parser = argparse.ArgumentParser(prog='pychainmail', description='Chainmail surgery diagrams: homology, spin structures, '
                                     'surgery obstructions, Tait graphs and weight-one certificates.')
    parser.add_argument('--verbose', action='store_true', help='Log algorithmic steps to stderr')
    parser.add_argument('--output', '-o', default=None, help='Write the report to this file instead of stdout')
    parser.add_argument('--seed', type=int, default=None, help='Shuffle contraction orders with this seed (reports do not depend on it)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('analyze', help='Laplacian, homology, signature and spin structures of a graph')
    p.add_argument('input', help='Graph file (JSON)')

    p = sub.add_parser('family', help='Check the family hypotheses and their invariance along D_n')
    p.add_argument('input', help='Graph file (JSON)')
    p.add_argument('--pivot', required=True, help='Vertex whose weight drops by 2n')
    p.add_argument('--n-max', type=int, default=100, help='Largest n to recompute')

    p = sub.add_parser('certify', help='Obstruction certificate with an explicit threshold N')
    p.add_argument('input', help='Graph file (JSON)')
    p.add_argument('--pivot', required=True, help='Vertex whose weight drops by 2n')

    p = sub.add_parser('tait', help='White Tait graph and reduced Tait graph of a PD code')
    p.add_argument('input', help='PD file')
    p.add_argument('--outer-color', choices=['white', 'black'], default='black', help='Color of the unbounded face')
    p.add_argument('--root', default=None, help='Tait vertex to delete (default: longest boundary)')
    p.add_argument('--prefix', default=None, help='Write <prefix>.tait.json and <prefix>.reduced.json (default: input path without extension)')

    p = sub.add_parser('pi1', help='Presentation and weight-one certificates')
    p.add_argument('input', help='Graph file (JSON) of a reduced Tait graph')
    p.add_argument('--kill', required=True, help='Generator to kill, e.g. x3')
    p.add_argument('--n-range', default=None, help="Family range 'a..b' (needs --pivot)")
    p.add_argument('--pivot', default=None, help='Pivot of the family for --n-range')

    p = sub.add_parser('prospect', help='Enumerate small base graphs passing the family hypotheses')
    p.add_argument('--max-vertices', type=int, default=4)
    p.add_argument('--max-mult', type=int, default=3)
    p.add_argument('--weight-range', default='-5..0', help="Inclusive range 'a..b'; write --weight-range=-5..0")
    p.add_argument('--workers', type=int, default=None, help='Worker processes (capped by CHAINMAIL_THREADS)')
    p.add_argument('--max-candidates', type=int, default=2_000_000, help='Stop before examining more candidates')
    for p in sub.choices.values():
        p.add_argument('--output', '-o', default=argparse.SUPPRESS, help='Write the report to this file instead of stdout')
    return parser


def config_from_args(args):
    get = lambda name, default=None: getattr(args, name, default)
    n_range = parse_int_range(args.n_range) if get('n_range') else None
    if n_range is not None and get('pivot') is None:
        raise ChainmailError("--n-range needs --pivot")
    weight_range = parse_int_range(args.weight_range) if get('weight_range') else None
    prefix = get('prefix') or (os.path.splitext(args.input)[0] if args.command == 'tait' else None)
    return RunConfig(args.command, get('input'), args.output, get('outer_color', 'black'), get('root'), prefix, get('pivot'),
                     get('n_max', 100), n_range, get('kill'), get('max_vertices'), get('max_mult'), weight_range,
                     get('workers'), get('max_candidates'), args.seed, args.verbose)


def _read(path):
    with open(path, encoding='utf-8') as f:
        return f.read()


def run(config):
    """Run one subcommand; returns (report text, exit code)."""
    if config.command == 'analyze':
        report = pyChainmail.analyze_graph(parse_graph(_read(config.input)), seed=config.seed)
        return pyChainmail.format_analysis(report), EXIT_OK

    if config.command == 'family':
        report = pyChainmail.family_report(parse_graph(_read(config.input)), config.pivot, config.n_max)
        ok = report.hypotheses.all_pass and report.invariance.passed
        return pyChainmail.format_family(report), EXIT_OK if ok else EXIT_MATH

    if config.command == 'certify':
        cert = pyChainmail.certify_family(parse_graph(_read(config.input)), config.pivot)
        return pyChainmail.format_certify(cert), EXIT_OK

    if config.command == 'tait':
        report = pyChainmail.tait_report(parse_pd(_read(config.input)), config.outer_color, config.root)
        paths = pyChainmail.write_tait_graphs(report, config.prefix)
        return pyChainmail.format_tait(report, paths), EXIT_OK

    if config.command == 'pi1':
        report = pyChainmail.pi1_report(parse_graph(_read(config.input)), config.kill, config.n_range, config.pivot)
        return pyChainmail.format_pi1(report), EXIT_OK if pyChainmail.pi1_all_valid(report) else EXIT_MATH

    if config.command == 'prospect':
        result = pyChainmail.prospect_report(config.max_vertices, config.max_mult, config.weight_range,
                                              workers=config.workers, max_candidates=config.max_candidates)
        return pyChainmail.format_prospect(result), EXIT_OK

    raise ChainmailError(f"unknown command '{config.command}'")


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        config = config_from_args(args)
        text, code = run(config)
    except (HypothesisError, NugatoryCrossingError, SplitDiagramError) as err:
        print(f"pychainmail: {err}", file=sys.stderr)
        return EXIT_MATH
    except (ChainmailError, OSError) as err:
        print(f"pychainmail: {err}", file=sys.stderr)
        return EXIT_INPUT

    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    logger.info("%s finished with exit code %d", config.command, code)
    return code


if __name__ == '__main__':
    sys.exit(main())
