import argparse
from contextlib import contextmanager

from mpcoh.config.config import (CRITERIA, CRITERION_ALIASES, SWEEP_MAX_SUMMANDS,
                                 SWEEP_MAX_TWIST, SWEEP_MIN_TWIST)
from mpcoh.support.custom_help_formatter import CustomHelpFormatter


@contextmanager
def subparser(parser, name, desc):
    yield parser.add_parser(name, conflict_handler='resolve', help=desc,
                            formatter_class=CustomHelpFormatter, add_help=False)


@contextmanager
def arg_group(parser, name):
    yield parser.add_argument_group(name)


def __space(group):
    group.add_argument('--space', type=str, required=True,
                       help='dimensions of the projective factors, e.g. ``1,2`` for P^1 x P^2')


def __bundle(group):
    group.add_argument('bundle', type=str,
                       help='bundle expression, e.g. ``"O(1,-5) + 2*box(O(0), Om(1,2))"``')


def __twist(group):
    group.add_argument('--twist', type=str, default=None,
                       help='tensor by O(k_1,...,k_s) before computing, e.g. ``--twist=-1,0``')


def __at(group):
    group.add_argument('--at', type=str, default=None,
                       help='check regularity at this multidegree instead of searching for Reg, e.g. ``--at=-1,-1``')


def _criterion_id(value):
    return CRITERION_ALIASES.get(value, value)


def __criterion(group):
    group.add_argument('--criterion', type=_criterion_id, choices=CRITERIA, required=True,
                       help='splitting criterion: thm31 (alias balanced) sum of balanced line bundles, '
                            'thm32 (alias unit) balanced twist of O and the O(e_j), '
                            'thm33 (alias omega) a summand O, O(e_j) or O box Om(a,a+1)')


def __min(group):
    group.add_argument('--min', type=int, default=SWEEP_MIN_TWIST,
                       help='smallest twist of an enumerated atom')


def __max(group):
    group.add_argument('--max', type=int, default=SWEEP_MAX_TWIST,
                       help='largest twist of an enumerated atom')


def __max_summands(group):
    group.add_argument('--max_summands', type=int, default=SWEEP_MAX_SUMMANDS,
                       help='largest number of summands in an enumerated bundle')


def __with_omega(group):
    group.add_argument('--with_omega', action='store_true', default=False,
                       help='also enumerate atoms with one Om(p,t) factor')


def __json(group):
    group.add_argument('--json', action='store_true', default=False,
                       help='print the result as JSON (integers are decimal strings)')


def __out_dir(group):
    group.add_argument('--out_dir', type=str, default=None,
                       help='directory to write reports and the log file to')


def __prefix(group):
    group.add_argument('--prefix', type=str, default='mpcoh',
                       help='prefix for all output files')


def __cpus(group):
    group.add_argument('--cpus', default=1, type=int, help='number of CPUs to use')


def __debug(group):
    group.add_argument('--debug', action="store_true", default=False,
                       help='log debugging information')


def __help(group):
    group.add_argument('-h', '--help', action="help", help="show help message")


def __common(group):
    __json(group)
    __out_dir(group)
    __prefix(group)
    __debug(group)
    __help(group)


def get_main_parser():
    # Setup the main, and sub parsers.
    main_parser = argparse.ArgumentParser(prog='mpcoh', add_help=False, conflict_handler='resolve')
    sub_parsers = main_parser.add_subparsers(help="--", dest='subparser_name')

    with subparser(sub_parsers, 'cohom', 'Cohomology table h^0..h^d and Euler characteristic.') as parser:
        with arg_group(parser, 'required named arguments') as grp:
            __space(grp)
            __bundle(grp)
        with arg_group(parser, 'optional arguments') as grp:
            __twist(grp)
            __common(grp)

    with subparser(sub_parsers, 'reg', 'Castelnuovo-Mumford regularity.') as parser:
        with arg_group(parser, 'required named arguments') as grp:
            __space(grp)
            __bundle(grp)
        with arg_group(parser, 'optional arguments') as grp:
            __at(grp)
            __common(grp)

    with subparser(sub_parsers, 'acm', 'Arithmetically Cohen-Macaulay test.') as parser:
        with arg_group(parser, 'required named arguments') as grp:
            __space(grp)
            __bundle(grp)
        with arg_group(parser, 'optional arguments') as grp:
            __common(grp)

    with subparser(sub_parsers, 'split', 'Splitting criterion: condition and shape side by side.') as parser:
        with arg_group(parser, 'required named arguments') as grp:
            __space(grp)
            __bundle(grp)
            __criterion(grp)
        with arg_group(parser, 'optional arguments') as grp:
            __common(grp)

    with subparser(sub_parsers, 'serre', 'Serre duality check h^q(E) = h^{d-q}(E^v x omega).') as parser:
        with arg_group(parser, 'required named arguments') as grp:
            __space(grp)
            __bundle(grp)
        with arg_group(parser, 'optional arguments') as grp:
            __common(grp)

    with subparser(sub_parsers, 'koszul_verify', 'Verify the Koszul complex identities on a space.') as parser:
        with arg_group(parser, 'required named arguments') as grp:
            __space(grp)
        with arg_group(parser, 'optional arguments') as grp:
            __common(grp)

    with subparser(sub_parsers, 'sweep', 'Run a splitting criterion over every small bundle in a box.') as parser:
        with arg_group(parser, 'required named arguments') as grp:
            __space(grp)
            __criterion(grp)
        with arg_group(parser, 'optional arguments') as grp:
            __min(grp)
            __max(grp)
            __max_summands(grp)
            __with_omega(grp)
            __cpus(grp)
            __common(grp)

    return main_parser
