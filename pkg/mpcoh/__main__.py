###############################################################################
#                                                                             #
#    This program is free software: you can redistribute it and/or modify     #
#    it under the terms of the GNU General Public License as published by     #
#    the Free Software Foundation, either version 3 of the License, or        #
#    (at your option) any later version.                                      #
#                                                                             #
#    This program is distributed in the hope that it will be useful,          #
#    but WITHOUT ANY WARRANTY; without even the implied warranty of           #
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            #
#    GNU General Public License for more details.                             #
#                                                                             #
#    You should have received a copy of the GNU General Public License        #
#    along with this program. If not, see <http://www.gnu.org/licenses/>.     #
#                                                                             #
###############################################################################

import logging
import sys
import traceback

from mpcoh import __author__, __copyright__, __version__
from mpcoh.cli import get_main_parser
from mpcoh.config.output import LOG_FILE
from mpcoh.exceptions import (ExprParseError, MPCohException, PreconditionError,
                              SemanticError)
from mpcoh.main import OptionsParser
from mpcoh.support.logger import logger_setup


def print_help():
    print('''\

              ...::: mpcoh v%s :::...

  Cohomology:
    cohom  -> Cohomology table h^0..h^d, Euler characteristic
    serre  -> Check Serre duality h^q(E) = h^{d-q}(E^v x omega)

  Criteria:
    reg    -> Castelnuovo-Mumford regularity, or regularity at --at
    acm    -> Arithmetically Cohen-Macaulay test
    split  -> Splitting criterion (balanced | unit | omega)
    sweep  -> Run a splitting criterion over every small bundle in a box

  Identities:
    koszul_verify -> Koszul complexes and canonical isomorphisms

  Exit codes: 0 success, 2 parse error, 3 semantic error,
              4 precondition violated, 1 anything else

  Use: mpcoh <command> -h for command specific help
    ''' % __version__)


def _error_block(headline, e):
    msg = headline + '\n\n'
    msg += '=' * 80 + '\n'
    msg += 'EXCEPTION: {}\n'.format(type(e).__name__)
    msg += '  MESSAGE: {}\n'.format(e)
    msg += '_' * 80 + '\n\n'
    msg += traceback.format_exc()
    msg += '=' * 80
    return msg


def main():
    # -------------------------------------------------
    # get and check options
    args = None
    if len(sys.argv) == 1:
        print_help()
        sys.exit(0)
    elif sys.argv[1] in {'-v', '--v', '-version', '--version'}:
        print(f"mpcoh: version {__version__} {__copyright__} {__author__}")
        sys.exit(0)
    elif sys.argv[1] in {'-h', '--h', '-help', '--help'}:
        print_help()
        sys.exit(0)
    else:
        args = get_main_parser().parse_args()
        if args.subparser_name is None:
            print_help()
            sys.exit(0)

    # setup logger
    logger_setup(args.out_dir if hasattr(args, 'out_dir') and args.out_dir else None,
                 LOG_FILE, "mpcoh", __version__,
                 hasattr(args, 'debug') and args.debug)
    logger = logging.getLogger('timestamp')

    # -------------------------------------------------
    # do what we came here to do
    try:
        mp_parser = OptionsParser(__version__)
        mp_parser.parse_options(args)
    except KeyboardInterrupt:
        logger.error('Controlled exit resulting from interrupt signal.')
        sys.exit(1)
    except (ExprParseError, SemanticError, PreconditionError) as e:
        logger.error(f'{type(e).__name__}: {e}')
        logger.debug(traceback.format_exc())
        sys.exit(e.exit_code)
    except MPCohException as e:
        logger.error(_error_block('Controlled exit resulting from an unrecoverable error or warning.', e))
        sys.exit(e.exit_code)
    except Exception as e:
        logger.error(_error_block('Uncontrolled exit resulting from an unexpected error.', e))
        sys.exit(1)


if __name__ == '__main__':
    main()
