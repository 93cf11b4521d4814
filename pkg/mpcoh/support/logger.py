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
import ntpath
import os
import re
import sys

from tqdm import tqdm

from mpcoh.config.config import LOG_TASK
from .common import make_sure_path_exists

DATE_FMT = "%Y-%m-%d %H:%M:%S"


def supports_colour():
    """Check that stderr is a terminal that supports colour.

    Returns
    -------
    bool
        True if the terminal supports colour, False otherwise.
    """
    try:
        supported_platform = sys.platform != 'win32' or 'ANSICON' in os.environ
        is_a_tty = hasattr(sys.stderr, 'isatty') and sys.stderr.isatty()
        return supported_platform and is_a_tty
    except Exception:
        return False


def colour(to_fmt, attr=None, fg=None, bg=None):
    """Format a string using ANSI colour encoding, if the terminal supports it.

    Parameters
    ----------
    to_fmt : str
        The string to be formatted.
    attr : list
        A list of attributes to be applied.
    fg : str
        The foreground colour to apply.
    bg : str
        The background colour to apply.

    Returns
    -------
    str
        A string formatted according to the specifications.
    """
    if not supports_colour():
        return to_fmt
    options_attr = {'reset': 0, 'bright': 1, 'dim': 2, 'underscore': 4,
                    'blink': 5, 'reverse': 7, 'hidden': 8}
    options_col = {'black': 0, 'red': 1, 'green': 2, 'yellow': 3, 'blue': 4,
                   'magenta': 5, 'cyan': 6, 'white': 7}
    options = list() if not attr else [str(options_attr[x]) for x in attr]
    if fg:
        options.append(str(30 + options_col[fg]))
    if bg:
        options.append(str(40 + options_col[bg]))
    return '\x1b[{}m{}\x1b[0m'.format(';'.join(options), to_fmt)


def _level_fmt(label):
    return logging.Formatter(fmt=f"[%(asctime)s] {label} %(message)s", datefmt=DATE_FMT)


class SpecialFormatter(logging.Formatter):
    """Terminal output rules, one coloured label per level."""

    def __init__(self):
        super().__init__()
        self.task_fmt = _level_fmt(colour('TASK:', ['bright']))
        self.err_fmt = _level_fmt(colour('ERROR:', ['bright'], 'red'))
        self.warn_fmt = _level_fmt(colour('WARNING:', ['bright'], 'yellow'))
        self.info_fmt = _level_fmt(colour('INFO:', ['bright']))
        self.debug_fmt = _level_fmt(colour('DEBUG:', ['bright'], 'green'))

    def format(self, record):
        if record.levelno == LOG_TASK:
            return self.task_fmt.format(record)
        if record.levelno >= logging.ERROR:
            return self.err_fmt.format(record)
        elif record.levelno >= logging.WARNING:
            return self.warn_fmt.format(record)
        elif record.levelno >= logging.INFO:
            return self.info_fmt.format(record)
        return self.debug_fmt.format(record)


class ColourlessFormatter(SpecialFormatter):
    """Log file output rules (removes all colour characters)."""
    ansi_escape = re.compile(r'\x1b[^m]*m')

    def __init__(self):
        super().__init__()
        self.task_fmt = _level_fmt('TASK:')
        self.err_fmt = _level_fmt('ERROR:')
        self.warn_fmt = _level_fmt('WARNING:')
        self.info_fmt = _level_fmt('INFO:')
        self.debug_fmt = _level_fmt('DEBUG:')

    def format(self, record):
        record.msg = self.ansi_escape.sub('', str(record.msg))
        return super().format(record)


def logger_setup(log_dir, log_file, program_name, version, debug=False):
    """Setup loggers.

    Three loggers are configured: 'timestamp' prefixes each record with the
    time and level, 'no_timestamp' writes records verbatim and 'warnings'
    collects discrepancies found while checking criteria. Console output
    goes to stderr (through tqdm) so that stdout only carries the command
    result. When `log_dir` is set a colourless log file and a separate
    warnings file are written there.

    Parameters
    ----------
    log_dir : str
        Output directory for log file, or None.
    log_file : str
        Desired name of log file.
    program_name : str
        Name of program.
    version : str
        Program version number.
    debug : boolean
        Log DEBUG records.
    """
    level = logging.DEBUG if debug else logging.INFO

    timestamp_logger = logging.getLogger('timestamp')
    no_timestamp_logger = logging.getLogger('no_timestamp')
    warning_logger = logging.getLogger('warnings')
    for cur_logger in (timestamp_logger, no_timestamp_logger, warning_logger):
        cur_logger.setLevel(level)
        cur_logger.propagate = False
        for handler in list(cur_logger.handlers):
            cur_logger.removeHandler(handler)

    # Pass through tqdm before writing to stderr to fix line return issues.
    tqdm_stream = TqdmStream()

    timestamp_stream_logger = logging.StreamHandler(tqdm_stream)
    timestamp_stream_logger.setFormatter(SpecialFormatter())
    timestamp_logger.addHandler(timestamp_stream_logger)

    no_timestamp_stream_logger = logging.StreamHandler(tqdm_stream)
    no_timestamp_stream_logger.setFormatter(None)
    no_timestamp_logger.addHandler(no_timestamp_stream_logger)

    warning_stream_logger = logging.StreamHandler(tqdm_stream)
    warning_stream_logger.setFormatter(SpecialFormatter())
    warning_logger.addHandler(warning_stream_logger)

    if log_dir:
        make_sure_path_exists(log_dir)
        log_path = os.path.join(log_dir, log_file)

        timestamp_file_logger = logging.FileHandler(log_path, 'a')
        timestamp_file_logger.setFormatter(ColourlessFormatter())
        timestamp_logger.addHandler(timestamp_file_logger)

        no_timestamp_file_logger = logging.FileHandler(log_path, 'a')
        no_timestamp_file_logger.setFormatter(None)
        no_timestamp_logger.addHandler(no_timestamp_file_logger)

        warning_fh = logging.FileHandler(log_path.replace('.log', '.warnings.log'), 'a')
        warning_fh.setFormatter(ColourlessFormatter())
        warning_logger.addHandler(warning_fh)

    timestamp_logger.debug(f'{program_name} v{version}')
    base_name = ntpath.basename(sys.argv[0])
    prog_name = program_name if base_name == '__main__.py' else base_name
    timestamp_logger.debug(f'{prog_name} {" ".join(sys.argv[1:])}')


class TqdmStream(object):
    """Stream for logging handlers that writes through tqdm onto stderr,
    so that log lines never break a progress bar."""

    def __init__(self):
        tqdm(disable=True, total=0)  # initialise internal lock

    @classmethod
    def write(cls, msg):
        tqdm.write(msg, file=sys.stderr, end='')

    @classmethod
    def flush(cls):
        sys.stderr.flush()
