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

import json
import logging
import os

from mpcoh.config.config import JSON_SCHEMA_VERSION
from mpcoh.config.output import (PATH_REPORT_JSON, PATH_REPORT_TXT,
                                 PATH_SWEEP_INCONSISTENT, PATH_SWEEP_SUMMARY)
from mpcoh.sheaves import Space
from mpcoh.support.common import decimal_strings, make_sure_path_exists


class JsonReport(object):
    """The machine readable result of one command.

    Every integer in the payload is rendered as a decimal string and keys are
    sorted, so identical inputs give byte-identical output.
    """

    def __init__(self, command: str, space: Space, expr, result: dict):
        self.command = command
        self.space = space
        self.expr = expr
        self.result = result

    def to_dict(self) -> dict:
        return {'schema_version': str(JSON_SCHEMA_VERSION),
                'command': self.command,
                'space': [str(n) for n in self.space.dims],
                'input': self.expr,
                'result': decimal_strings(self.result)}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


class ReportFile(object):
    """A report written below the output directory."""

    def __init__(self, path: str, content: str):
        self.logger = logging.getLogger('timestamp')
        self.path = path
        self.content = content

    def write(self):
        make_sure_path_exists(os.path.dirname(self.path))
        with open(self.path, 'w') as fh:
            fh.write(self.content)
            if not self.content.endswith('\n'):
                fh.write('\n')
        self.logger.debug(f'Report written to: {self.path}')


class JsonReportFile(ReportFile):
    """{prefix}.{command}.json"""

    def __init__(self, out_dir: str, prefix: str, report: JsonReport):
        path = os.path.join(out_dir, PATH_REPORT_JSON.format(prefix=prefix, command=report.command))
        super().__init__(path, report.dumps())


class TextReportFile(ReportFile):
    """{prefix}.{command}.txt, the same text printed on stdout."""

    def __init__(self, out_dir: str, prefix: str, command: str, text: str):
        path = os.path.join(out_dir, PATH_REPORT_TXT.format(prefix=prefix, command=command))
        super().__init__(path, text)


class SweepSummaryFile(ReportFile):
    """{prefix}.{criterion}.summary.json"""

    def __init__(self, out_dir: str, prefix: str, report: JsonReport, criterion: str):
        path = os.path.join(out_dir, PATH_SWEEP_SUMMARY.format(prefix=prefix, criterion=criterion))
        super().__init__(path, report.dumps())


class SweepInconsistentFile(object):
    """Tab separated list of every bundle where condition and shape disagree."""

    columns = ('bundle', 'condition_holds', 'shape_holds', 'vacuous')

    def __init__(self, out_dir: str, prefix: str, criterion: str):
        self.path = os.path.join(out_dir, PATH_SWEEP_INCONSISTENT.format(prefix=prefix,
                                                                         criterion=criterion))
        self.rows = list()

    def add_row(self, bundle: str, condition_holds: bool, shape_holds: bool, vacuous: bool):
        self.rows.append((bundle, condition_holds, shape_holds, vacuous))

    def write(self):
        make_sure_path_exists(os.path.dirname(self.path))
        with open(self.path, 'w') as fh:
            fh.write('\t'.join(self.columns) + '\n')
            for row in self.rows:
                fh.write('\t'.join(str(x).lower() if isinstance(x, bool) else x for x in row) + '\n')
