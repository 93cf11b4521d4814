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
import os
import sys

import mpcoh.config.config as Config
from mpcoh.cohomology import bundle_cohomology, hilbert_polynomial, serre_check
from mpcoh.criteria import (REG_FOUND, REG_MINUS_INFINITY, acm_closed_form_line,
                            balanced_regularity, is_acm, is_regular_at,
                            verify_criterion)
from mpcoh.expr import format_bundle, parse_bundle, parse_multidegree, parse_space
from mpcoh.io.report import (JsonReport, JsonReportFile, SweepInconsistentFile,
                             SweepSummaryFile, TextReportFile)
from mpcoh.koszul import koszul_terms, koszul_verify
from mpcoh.sheaves import Space, rank, twist_bundle
from mpcoh.sweep import Sweep


def _bool(value) -> str:
    return 'n/a' if value is None else str(value).lower()


class OptionsParser(object):

    def __init__(self, version):
        """Initialization.

        Parameters
        ----------
        version : str
            The current version number (e.g. 0.3.0).
        """
        self.logger = logging.getLogger('timestamp')
        self.warnings = logging.getLogger('warnings')
        self.version = version

    def _read_inputs(self, options):
        """Parse the --space flag and, if present, the bundle expression."""
        space = parse_space(options.space)
        bundle = None
        if hasattr(options, 'bundle'):
            bundle = parse_bundle(options.bundle, space)
            self.logger.debug(f'Parsed {format_bundle(bundle)} on {space}.')
        return space, bundle

    def _emit(self, options, command: str, space: Space, result: dict, text: str):
        """Print the result on stdout and write the reports to --out_dir.

        Parameters
        ----------
        options : argparse.Namespace
            The CLI arguments input by the user.
        command : str
            The name of the command that produced the result.
        space : Space
            The ambient space.
        result : dict
            The JSON payload; integers are converted to decimal strings.
        text : str
            The human readable rendering of the result.
        """
        report = JsonReport(command, space, getattr(options, 'bundle', None), result)
        sys.stdout.write((report.dumps() if options.json else text) + '\n')
        sys.stdout.flush()

        if options.out_dir:
            JsonReportFile(options.out_dir, options.prefix, report).write()
            TextReportFile(options.out_dir, options.prefix, command, text).write()

    def cohom(self, options):
        space, bundle = self._read_inputs(options)
        if options.twist:
            k = parse_multidegree(options.twist, space)
            bundle = twist_bundle(bundle, k)
        table = bundle_cohomology(bundle)
        poly = hilbert_polynomial(bundle)

        result = {'bundle': format_bundle(bundle),
                  'rank': rank(bundle),
                  'h': list(table.h),
                  'chi': table.chi,
                  'hilbert_polynomial': str(poly)}
        text = '\n'.join([f'bundle: {format_bundle(bundle)} on {space}',
                          f'rank: {rank(bundle)}',
                          'h: ' + ' '.join(f'h^{q}={h}' for q, h in enumerate(table.h)),
                          f'chi: {table.chi}',
                          f'chi(E(t,..,t)): {poly}'])
        self._emit(options, 'cohom', space, result, text)

    def reg(self, options):
        space, bundle = self._read_inputs(options)
        if options.at:
            p = parse_multidegree(options.at, space)
            regular, witness = is_regular_at(bundle, p)
            result = {'at': list(p),
                      'regular': regular,
                      'witness': None if witness is None else witness.to_dict()}
            text = f'regular at ({",".join(str(x) for x in p)}): {_bool(regular)}'
            if witness is not None:
                text += f'\nwitness: {witness}'
        else:
            res = balanced_regularity(bundle)
            result = res.to_dict()
            lo, hi = res.window
            if res.status == REG_FOUND:
                text = f'Reg: {res.reg}\nwindow: [{lo}, {hi}]'
                for witness in res.failures_at_reg_minus_1:
                    text += f'\nfails at Reg-1: {witness}'
            elif res.status == REG_MINUS_INFINITY:
                text = 'Reg: -inf (zero bundle)'
            else:
                text = f'Reg: none in window [{lo}, {hi}]'
        self._emit(options, 'reg', space, result, text)

    def acm(self, options):
        space, bundle = self._read_inputs(options)
        verdict, witness = is_acm(bundle)

        # The closed form only applies to sums of line bundles.
        closed_form, consistent = None, None
        if all(atom.is_line() for atom in bundle.atoms):
            closed_form = all(acm_closed_form_line(space, atom.line_twists()) for atom in bundle.atoms)
            consistent = closed_form == verdict
            if not consistent:
                self.warnings.warning(f'Closed-form aCM test disagrees with the cohomology '
                                      f'for {format_bundle(bundle)} on {space}.')

        result = {'acm': verdict,
                  'witness': None if witness is None else witness.to_dict(),
                  'closed_form': closed_form,
                  'consistent': consistent}
        text = f'aCM: {_bool(verdict)}'
        if witness is not None:
            text += f'\nwitness: {witness}'
        text += f'\nclosed form: {_bool(closed_form)}\nconsistent: {_bool(consistent)}'
        self._emit(options, 'acm', space, result, text)

    def split(self, options):
        space, bundle = self._read_inputs(options)
        report = verify_criterion(bundle, options.criterion)

        lines = [f'criterion: {report.criterion}',
                 f'condition: {_bool(report.condition_holds)}'
                 + (' (vacuous)' if report.vacuous else ''),
                 f'shape: {_bool(report.shape_holds)}'
                 + (f' ({report.shape_certificate})' if report.shape_certificate else ''),
                 f'consistent: {_bool(report.consistent)}']
        lines.extend(f'witness: {w}' for w in report.condition_witnesses)
        self._emit(options, 'split', space, report.to_dict(), '\n'.join(lines))

    def serre(self, options):
        space, bundle = self._read_inputs(options)
        rows = serre_check(bundle)
        all_equal = all(a == b for _, a, b in rows)
        result = {'pairs': [{'q': q, 'h': a, 'h_dual': b} for q, a, b in rows],
                  'all_equal': all_equal}
        text = '\n'.join(f'h^{q}(E) = {a}, h^{space.d - q}(E^v x omega) = {b}' for q, a, b in rows)
        text += f'\nall equal: {_bool(all_equal)}'
        self._emit(options, 'serre', space, result, text)

    def koszul_verify(self, options):
        space, _ = self._read_inputs(options)
        report = koszul_verify(space)
        result = report.to_dict()
        result['terms'] = {variant: [t.to_dict() for t in koszul_terms(space, variant)]
                           for variant in Config.KOSZUL_VARIANTS}

        lines = list()
        for variant in Config.KOSZUL_VARIANTS:
            terms = ' -> '.join(str(t) for t in koszul_terms(space, variant))
            lines.append(f'{variant}: 0 -> {terms} -> 0, chi = 0: {_bool(report.chi_zero[variant])}')
        for check in report.isomorphisms:
            lines.append(f'{check.name}: {check.lhs} = {check.rhs}: {_bool(check.holds)}')
        for name, ok in report.omega_resolutions.items():
            lines.append(f'omega resolution {name}: {_bool(ok)}')
        lines.append(f'all pass: {_bool(report.all_pass)}')
        self._emit(options, 'koszul_verify', space, result, '\n'.join(lines))

    def sweep(self, options):
        space, _ = self._read_inputs(options)
        summary = Sweep(options.cpus).run(space, options.criterion, options.min, options.max,
                                          options.max_summands, options.with_omega)
        result = summary.to_dict()
        text = '\n'.join([f'criterion: {summary.criterion} on {space}',
                          f'bundles: {summary.total}',
                          f'consistent: {summary.consistent}',
                          f'inconsistent: {summary.inconsistent}',
                          f'vacuous: {summary.vacuous}',
                          f'precondition skipped: {summary.precondition_skipped}']
                         + [f'inconsistent: {o.expr} (condition {_bool(o.condition_holds)}, '
                            f'shape {_bool(o.shape_holds)})' for o in summary.inconsistent_bundles])
        self._emit(options, 'sweep', space, result, text)

        if options.out_dir:
            report = JsonReport('sweep', space, None, result)
            SweepSummaryFile(options.out_dir, options.prefix, report, summary.criterion).write()
            tsv = SweepInconsistentFile(options.out_dir, options.prefix, summary.criterion)
            for o in summary.inconsistent_bundles:
                tsv.add_row(o.expr, o.condition_holds, o.shape_holds, o.vacuous)
            tsv.write()

    def parse_options(self, options):
        """Parse user options and call the correct command.

        Parameters
        ----------
        options : argparse.Namespace
            The CLI arguments input by the user.
        """

        # Correct user paths
        if hasattr(options, 'out_dir') and options.out_dir:
            options.out_dir = os.path.expanduser(options.out_dir)

        # Assert that the number of CPUs is a positive integer.
        if hasattr(options, 'cpus') and options.cpus < 1:
            self.logger.warning('You cannot use less than 1 CPU, defaulting to 1.')
            options.cpus = 1

        commands = {'cohom': self.cohom,
                    'reg': self.reg,
                    'acm': self.acm,
                    'split': self.split,
                    'serre': self.serre,
                    'koszul_verify': self.koszul_verify,
                    'sweep': self.sweep}
        commands[options.subparser_name](options)

        return 0
