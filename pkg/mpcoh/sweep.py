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
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import List, Tuple

import mpcoh.config.config as Config
from mpcoh.config.config import LOG_TASK
from mpcoh.criteria import criterion_id, verify_criterion
from mpcoh.exceptions import DomainError, PreconditionError
from mpcoh.sheaves import Atom, Bundle, Diff, Line, Space
from mpcoh.support.parallel import Parallel

STATUS_CONSISTENT = 'consistent'
STATUS_INCONSISTENT = 'inconsistent'
STATUS_PRECONDITION = 'precondition'


@dataclass(frozen=True)
class SweepOutcome(object):
    expr: str
    status: str
    vacuous: bool = False
    condition_holds: bool = False
    shape_holds: bool = False


@dataclass
class SweepSummary(object):
    """Tallies of a criterion over every bundle in an enumerated box."""
    space: Space
    criterion: str
    box: Tuple[int, int]
    max_summands: int
    with_omega: bool
    total: int = 0
    consistent: int = 0
    inconsistent: int = 0
    vacuous: int = 0
    precondition_skipped: int = 0
    inconsistent_bundles: List[SweepOutcome] = field(default_factory=list)

    def add(self, outcome: SweepOutcome):
        """Count the outcome in exactly one bucket.

        Vacuous outcomes are counted as vacuous only, but a vacuous bundle
        whose shape fails is still listed in `inconsistent_bundles`.
        """
        self.total += 1
        if outcome.status == STATUS_INCONSISTENT:
            self.inconsistent_bundles.append(outcome)
        if outcome.status == STATUS_PRECONDITION:
            self.precondition_skipped += 1
        elif outcome.vacuous:
            self.vacuous += 1
        elif outcome.status == STATUS_CONSISTENT:
            self.consistent += 1
        else:
            self.inconsistent += 1

    def to_dict(self) -> dict:
        return {'criterion': self.criterion,
                'box': list(self.box),
                'max_summands': self.max_summands,
                'with_omega': self.with_omega,
                'total': self.total,
                'consistent': self.consistent,
                'inconsistent': self.inconsistent,
                'vacuous': self.vacuous,
                'precondition_skipped': self.precondition_skipped,
                'inconsistent_bundles': [{'bundle': o.expr,
                                          'condition_holds': o.condition_holds,
                                          'shape_holds': o.shape_holds,
                                          'vacuous': o.vacuous}
                                         for o in self.inconsistent_bundles]}


def enumerate_atoms(space: Space, lo: int, hi: int, with_omega: bool = False) -> List[Atom]:
    """Line atoms with twists in [lo, hi], and optionally atoms with one
    Omega^a(c) slot (c in [lo, hi]) and line factors elsewhere."""
    twists = range(lo, hi + 1)
    atoms = [Atom.line(a) for a in product(twists, repeat=space.s)]
    if with_omega:
        for slot, n in enumerate(space.dims):
            slot_choices = [[Line(a) for a in twists] for _ in space.dims]
            slot_choices[slot] = [Diff(p, c) for p in range(1, n) for c in twists]
            atoms.extend(Atom(factors) for factors in product(*slot_choices))
    return sorted(atoms, key=lambda atom: atom.sort_key())


def enumerate_bundles(space: Space, lo: int, hi: int, max_summands: int,
                      with_omega: bool = False) -> List[Bundle]:
    """Every multiset of 1..max_summands atoms, in canonical form."""
    atoms = enumerate_atoms(space, lo, hi, with_omega)
    out = list()
    for size in range(1, max_summands + 1):
        for combo in combinations_with_replacement(atoms, size):
            out.append(Bundle.of(space, combo).canonical())
    return out


def check_bundle(item: Tuple[Bundle, str]) -> SweepOutcome:
    """Producer for the worker pool; module level so that it pickles."""
    bundle, criterion = item
    try:
        report = verify_criterion(bundle, criterion)
    except PreconditionError:
        return SweepOutcome(bundle.to_expr(), STATUS_PRECONDITION)
    status = STATUS_CONSISTENT if report.consistent else STATUS_INCONSISTENT
    return SweepOutcome(bundle.to_expr(), status, report.vacuous,
                        report.condition_holds, report.shape_holds)


class Sweep(object):
    """Runs a splitting criterion over an enumerated family of bundles."""

    def __init__(self, cpus=1):
        self.logger = logging.getLogger('timestamp')
        self.cpus = cpus

    def run(self, space: Space, criterion: str,
            lo: int = Config.SWEEP_MIN_TWIST, hi: int = Config.SWEEP_MAX_TWIST,
            max_summands: int = Config.SWEEP_MAX_SUMMANDS,
            with_omega: bool = False) -> SweepSummary:
        """Verify `criterion` on every bundle of at most `max_summands` atoms.

        Raises
        ------
        DomainError
            If the box is empty, max_summands < 1 or the criterion is unknown.
        """
        criterion = criterion_id(criterion)
        if lo > hi:
            raise DomainError(f'Empty twist box [{lo}, {hi}].')
        if max_summands < 1:
            raise DomainError(f'max_summands must be at least 1, got {max_summands}.')

        bundles = enumerate_bundles(space, lo, hi, max_summands, with_omega)
        self.logger.log(LOG_TASK, f'Checking the {criterion} criterion on {len(bundles):,} '
                                  f'bundles on {space} ({self.cpus} CPUs).')

        summary = SweepSummary(space, criterion, (lo, hi), max_summands, with_omega)
        parallel = Parallel(self.cpus)
        outcomes = parallel.run(check_bundle, [(b, criterion) for b in bundles],
                                progress='Sweeping')
        for outcome in outcomes:
            summary.add(outcome)

        self.logger.info(f'{summary.consistent:,} consistent, {summary.inconsistent:,} inconsistent, '
                         f'{summary.vacuous:,} vacuous, {summary.precondition_skipped:,} '
                         f'skipped by precondition.')
        return summary


def sweep(space: Space, criterion: str, lo: int = Config.SWEEP_MIN_TWIST,
          hi: int = Config.SWEEP_MAX_TWIST, max_summands: int = Config.SWEEP_MAX_SUMMANDS,
          with_omega: bool = False, cpus: int = 1) -> SweepSummary:
    return Sweep(cpus).run(space, criterion, lo, hi, max_summands, with_omega)
