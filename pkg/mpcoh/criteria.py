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
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

import mpcoh.config.config as Config
from mpcoh.exceptions import DomainError, PreconditionError, SemanticError
from mpcoh.quantifier import Witness, nonvanishing_witness
from mpcoh.sheaves import (Bundle, Diff, Line, Multidegree, Space, rank,
                           twist_bundle)

REG_FOUND = 'found'
REG_NONE_IN_WINDOW = 'none-in-window'
REG_MINUS_INFINITY = 'minus-infinity'


##################################################
############MULTIDEGREE RANGES####################
##################################################


def multidegrees(lower: Sequence[int]) -> Iterator[Multidegree]:
    """All k with lower_j <= k_j <= 0, in lexicographic order."""
    return product(*[range(lo, 1) for lo in lower])


def weight_multidegrees(space: Space, weight: int) -> Iterator[Multidegree]:
    """k with sum(k) = weight and -n_j <= k_j <= 0."""
    for k in multidegrees([-n for n in space.dims]):
        if sum(k) == weight:
            yield k


##################################################
############REGULARITY############################
##################################################


@dataclass(frozen=True)
class RegularityResult(object):
    """Outcome of the balanced regularity search.

    `reg` is the least p in `window` with E (p,...,p)-regular; it is None
    unless `status` is 'found'. The zero bundle has Reg = -inf.
    """
    status: str
    reg: Optional[int]
    window: Tuple[int, int]
    failures_at_reg_minus_1: Tuple[Witness, ...] = ()
    monotonicity_violations: Tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {'status': self.status,
                'reg': None if self.reg is None else str(self.reg),
                'window': [str(x) for x in self.window],
                'failures_at_reg_minus_1': [w.to_dict() for w in self.failures_at_reg_minus_1],
                'monotonicity_violations': [str(p) for p in self.monotonicity_violations]}


def regularity_failures(bundle: Bundle, p: Sequence[int],
                        first_only: bool = False) -> List[Witness]:
    """Witnesses of H^i(E(p) (x) O(k)) != 0 with sum(k) = -i and -n_j <= k_j <= 0.

    One witness per failing (i, k), ordered by i then k.
    """
    space = bundle.space
    twisted = twist_bundle(bundle, p)
    out = list()
    for i in range(1, space.d + 1):
        for k in weight_multidegrees(space, -i):
            witness = nonvanishing_witness(twisted, i, k, t=0)
            if witness is not None:
                out.append(witness)
                if first_only:
                    return out
    return out


def is_regular_at(bundle: Bundle, p: Sequence[int]) -> Tuple[bool, Optional[Witness]]:
    """Castelnuovo-Mumford regularity at the multidegree p.

    Returns
    -------
    Tuple[bool, Optional[Witness]]
        The verdict and, on failure, the first failing instance. Its twist
        t is always 0 and k is relative to E(p).
    """
    p = bundle.space.check_multidegree(p)
    failures = regularity_failures(bundle, p, first_only=True)
    if failures:
        return False, failures[0]
    return True, None


def regularity_window(bundle: Bundle) -> Tuple[int, int]:
    bound = bundle.max_parameter() + max(bundle.space.dims)
    return (-bound - Config.REG_WINDOW_LOW_PAD,
            bound + bundle.space.d + Config.REG_WINDOW_HIGH_PAD)


def monotonicity_violations(bundle: Bundle, reg: int, hi: int) -> Tuple[int, ...]:
    """Every p in (reg, hi] at which E is not (p,...,p)-regular.

    Regularity at p implies regularity at p + 1, so any hit is logged on the
    warnings logger as a defect.
    """
    space = bundle.space
    out = tuple(p for p in range(reg + 1, hi + 1) if not is_regular_at(bundle, space.balanced(p))[0])
    for p in out:
        logging.getLogger('warnings').warning(
            f'{bundle} is regular at {reg} but not at {p}.')
    return out


def balanced_regularity(bundle: Bundle) -> RegularityResult:
    """The least p such that E is (p,...,p)-regular."""
    space = bundle.space
    if bundle.is_empty():
        return RegularityResult(REG_MINUS_INFINITY, None, (0, 0))

    lo, hi = regularity_window(bundle)
    for p in range(lo, hi + 1):
        regular, _ = is_regular_at(bundle, space.balanced(p))
        if regular:
            failures = regularity_failures(bundle, space.balanced(p - 1))
            if not failures:
                logging.getLogger('warnings').warning(
                    f'{bundle} is regular at the lower end {p} of the search window.')
            violations = monotonicity_violations(bundle, p, hi)
            return RegularityResult(REG_FOUND, p, (lo, hi), tuple(failures), violations)

    logging.getLogger('warnings').warning(f'No regularity found for {bundle} in [{lo}, {hi}].')
    return RegularityResult(REG_NONE_IN_WINDOW, None, (lo, hi))


##################################################
############ACM###################################
##################################################


def is_acm(bundle: Bundle) -> Tuple[bool, Optional[Witness]]:
    """Arithmetically Cohen-Macaulay: H^i(E(t,...,t)) = 0 for 0 < i < d and every t."""
    space = bundle.space
    for i in range(1, space.d):
        witness = nonvanishing_witness(bundle, i, space.zero())
        if witness is not None:
            return False, witness
    return True, None


def acm_closed_form_line(space: Space, a: Sequence[int]) -> bool:
    """Pairwise test a_i - a_j >= -n_i on the twists of a line bundle.

    This agrees with `is_acm` on products of at most two projective spaces;
    with three or more factors it is sufficient but not necessary.
    """
    a = space.check_multidegree(a)
    for i, j in product(range(space.s), repeat=2):
        if a[i] - a[j] < -space.dims[i]:
            return False
    return True


##################################################
############SPLITTING CRITERIA####################
##################################################


@dataclass(frozen=True)
class ConditionResult(object):
    """The cohomological half of a splitting criterion.

    `instances` counts the admissible (i, k) pairs that were checked; the
    condition is vacuous when there were none.
    """
    criterion: str
    witnesses: Tuple[Witness, ...]
    instances: int

    @property
    def condition_holds(self) -> bool:
        return len(self.witnesses) == 0

    @property
    def vacuous(self) -> bool:
        return self.instances == 0


@dataclass(frozen=True)
class CriterionReport(object):
    """Cohomological condition and split shape, reported side by side."""
    criterion: str
    condition_witnesses: Tuple[Witness, ...]
    vacuous: bool
    shape_holds: bool
    shape_certificate: Optional[str] = None
    instances: int = field(default=0, compare=False)

    @property
    def condition_holds(self) -> bool:
        return len(self.condition_witnesses) == 0

    @property
    def consistent(self) -> bool:
        return self.condition_holds == self.shape_holds

    def to_dict(self) -> dict:
        return {'criterion': self.criterion,
                'condition_holds': self.condition_holds,
                'condition_witnesses': [w.to_dict() for w in self.condition_witnesses],
                'instances': str(self.instances),
                'vacuous': self.vacuous,
                'shape_holds': self.shape_holds,
                'shape_certificate': self.shape_certificate,
                'consistent': self.consistent}


def _require_nonempty(bundle: Bundle):
    if bundle.is_empty():
        raise SemanticError('Splitting criteria need a non-zero bundle.')


def _check_free_t(bundle: Bundle, criterion: str, excluded=frozenset()) -> ConditionResult:
    space = bundle.space
    witnesses, instances = list(), 0
    for i in range(1, space.d):
        for k in weight_multidegrees(space, -i):
            if k in excluded:
                continue
            instances += 1
            witness = nonvanishing_witness(bundle, i, k)
            if witness is not None:
                witnesses.append(witness)
    return ConditionResult(criterion, tuple(witnesses), instances)


def balanced_split_condition(bundle: Bundle) -> ConditionResult:
    """H^i(E(t,...,t) (x) O(k)) = 0 for 0 < i < d, sum(k) = -i,
    -n_j <= k_j <= 0 and every integer t."""
    _require_nonempty(bundle)
    return _check_free_t(bundle, Config.CRITERION_BALANCED)


def unit_split_condition(bundle: Bundle) -> ConditionResult:
    """As the balanced condition, skipping k = -n_j e_j for every slot j."""
    _require_nonempty(bundle)
    space = bundle.space
    excluded = frozenset(tuple(-n if l == j else 0 for l in range(space.s))
                         for j, n in enumerate(space.dims))
    return _check_free_t(bundle, Config.CRITERION_UNIT, excluded)


def omega_summand_condition(bundle: Bundle) -> ConditionResult:
    """Vanishing of E(-1,...,-1) (x) O(k) in the ranges used for Reg(E) = 0.

    Raises
    ------
    PreconditionError
        If the balanced regularity of the bundle is not 0.
    """
    _require_nonempty(bundle)
    space = bundle.space
    reg = balanced_regularity(bundle)
    if reg.status != REG_FOUND or reg.reg != 0:
        shown = reg.reg if reg.status == REG_FOUND else reg.status
        raise PreconditionError(f'The thm33 criterion needs Reg(E) = 0, {bundle} has Reg = {shown}.')

    witnesses, instances = list(), 0

    # sum(k) >= -i with -n_j < k_j <= 0, fixed twist t = -1
    top = min(rank(bundle), space.d) - 1
    for i in range(1, top + 1):
        for k in multidegrees([-n + 1 for n in space.dims]):
            if sum(k) < -i:
                continue
            instances += 1
            witness = nonvanishing_witness(bundle, i, k, t=-1)
            if witness is not None:
                witnesses.append(witness)

    # boundary: all slots at -n_l except slot j at -a-1, degree a + sum_{l != j} n_l
    for j, n in enumerate(space.dims):
        for a in range(1, n):
            k = tuple(-a - 1 if l == j else -space.dims[l] for l in range(space.s))
            i = a + space.d - n
            instances += 1
            witness = nonvanishing_witness(bundle, i, k, t=-1)
            if witness is not None:
                witnesses.append(witness)

    return ConditionResult(Config.CRITERION_OMEGA, tuple(witnesses), instances)


CONDITIONS = {Config.CRITERION_BALANCED: balanced_split_condition,
              Config.CRITERION_UNIT: unit_split_condition,
              Config.CRITERION_OMEGA: omega_summand_condition}


def _shape_balanced(bundle: Bundle) -> Tuple[bool, Optional[str]]:
    if bundle.is_empty():
        return True, 'zero bundle'
    twists = list()
    for atom, mult in bundle.summands:
        if not atom.is_line() or len(set(atom.line_twists())) != 1:
            return False, None
        twists.extend([atom.line_twists()[0]] * mult)
    return True, 't_i = ' + ', '.join(str(t) for t in sorted(twists))


def _shape_unit(bundle: Bundle) -> Tuple[bool, Optional[str]]:
    space = bundle.space
    if bundle.is_empty():
        return True, 'zero bundle'
    if not all(atom.is_line() for atom in bundle.atoms):
        return False, None
    bundle = bundle.canonical()
    t = min(min(atom.line_twists()) for atom in bundle.atoms)
    parts = list()
    for atom, mult in bundle.summands:
        rel = tuple(x - t for x in atom.line_twists())
        if rel == space.zero():
            label = 'O'
        elif rel in [space.unit(j) for j in range(space.s)]:
            label = f'O(e_{rel.index(1) + 1})'
        else:
            return False, None
        parts.append(label if mult == 1 else f'{mult}*{label}')
    return True, f't = {t}: ' + ' + '.join(parts)


def _is_omega_atom(space: Space, atom) -> bool:
    diffs = [(j, f) for j, f in enumerate(atom.factors) if isinstance(f, Diff)]
    if len(diffs) != 1:
        return False
    j, f = diffs[0]
    others = [g for l, g in enumerate(atom.factors) if l != j]
    return f.t == f.p + 1 and all(isinstance(g, Line) and g.a == 0 for g in others)


def _shape_omega(bundle: Bundle) -> Tuple[bool, Optional[str]]:
    # summand indices refer to the bundle as given
    space = bundle.space
    units = [space.zero()] + [space.unit(j) for j in range(space.s)]
    for idx, atom in enumerate(bundle.atoms):
        if (atom.is_line() and atom.line_twists() in units) or _is_omega_atom(space, atom):
            return True, f'summand {idx}: {atom}'
    return False, None


SHAPES = {Config.CRITERION_BALANCED: _shape_balanced,
          Config.CRITERION_UNIT: _shape_unit,
          Config.CRITERION_OMEGA: _shape_omega}


def criterion_id(criterion: str) -> str:
    """The report id of a criterion given by id or by alias.

    Raises
    ------
    DomainError
        If the criterion is unknown.
    """
    resolved = Config.CRITERION_ALIASES.get(criterion, criterion)
    if resolved not in Config.CRITERIA:
        raise DomainError(f'Unknown criterion {criterion!r}, expected one of '
                          f'{", ".join(Config.CRITERIA + tuple(Config.CRITERION_ALIASES))}.')
    return resolved


def shape_match(bundle: Bundle, criterion: str) -> Tuple[bool, Optional[str]]:
    """Does the bundle already have the split form named by the criterion?

    Returns
    -------
    Tuple[bool, Optional[str]]
        The verdict and a certificate describing the decomposition found.
    """
    return SHAPES[criterion_id(criterion)](bundle)


def verify_criterion(bundle: Bundle, criterion: str) -> CriterionReport:
    """Evaluate the condition and the shape of a splitting criterion.

    Neither half is inferred from the other; a disagreement is reported
    through `consistent` and logged as a warning. Witness and certificate
    summand indices refer to `bundle` as given.

    Raises
    ------
    DomainError
        If the criterion is unknown.
    PreconditionError
        If thm33 is run on a bundle with Reg(E) != 0.
    """
    criterion = criterion_id(criterion)
    condition = CONDITIONS[criterion](bundle)
    shape_holds, certificate = shape_match(bundle, criterion)
    report = CriterionReport(criterion=criterion,
                             condition_witnesses=condition.witnesses,
                             vacuous=condition.vacuous,
                             shape_holds=shape_holds,
                             shape_certificate=certificate,
                             instances=condition.instances)
    if not report.consistent:
        logging.getLogger('warnings').warning(
            f'{criterion} criterion on {bundle} on {bundle.space}: condition '
            f'{report.condition_holds}, shape {report.shape_holds}.')
    return report
