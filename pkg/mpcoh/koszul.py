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

"""
Slot-wise Koszul resolutions of the Euler sequence and the identities they
imply. Exactness is checked through Euler characteristics only; the
differentials are never built.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Sequence

import mpcoh.config.config as Config
from mpcoh.cohomology import bundle_cohomology, euler_char
from mpcoh.exceptions import DomainError
from mpcoh.sheaves import Atom, Bundle, Multidegree, Space, make_factor


@dataclass(frozen=True)
class ComplexTerm(object):
    """One term O(degree)^mult of a complex, at index `position`.

    `slot` and `stage` locate the term in the slot resolution it came from,
    so that mult == C(n_slot + 1, stage).
    """
    position: int
    degree: Multidegree
    mult: int
    slot: int
    stage: int

    def bundle(self, space: Space) -> Bundle:
        return Bundle(space, ((Atom.line(self.degree), self.mult),))

    def to_dict(self) -> dict:
        return {'position': str(self.position),
                'degree': [str(x) for x in self.degree],
                'mult': str(self.mult),
                'slot': str(self.slot),
                'stage': str(self.stage)}

    def __str__(self):
        atom = Atom.line(self.degree).to_expr()
        return atom if self.mult == 1 else f'{atom}^{self.mult}'


def slot_resolution(space: Space, slot: int, base: Sequence[int]) -> List[ComplexTerm]:
    """0 -> O(base) -> O(base + e_j)^C(n+1,1) -> ... -> O(base + (n+1) e_j) -> 0."""
    n = space.dims[slot]
    out = list()
    for c in range(n + 2):
        degree = tuple(b + c if l == slot else b for l, b in enumerate(base))
        out.append(ComplexTerm(c, degree, comb(n + 1, c), slot, c))
    return out


def koszul_terms(space: Space, variant: str) -> List[ComplexTerm]:
    """Terms of the first-slot, last-slot or spliced Koszul complex.

    Raises
    ------
    DomainError
        If the variant is unknown.
    """
    if variant == Config.KOSZUL_FIRST:
        return slot_resolution(space, 0, space.canonical)

    if variant == Config.KOSZUL_LAST:
        base = tuple(-space.dims[-1] - 1 if l == space.s - 1 else 0 for l in range(space.s))
        return slot_resolution(space, space.s - 1, base)

    if variant == Config.KOSZUL_SPLICED:
        out = list()
        base = space.canonical
        for slot in range(space.s):
            terms = slot_resolution(space, slot, base)
            # The junction object between two slot resolutions is not a term.
            if slot > 0:
                terms = terms[1:]
            if slot < space.s - 1:
                base = terms[-1].degree
                terms = terms[:-1]
            for term in terms:
                out.append(ComplexTerm(len(out), term.degree, term.mult, term.slot, term.stage))
        return out

    raise DomainError(f'Unknown Koszul variant {variant!r}, expected one of '
                      f'{", ".join(Config.KOSZUL_VARIANTS)}.')


def complex_chi(space: Space, terms: Sequence[ComplexTerm]) -> int:
    """Alternating sum of chi over the terms of a complex."""
    return sum((-1) ** term.position * euler_char(term.bundle(space)) for term in terms)


def verify_chi_zero(space: Space, variant: str) -> bool:
    return complex_chi(space, koszul_terms(space, variant)) == 0


@dataclass(frozen=True)
class IdentityCheck(object):
    """A cohomology dimension equality lhs = rhs = expected."""
    name: str
    lhs: int
    rhs: int
    expected: int = 1

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs == self.expected

    def to_dict(self) -> dict:
        return {'name': self.name, 'lhs': str(self.lhs), 'rhs': str(self.rhs),
                'expected': str(self.expected), 'holds': self.holds}


def _h(space: Space, degree: Sequence[int], q: int) -> int:
    return bundle_cohomology(Bundle.of(space, [Atom.line(degree)]))[q]


def verify_canonical_isomorphisms(space: Space) -> List[IdentityCheck]:
    """Dimension form of the isomorphisms read off the Koszul complexes.

    For every slot j, h^{n_j}(O(-(n_j+1) e_j)) equals both h^d(omega) and
    h^0(O), and all of them equal 1. The last slot is listed on its own as
    it is the end point of the spliced complex.
    """
    top = _h(space, space.canonical, space.d)
    h0 = _h(space, space.zero(), 0)
    n_s = space.dims[-1]
    last = tuple(-n_s - 1 if l == space.s - 1 else 0 for l in range(space.s))
    h_last = _h(space, last, n_s)

    out = [IdentityCheck('h^n_s(O(0,..,-n_s-1)) = h^d(omega)', h_last, top),
           IdentityCheck('h^0(O) = h^n_s(O(0,..,-n_s-1))', h0, h_last)]
    for j, n in enumerate(space.dims):
        degree = tuple(-n - 1 if l == j else 0 for l in range(space.s))
        h_j = _h(space, degree, n)
        out.append(IdentityCheck(f'h^n_{j + 1}(O(-n_{j + 1}-1 e_{j + 1})) = h^d(omega)', h_j, top))
        out.append(IdentityCheck(f'h^0(O) = h^n_{j + 1}(O(-n_{j + 1}-1 e_{j + 1}))', h0, h_j))
    return out


def omega_atom(space: Space, slot: int, a: int) -> Atom:
    """O box ... box Omega^a(a+1) box ... box O, the omega carried in `slot`."""
    n = space.dims[slot]
    if a < 1 or a > n - 1:
        raise DomainError(f'Exterior power {a} is outside [1, {n - 1}] on P^{n}.')
    return Atom(tuple(make_factor(n, a, a + 1) if l == slot else make_factor(m, 0, 0)
                      for l, m in enumerate(space.dims)))


def omega_resolution_terms(space: Space, slot: int, a: int) -> List[ComplexTerm]:
    """Line terms of 0 -> O(a-n) -> ... -> O^C(n+1,a+1) -> Omega^a(a+1) -> 0 in one slot.

    The Omega atom itself is the cokernel and is not listed.
    """
    omega_atom(space, slot, a)
    n = space.dims[slot]
    length = n - a
    out = list()
    for position in range(length + 1):
        shift = length - position
        degree = tuple(-shift if l == slot else 0 for l in range(space.s))
        out.append(ComplexTerm(position, degree, comb(n + 1, a + 1 + shift), slot, a + 1 + shift))
    return out


def verify_omega_resolution(space: Space, slot: int, a: int) -> bool:
    terms = omega_resolution_terms(space, slot, a)
    target = euler_char(Bundle.of(space, [omega_atom(space, slot, a)]))
    sign = (-1) ** len(terms)
    return complex_chi(space, terms) + sign * target == 0


@dataclass(frozen=True)
class KoszulReport(object):
    chi_zero: dict
    isomorphisms: List[IdentityCheck]
    omega_resolutions: dict

    @property
    def all_pass(self) -> bool:
        return (all(self.chi_zero.values())
                and all(c.holds for c in self.isomorphisms)
                and all(self.omega_resolutions.values()))

    def to_dict(self) -> dict:
        return {'chi_zero': dict(self.chi_zero),
                'isomorphisms': [c.to_dict() for c in self.isomorphisms],
                'omega_resolutions': dict(self.omega_resolutions),
                'all_pass': self.all_pass}


def koszul_verify(space: Space) -> KoszulReport:
    """Run every Koszul identity on a space."""
    logger = logging.getLogger('timestamp')
    chi_zero = {variant: verify_chi_zero(space, variant) for variant in Config.KOSZUL_VARIANTS}
    omega = dict()
    for slot, n in enumerate(space.dims):
        for a in range(1, n):
            omega[f'slot {slot + 1}, a = {a}'] = verify_omega_resolution(space, slot, a)
    report = KoszulReport(chi_zero, verify_canonical_isomorphisms(space), omega)
    if not report.all_pass:
        logging.getLogger('warnings').warning(f'Koszul identities fail on {space}.')
    logger.debug(f'Checked {len(chi_zero)} complexes and {len(omega)} omega resolutions on {space}.')
    return report
