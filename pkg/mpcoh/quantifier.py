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
Exact elimination of "for every integer t" over balanced twists.

For a fixed atom, cohomology degree tuple q and multidegree k, the set of t
for which the Künneth term of E(t, ..., t) (x) O(k) is non-zero is an
integer interval: each slot contributes a ray up (q_j = 0), a ray down
(q_j = n_j), a single point (q_j = p for Omega^p) or nothing. Since every
Künneth term is non-negative, H^i vanishes for all t exactly when every
such interval is empty.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence, Tuple

from mpcoh.cohomology import atom_cohomology, factor_degrees, kunneth_term
from mpcoh.exceptions import DomainError, MPCohException
from mpcoh.sheaves import (Atom, Bundle, FactorSheaf, Line, Multidegree, Space,
                           twist_atom)


@dataclass(frozen=True, order=True)
class ExtInt(object):
    """An integer or one of -inf / +inf; ordering is total."""
    kind: int  # -1 is -inf, 0 finite, +1 is +inf
    value: int = 0

    @classmethod
    def of(cls, value: int) -> 'ExtInt':
        return cls(0, value)

    @property
    def is_finite(self) -> bool:
        return self.kind == 0

    def __add__(self, other: int) -> 'ExtInt':
        if not isinstance(other, int):
            raise MPCohException(f'Only integer offsets can be added to {self}.')
        return ExtInt(0, self.value + other) if self.is_finite else self

    def __int__(self):
        if not self.is_finite:
            raise MPCohException(f'{self} has no integer value.')
        return self.value

    def __str__(self):
        if self.kind < 0:
            return '-inf'
        if self.kind > 0:
            return '+inf'
        return str(self.value)


NEG_INF = ExtInt(-1)
POS_INF = ExtInt(1)


@dataclass(frozen=True)
class TwistInterval(object):
    """The integers t with lo <= t <= hi. Empty intervals are stored as [+inf, -inf]."""
    lo: ExtInt = NEG_INF
    hi: ExtInt = POS_INF

    def __post_init__(self):
        if self.lo > self.hi or self.lo == POS_INF or self.hi == NEG_INF:
            object.__setattr__(self, 'lo', POS_INF)
            object.__setattr__(self, 'hi', NEG_INF)

    @classmethod
    def empty(cls) -> 'TwistInterval':
        return cls(POS_INF, NEG_INF)

    @classmethod
    def point(cls, t: int) -> 'TwistInterval':
        return cls(ExtInt.of(t), ExtInt.of(t))

    @classmethod
    def at_least(cls, t: int) -> 'TwistInterval':
        return cls(ExtInt.of(t), POS_INF)

    @classmethod
    def at_most(cls, t: int) -> 'TwistInterval':
        return cls(NEG_INF, ExtInt.of(t))

    def is_empty(self) -> bool:
        return self.lo == POS_INF

    def is_bounded(self) -> bool:
        return self.is_empty() or (self.lo.is_finite and self.hi.is_finite)

    def intersect(self, other: 'TwistInterval') -> 'TwistInterval':
        return TwistInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def __contains__(self, t: int) -> bool:
        return not self.is_empty() and self.lo <= ExtInt.of(t) <= self.hi

    def representative(self) -> Optional[int]:
        """Smallest member, or the upper end of a ray unbounded below."""
        if self.is_empty():
            return None
        if self.lo.is_finite:
            return self.lo.value
        if self.hi.is_finite:
            return self.hi.value
        return 0

    def __str__(self):
        if self.is_empty():
            return 'empty'
        if self.lo == self.hi:
            return '{' + str(self.lo) + '}'
        return f'[{self.lo}, {self.hi}]'


ANY_T = TwistInterval()


def factor_support(n: int, f: FactorSheaf, q: int, offset: int) -> TwistInterval:
    """The set of t with h^q(f (x) O(t + offset)) != 0 on P^n.

    Raises
    ------
    DomainError
        If q lies outside [0, n].
    """
    if q < 0 or q > n:
        raise DomainError(f'Cohomology degree {q} is outside [0, {n}] on P^{n}.')
    if isinstance(f, Line):
        if q == 0:
            return TwistInterval.at_least(-f.a - offset)
        if q == n:
            return TwistInterval.at_most(-f.a - offset - n - 1)
        return TwistInterval.empty()
    p, c = f.p, f.t
    if q == 0:
        return TwistInterval.at_least(p - c - offset + 1)
    if q == p:
        return TwistInterval.point(-c - offset)
    if q == n:
        return TwistInterval.at_most(p - n - c - offset - 1)
    return TwistInterval.empty()


def tuple_support(space: Space, atom: Atom, q: Sequence[int], k: Sequence[int]) -> TwistInterval:
    """The set of t where the Künneth term at q of atom(t, ..., t) (x) O(k) is non-zero."""
    k = space.check_multidegree(k)
    out = ANY_T
    for n, f, qj, kj in zip(space.dims, atom.factors, q, k):
        out = out.intersect(factor_support(n, f, qj, kj))
        if out.is_empty():
            break
    return out


def degree_tuples(space: Space, atom: Atom, i: int) -> Iterator[Tuple[int, ...]]:
    """Degree tuples q with sum i that can carry cohomology, in lexicographic order."""
    choices = [factor_degrees(n, f) for n, f in zip(space.dims, atom.factors)]
    for q in product(*choices):
        if sum(q) == i:
            yield q


@dataclass(frozen=True)
class Witness(object):
    """A certified non-vanishing H^i(E(t, ..., t) (x) O(k)) != 0.

    `dim` is the Künneth term at q for one copy of the atom, `total` is
    h^i of the twisted atom (also one copy).
    """
    atom_index: int
    i: int
    k: Multidegree
    t: int
    q: Tuple[int, ...]
    dim: int
    total: int

    def to_dict(self) -> dict:
        return {'atom_index': str(self.atom_index),
                'i': str(self.i),
                'k': [str(x) for x in self.k],
                't': str(self.t),
                'q': [str(x) for x in self.q],
                'dim': str(self.dim),
                'total': str(self.total)}

    def __str__(self):
        k = ','.join(str(x) for x in self.k)
        q = ','.join(str(x) for x in self.q)
        return f'i={self.i} k=({k}) t={self.t} q=({q}) dim={self.dim} [summand {self.atom_index}]'


def make_witness(bundle: Bundle, atom_index: int, i: int, k: Sequence[int], t: int,
                 q: Sequence[int]) -> Witness:
    space = bundle.space
    atom = bundle.summands[atom_index][0]
    twisted = twist_atom(space, atom, tuple(kj + t for kj in k))
    return Witness(atom_index=atom_index, i=i, k=tuple(k), t=t, q=tuple(q),
                   dim=kunneth_term(space, twisted, q),
                   total=atom_cohomology(space, twisted)[i])


def nonvanishing_witness(bundle: Bundle, i: int, k: Sequence[int],
                         t: Optional[int] = None) -> Optional[Witness]:
    """Find t (fixed, or any integer when `t` is None) with H^i(E(t,..,t) (x) O(k)) != 0.

    Returns the witness at the smallest feasible t, ties broken by the
    lexicographically smallest q and then the lowest summand index, or None
    when the cohomology vanishes for every admissible t.

    Raises
    ------
    DomainError
        If i lies outside [1, d].
    """
    space = bundle.space
    if i < 1 or i > space.d:
        raise DomainError(f'Cohomology degree {i} is outside [1, {space.d}].')
    k = space.check_multidegree(k)
    constraint = ANY_T if t is None else TwistInterval.point(t)

    best = None
    for atom_index, atom in enumerate(bundle.atoms):
        for q in degree_tuples(space, atom, i):
            support = tuple_support(space, atom, q, k).intersect(constraint)
            if support.is_empty():
                continue
            key = (support.lo, support.representative(), q, atom_index)
            if best is None or key < best:
                best = key

    if best is None:
        return None
    _, rep_t, q, atom_index = best
    return make_witness(bundle, atom_index, i, k, rep_t, q)
