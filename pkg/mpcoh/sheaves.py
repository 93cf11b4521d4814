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
Value types for decomposable bundles on P^{n_1} x ... x P^{n_s}.

A bundle is a formal direct sum of atoms, each atom being a box product of
one factor sheaf per slot. Factor sheaves are either a twisted line bundle
O(a) or a twisted differential Omega^p(t). All types are immutable and
hashable, so they can be used as dictionary keys and sent to worker
processes.
"""

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence, Tuple, Union

from mpcoh.exceptions import DomainError, SemanticError

Multidegree = Tuple[int, ...]


@dataclass(frozen=True)
class Space(object):
    """The ambient space P^{n_1} x ... x P^{n_s}."""
    dims: Tuple[int, ...]

    def __post_init__(self):
        dims = tuple(self.dims)
        if len(dims) < 1:
            raise SemanticError('A space needs at least one factor.')
        for n in dims:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise SemanticError(f'Factor dimensions must be integers >= 1, got {n!r}.')
        object.__setattr__(self, 'dims', dims)

    @property
    def s(self) -> int:
        return len(self.dims)

    @property
    def d(self) -> int:
        return sum(self.dims)

    @property
    def canonical(self) -> Multidegree:
        """Multidegree of the canonical bundle, (-n_1-1, ..., -n_s-1)."""
        return tuple(-n - 1 for n in self.dims)

    def zero(self) -> Multidegree:
        return (0,) * self.s

    def balanced(self, t: int) -> Multidegree:
        return (t,) * self.s

    def unit(self, j: int) -> Multidegree:
        return tuple(1 if i == j else 0 for i in range(self.s))

    def check_multidegree(self, k: Sequence[int]) -> Multidegree:
        k = tuple(k)
        if len(k) != self.s:
            raise SemanticError(f'Multidegree {k} has {len(k)} entries, '
                                f'the space {self} has {self.s} factors.')
        return k

    def to_expr(self) -> str:
        return ','.join(str(n) for n in self.dims)

    def __str__(self):
        return ' x '.join(f'P^{n}' for n in self.dims)


@dataclass(frozen=True)
class Line(object):
    """The line bundle O(a) on a single factor."""
    a: int

    def sort_key(self):
        return 0, self.a, 0

    def to_expr(self) -> str:
        return f'O({self.a})'


@dataclass(frozen=True)
class Diff(object):
    """The twisted differential Omega^p(t) on a single factor, 1 <= p <= n-1."""
    p: int
    t: int

    def sort_key(self):
        return 1, self.p, self.t

    def to_expr(self) -> str:
        return f'Om({self.p},{self.t})'


FactorSheaf = Union[Line, Diff]


def make_factor(n: int, p: int, t: int) -> FactorSheaf:
    """Build Omega^p(t) on P^n in normal form.

    Omega^0(t) is O(t) and Omega^n(t) is O(t-n-1), so only 1 <= p <= n-1
    survives as a Diff.

    Raises
    ------
    DomainError
        If p lies outside [0, n].
    """
    if p < 0 or p > n:
        raise DomainError(f'Exterior power {p} is outside [0, {n}] on P^{n}.')
    if p == 0:
        return Line(t)
    if p == n:
        return Line(t - n - 1)
    return Diff(p, t)


def normalize_factor(n: int, f: FactorSheaf) -> FactorSheaf:
    if isinstance(f, Diff):
        return make_factor(n, f.p, f.t)
    return f


def twist_factor(f: FactorSheaf, b: int) -> FactorSheaf:
    if isinstance(f, Line):
        return Line(f.a + b)
    return Diff(f.p, f.t + b)


def dual_factor(n: int, f: FactorSheaf) -> FactorSheaf:
    # (Omega^p(t))^v = Omega^{n-p}(n+1-t)
    if isinstance(f, Line):
        return Line(-f.a)
    return make_factor(n, n - f.p, n + 1 - f.t)


def factor_rank(n: int, f: FactorSheaf) -> int:
    if isinstance(f, Line):
        return 1
    return comb(n, f.p)


@dataclass(frozen=True)
class Atom(object):
    """A box product of one factor sheaf per slot."""
    factors: Tuple[FactorSheaf, ...]

    def __post_init__(self):
        object.__setattr__(self, 'factors', tuple(self.factors))

    @classmethod
    def line(cls, a: Iterable[int]) -> 'Atom':
        return cls(tuple(Line(x) for x in a))

    @property
    def arity(self) -> int:
        return len(self.factors)

    def is_line(self) -> bool:
        return all(isinstance(f, Line) for f in self.factors)

    def line_twists(self) -> Multidegree:
        """Multidegree of a line-bundle atom."""
        if not self.is_line():
            raise SemanticError(f'{self.to_expr()} is not a line bundle.')
        return tuple(f.a for f in self.factors)

    def parameters(self) -> Tuple[int, ...]:
        out = list()
        for f in self.factors:
            out.extend((f.a,) if isinstance(f, Line) else (f.p, f.t))
        return tuple(out)

    def sort_key(self):
        return tuple(f.sort_key() for f in self.factors)

    def to_expr(self) -> str:
        if self.is_line():
            return 'O(' + ','.join(str(f.a) for f in self.factors) + ')'
        return 'box(' + ', '.join(f.to_expr() for f in self.factors) + ')'

    def __str__(self):
        return self.to_expr()


def check_atom(space: Space, atom: Atom) -> Atom:
    """Verify the arity of an atom and bring every factor to normal form."""
    if atom.arity != space.s:
        raise SemanticError(f'{atom} has {atom.arity} factors, '
                            f'the space {space} has {space.s}.')
    return Atom(tuple(normalize_factor(n, f) for n, f in zip(space.dims, atom.factors)))


@dataclass(frozen=True)
class Bundle(object):
    """A formal direct sum of atoms with multiplicities over a fixed space."""
    space: Space
    summands: Tuple[Tuple[Atom, int], ...] = ()

    def __post_init__(self):
        checked = list()
        for atom, mult in self.summands:
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise SemanticError(f'Multiplicity of {atom} must be a positive integer, got {mult!r}.')
            checked.append((check_atom(self.space, atom), mult))
        object.__setattr__(self, 'summands', tuple(checked))

    @classmethod
    def of(cls, space: Space, atoms: Iterable[Union[Atom, Tuple[Atom, int]]]) -> 'Bundle':
        summands = list()
        for item in atoms:
            summands.append(item if isinstance(item, tuple) else (item, 1))
        return cls(space, tuple(summands))

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        return tuple(atom for atom, _ in self.summands)

    def is_empty(self) -> bool:
        return len(self.summands) == 0

    def __add__(self, other: 'Bundle') -> 'Bundle':
        if self.space != other.space:
            raise SemanticError(f'Cannot add bundles on {self.space} and {other.space}.')
        return Bundle(self.space, self.summands + other.summands)

    def canonical(self) -> 'Bundle':
        """Merge equal atoms and sort summands by atom encoding."""
        merged = dict()
        for atom, mult in self.summands:
            merged[atom] = merged.get(atom, 0) + mult
        ordered = sorted(merged.items(), key=lambda kv: kv[0].sort_key())
        return Bundle(self.space, tuple(ordered))

    def max_parameter(self) -> int:
        """Largest absolute twist or exterior power occurring in the bundle."""
        return max((abs(x) for atom in self.atoms for x in atom.parameters()), default=0)

    def to_expr(self) -> str:
        if self.is_empty():
            return '0'
        parts = list()
        for atom, mult in self.summands:
            parts.append(atom.to_expr() if mult == 1 else f'{mult}*{atom.to_expr()}')
        return ' + '.join(parts)

    def __str__(self):
        return self.to_expr()


def twist_atom(space: Space, atom: Atom, k: Sequence[int]) -> Atom:
    k = space.check_multidegree(k)
    return Atom(tuple(twist_factor(f, b) for f, b in zip(atom.factors, k)))


def dual_atom(space: Space, atom: Atom) -> Atom:
    return Atom(tuple(dual_factor(n, f) for n, f in zip(space.dims, atom.factors)))


def twist_bundle(bundle: Bundle, k: Sequence[int]) -> Bundle:
    """Tensor every summand by O(k_1, ..., k_s)."""
    space = bundle.space
    k = space.check_multidegree(k)
    return Bundle(space, tuple((twist_atom(space, atom, k), mult) for atom, mult in bundle.summands))


def dual_bundle(bundle: Bundle) -> Bundle:
    space = bundle.space
    return Bundle(space, tuple((dual_atom(space, atom), mult) for atom, mult in bundle.summands))


def atom_rank(space: Space, atom: Atom) -> int:
    out = 1
    for n, f in zip(space.dims, atom.factors):
        out *= factor_rank(n, f)
    return out


def rank(bundle: Bundle) -> int:
    return sum(mult * atom_rank(bundle.space, atom) for atom, mult in bundle.summands)
