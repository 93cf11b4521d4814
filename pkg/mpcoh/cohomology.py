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
Exact cohomology dimensions of decomposable bundles.

Single-factor dimensions come from the line bundle formula and the Bott
formula; products are combined with the Künneth formula. All arithmetic is
on Python integers (numpy arrays are created with dtype=object), so nothing
overflows however large the binomials grow.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

import numpy as np
import sympy

from mpcoh.exceptions import DomainError
from mpcoh.sheaves import (Atom, Bundle, FactorSheaf, Line, Space,
                           check_atom, dual_bundle, twist_bundle)

T = sympy.Symbol('t', integer=True)


def binomial(x: int, k: int) -> int:
    """Binomial coefficient with dimension semantics: 0 if k < 0 or x < k."""
    if k < 0 or x < k:
        return 0
    return comb(x, k)


def binomial_poly(x, k: int):
    """Binomial coefficient as the integer-valued polynomial x(x-1)...(x-k+1)/k!.

    Unlike `binomial`, this is signed: binomial_poly(-1, 2) == 1. `x` may be
    an integer or a sympy expression.
    """
    return sympy.Mul(*[x - i for i in range(k)]) / sympy.factorial(k)


@lru_cache(maxsize=None)
def h_line(n: int, a: int, q: int) -> int:
    """Dimension of H^q(P^n, O(a)).

    Raises
    ------
    DomainError
        If q lies outside [0, n].
    """
    if n < 1:
        raise DomainError(f'Factor dimension must be >= 1, got {n}.')
    if q < 0 or q > n:
        raise DomainError(f'Cohomology degree {q} is outside [0, {n}] on P^{n}.')
    if q == 0 and a >= 0:
        return comb(n + a, n)
    if q == n and a <= -n - 1:
        return comb(-a - 1, n)
    return 0


@lru_cache(maxsize=None)
def h_bott(n: int, p: int, t: int, q: int) -> int:
    """Dimension of H^q(P^n, Omega^p(t)) by the Bott formula.

    Raises
    ------
    DomainError
        If p or q lies outside [0, n].
    """
    if n < 1:
        raise DomainError(f'Factor dimension must be >= 1, got {n}.')
    if p < 0 or p > n:
        raise DomainError(f'Exterior power {p} is outside [0, {n}] on P^{n}.')
    if q < 0 or q > n:
        raise DomainError(f'Cohomology degree {q} is outside [0, {n}] on P^{n}.')
    if q == 0 and t > p:
        return binomial(t + n - p, t) * binomial(t - 1, p)
    if q == p and t == 0:
        return 1
    if q == n and t < p - n:
        return binomial(-t + p, -t) * binomial(-t - 1, n - p)
    return 0


def factor_degrees(n: int, f: FactorSheaf) -> Tuple[int, ...]:
    """Degrees where a normalized factor sheaf can have cohomology."""
    if isinstance(f, Line):
        return 0, n
    return 0, f.p, n


def factor_h(n: int, f: FactorSheaf, q: int) -> int:
    if isinstance(f, Line):
        return h_line(n, f.a, q)
    return h_bott(n, f.p, f.t, q)


def factor_table(n: int, f: FactorSheaf) -> Dict[int, int]:
    """Sparse cohomology of one factor, {q: h^q} with zero entries dropped."""
    out = dict()
    for q in factor_degrees(n, f):
        h = factor_h(n, f, q)
        if h:
            out[q] = h
    return out


@dataclass(frozen=True)
class CohTable(object):
    """Dimensions h^0, ..., h^d of a sheaf on a space of dimension d."""
    h: Tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.h)
        if any(x < 0 for x in h):
            raise DomainError(f'Cohomology dimensions must be non-negative: {h}')
        object.__setattr__(self, 'h', h)

    @classmethod
    def zero(cls, d: int) -> 'CohTable':
        return cls((0,) * (d + 1))

    @property
    def d(self) -> int:
        return len(self.h) - 1

    def __getitem__(self, q: int) -> int:
        if q < 0 or q > self.d:
            raise DomainError(f'Cohomology degree {q} is outside [0, {self.d}].')
        return self.h[q]

    def __iter__(self):
        return iter(self.h)

    def __add__(self, other: 'CohTable') -> 'CohTable':
        return CohTable(tuple(x + y for x, y in zip(self.h, other.h)))

    def scaled(self, m: int) -> 'CohTable':
        return CohTable(tuple(m * x for x in self.h))

    @property
    def chi(self) -> int:
        return sum((-1) ** q * x for q, x in enumerate(self.h))

    def is_zero(self) -> bool:
        return not any(self.h)


def kunneth(space: Space, tables: Sequence[Dict[int, int]]) -> CohTable:
    """Convolve single-factor tables over total degree."""
    out = np.zeros(1, dtype=object)
    out[0] = 1
    for n, table in zip(space.dims, tables):
        factor = np.zeros(n + 1, dtype=object)
        for q, h in table.items():
            factor[q] = h
        conv = np.zeros(len(out) + n, dtype=object)
        for q, h in enumerate(factor):
            if h:
                conv[q:q + len(out)] += h * out
        out = conv
    return CohTable(tuple(int(x) for x in out))


def atom_cohomology(space: Space, atom: Atom) -> CohTable:
    atom = check_atom(space, atom)
    return kunneth(space, [factor_table(n, f) for n, f in zip(space.dims, atom.factors)])


def kunneth_term(space: Space, atom: Atom, q: Sequence[int]) -> int:
    """Single Künneth term, the product of h^{q_j} over the slots."""
    out = 1
    for n, f, qj in zip(space.dims, atom.factors, q):
        out *= factor_h(n, f, qj)
        if out == 0:
            break
    return out


def bundle_cohomology(bundle: Bundle) -> CohTable:
    out = CohTable.zero(bundle.space.d)
    for atom, mult in bundle.summands:
        out = out + atom_cohomology(bundle.space, atom).scaled(mult)
    return out


def euler_char(bundle: Bundle) -> int:
    return bundle_cohomology(bundle).chi


def _factor_chi_poly(n: int, f: FactorSheaf, t):
    if isinstance(f, Line):
        return binomial_poly(n + f.a + t, n)
    # 0 -> Omega^p(c) -> O(c-p)^C(n+1,p) -> ... -> O(c) -> 0
    return sympy.Add(*[(-1) ** i * comb(n + 1, f.p - i) * binomial_poly(n + f.t - f.p + i + t, n)
                       for i in range(f.p + 1)])


def hilbert_polynomial(bundle: Bundle, t=T):
    """Polynomial P with P(t) = chi(E(t, ..., t)), expanded in `t`."""
    space = bundle.space
    terms = list()
    for atom, mult in bundle.summands:
        factors = [_factor_chi_poly(n, f, t) for n, f in zip(space.dims, atom.factors)]
        terms.append(mult * sympy.Mul(*factors))
    return sympy.expand(sympy.Add(*terms))


def chi_from_polynomial(bundle: Bundle, t: int = 0) -> int:
    """Evaluate the Hilbert polynomial at an integer, an independent route to chi."""
    value = hilbert_polynomial(bundle).subs(T, t)
    return int(value)


def serre_dual(bundle: Bundle) -> Bundle:
    """E^v (x) omega_X."""
    return twist_bundle(dual_bundle(bundle), bundle.space.canonical)


def serre_check(bundle: Bundle) -> List[Tuple[int, int, int]]:
    """Pairs (q, h^q(E), h^{d-q}(E^v (x) omega)) for q = 0..d."""
    d = bundle.space.d
    table = bundle_cohomology(bundle)
    dual_table = bundle_cohomology(serre_dual(bundle))
    return [(q, table[q], dual_table[d - q]) for q in range(d + 1)]


