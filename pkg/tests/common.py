import random
from itertools import product

from mpcoh.sheaves import Atom, Bundle, Diff, Line, Space


def are_files_equal(path_left, path_right):
    """
    Determines if two files are byte-for-byte equal.

    :param path_left: The left file to compare.
    :param path_right: The right file to compare.
    """
    with open(path_left, 'rb') as f:
        left = f.read()
    with open(path_right, 'rb') as f:
        right = f.read()
    return left == right


def random_space(rng: random.Random, max_s=3, max_n=3) -> Space:
    return Space(tuple(rng.randint(1, max_n) for _ in range(rng.randint(1, max_s))))


def random_atom(rng: random.Random, space: Space, lo=-6, hi=6) -> Atom:
    factors = list()
    for n in space.dims:
        if n > 1 and rng.random() < 0.4:
            factors.append(Diff(rng.randint(1, n - 1), rng.randint(lo, hi)))
        else:
            factors.append(Line(rng.randint(lo, hi)))
    return Atom(tuple(factors))


def random_bundle(rng: random.Random, space: Space, max_summands=3, lo=-6, hi=6) -> Bundle:
    return Bundle.of(space, [(random_atom(rng, space, lo, hi), rng.randint(1, 2))
                             for _ in range(rng.randint(1, max_summands))])


def all_spaces(max_s=3, max_n=3):
    for s in range(1, max_s + 1):
        for dims in product(range(1, max_n + 1), repeat=s):
            yield Space(dims)


def all_factors(n: int, params):
    out = [Line(a) for a in params]
    out.extend(Diff(p, t) for p in range(1, n) for t in params)
    return out


def all_atoms(space: Space, params):
    for factors in product(*[all_factors(n, params) for n in space.dims]):
        yield Atom(factors)
