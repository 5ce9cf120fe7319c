"""
Permutations of {1..n} in one-line form.

`p[j - 1]` is the image of sheet j. Composition `compose(p, q)` applies q first.
"""

from collections.abc import Iterable, Iterator
from itertools import permutations

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_identity(p: Permutation) -> bool:
    return all(image == j for j, image in enumerate(p, start=1))


def is_permutation(p: Iterable[int], n: int) -> bool:
    values = list(p)
    return len(values) == n and sorted(values) == list(range(1, n + 1))


def inverse(p: Permutation) -> Permutation:
    result = [0] * len(p)
    for j, image in enumerate(p, start=1):
        result[image - 1] = j
    return tuple(result)


def compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[image - 1] for image in q)


def conjugate(p: Permutation, s: Permutation) -> Permutation:
    """s p s^-1: the voltage p seen after relabeling sheet j as s(j)."""
    return compose(compose(s, p), inverse(s))


def apply(p: Permutation, j: int) -> int:
    return p[j - 1]


def from_cycles(n: int, cycles: Iterable[Iterable[int]]) -> Permutation:
    """from_cycles(4, [(1, 2), (3, 4)]) == (2, 1, 4, 3)."""
    result = list(range(1, n + 1))
    for cycle in cycles:
        points = list(cycle)
        for a, b in zip(points, points[1:] + points[:1], strict=True):
            result[a - 1] = b
    return tuple(result)


def parse_one_line(text: str) -> Permutation:
    """Parse `2,3,4,1`; raises ValueError on non-integers."""
    return tuple(int(token) for token in text.split(",") if token.strip())


def format_one_line(p: Permutation) -> str:
    return ",".join(str(image) for image in p)


def all_permutations(n: int) -> Iterator[Permutation]:
    yield from permutations(range(1, n + 1))
