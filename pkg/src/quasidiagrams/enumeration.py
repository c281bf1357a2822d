"""Generators over involutions and chord diagrams, and the counting formulas."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterable, Iterator, NamedTuple

from .diagram import QuasiDiagram
from .exceptions import DomainError
from .group import is_rotatably_regular
from .homology import is_regular, koszul_info
from .perm import Permutation


def _matchings(n: int, allow_fixed: bool) -> Iterator[tuple[int, ...]]:
    """One-line forms in lexicographic order.

    The least unassigned point is decided first, choosing a fixed point
    before any partner and partners in increasing order, which is exactly
    lexicographic order on the one-line form.
    """
    images = [0] * (n + 1)

    def rec(p: int):
        while p <= n and images[p]:
            p += 1
        if p > n:
            yield tuple(images[1:])
            return
        if allow_fixed:
            images[p] = p
            yield from rec(p + 1)
        for q in range(p + 1, n + 1):
            if not images[q]:
                images[p], images[q] = q, p
                yield from rec(p + 1)
                images[q] = 0
        images[p] = 0

    yield from rec(1)


def involutions(n: int) -> Iterator[QuasiDiagram]:
    """Every quasi-diagram of degree ``n``, once each, in lexicographic order."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    for images in _matchings(n, allow_fixed=True):
        yield QuasiDiagram(Permutation(images))


def chord_diagrams(n: int) -> Iterator[QuasiDiagram]:
    """Perfect matchings of ``{1..n}``; nothing for odd ``n``."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n % 2:
        return
    for images in _matchings(n, allow_fixed=False):
        yield QuasiDiagram(Permutation(images))


def telephone_number(n: int) -> int:
    """Number of involutions of ``n`` points: ``T(n) = T(n-1) + (n-1) T(n-2)``."""
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n >= 1 else 1


def epsilon(g: int) -> int:
    """``(4g)! / (4^g (2g+1)!)``, the number of maximal chord diagrams on ``4g`` points."""
    num, den = factorial(4 * g), 4**g * factorial(2 * g + 1)
    q, r = divmod(num, den)
    assert r == 0
    return q


class CountPair(NamedTuple):
    formula: int
    brute: int


def maximal_chord_formula(n: int) -> int:
    return epsilon(n // 4) if n % 4 == 0 and n > 0 else 0


def maximal_quasi_formula(n: int) -> int:
    t, q = divmod(n, 4)
    return sum(comb(4 * t + q, 4 * i) * epsilon(i) for i in range(t + 1))


def count_maximal_chord(n: int) -> CountPair:
    brute = sum(1 for d in chord_diagrams(n) if d.is_maximal()) if n > 0 else 0
    return CountPair(maximal_chord_formula(n), brute)


def count_maximal_quasi(n: int) -> CountPair:
    if n < 1:
        raise DomainError("n must be >= 1")
    return CountPair(maximal_quasi_formula(n), sum(1 for d in involutions(n) if d.is_maximal()))


PREDICATES: dict[str, Callable[[QuasiDiagram], bool]] = {
    "chord": QuasiDiagram.is_chord_diagram,
    "maximal": QuasiDiagram.is_maximal,
    "regular": is_regular,
    "rotatably-regular": is_rotatably_regular,
    "maximal-chord": QuasiDiagram.is_maximal_chord_diagram,
    "koszul-exists": lambda d: koszul_info(d).exists,
}
ALIASES = {"rotreg": "rotatably-regular"}


def predicate(name: str) -> Callable[[QuasiDiagram], bool]:
    name = ALIASES.get(name, name)
    try:
        return PREDICATES[name]
    except KeyError:
        raise DomainError(f"unknown predicate {name!r}") from None


def filter_diagrams(stream: Iterable[QuasiDiagram], name: str) -> Iterator[QuasiDiagram]:
    pred = predicate(name)
    return (d for d in stream if pred(d))


CSV_HEADER = "n,involutions,chord,maximal,maximal_chord,regular,rotreg"


@dataclass(frozen=True)
class CountsTable:
    n: int
    involutions: int
    chord: int
    maximal: int
    maximal_chord: int
    regular: int
    rotreg: int

    def csv_row(self) -> str:
        return ",".join(
            str(x) for x in (self.n, self.involutions, self.chord, self.maximal,
                             self.maximal_chord, self.regular, self.rotreg)
        )


def counts_table(n: int) -> CountsTable:
    if n < 1:
        raise DomainError("n must be >= 1")
    total = chord = maximal = mchord = regular = rotreg = 0
    for d in involutions(n):
        total += 1
        is_chord, is_max = d.is_chord_diagram(), d.is_maximal()
        chord += is_chord
        maximal += is_max
        mchord += is_chord and is_max
        regular += is_regular(d)
        rotreg += is_rotatably_regular(d)
    return CountsTable(n, total, chord, maximal, mchord, regular, rotreg)
