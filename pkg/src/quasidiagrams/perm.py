"""Permutations of ``{1, ..., n}`` with cycle-notation parsing and printing.

Composition convention: ``compose(p, q)`` applies ``q`` first, then ``p``,
so ``compose(p, q)(i) == p(q(i))``. Written products such as ``zeta alpha``
therefore transcribe literally as ``compose(zeta, alpha)``. Every other
module relies on this convention.

Points are 1-based in every public function. The degree is always explicit
and never inferred from the largest point that appears in a cycle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import DegreeMismatch, DomainError, ParseError


@dataclass(frozen=True, order=True)
class Permutation:
    """An immutable bijection of ``{1, ..., n}``.

    ``images[i - 1]`` is the image of point ``i``. Ordering compares the
    one-line forms lexicographically (degree first is irrelevant since
    comparisons only happen between equal degrees in practice).
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"images {images!r} do not form a bijection of 1..{n}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 0:
            raise DomainError(f"degree must be nonnegative, got {n}")
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Build a permutation from disjoint cycles; points not mentioned are fixed."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for k, point in enumerate(cycle):
                if not 1 <= point <= n:
                    raise DomainError(f"point {point} out of range 1..{n}")
                if point in seen:
                    raise DomainError(f"point {point} repeated")
                seen.add(point)
                images[point - 1] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.degree:
            raise DomainError(f"point {i} out of range 1..{self.degree}")
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images, 1) if x == i]

    def orbit(self, i: int) -> list[int]:
        """The cycle through ``i``, starting at ``i``."""
        out = [i]
        j = self(i)
        while j != i:
            out.append(j)
            j = self(j)
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        return cycle_decomposition(self)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r}, n={self.degree})"


def _check_degrees(*perms: Permutation) -> int:
    n = perms[0].degree
    for p in perms[1:]:
        if p.degree != n:
            raise DegreeMismatch(f"degree mismatch: {n} vs {p.degree}")
    return n


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``: apply ``q`` first, then ``p``."""
    _check_degrees(p, q)
    pi = p.images
    return Permutation(tuple(pi[x - 1] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, x in enumerate(p.images, 1):
        out[x - 1] = i
    return Permutation(tuple(out))


def apply(p: Permutation, i: int) -> int:
    return p(i)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        p, k = inverse(p), -k
    result = Permutation.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(g: Permutation, p: Permutation) -> Permutation:
    """Return ``g p g^{-1}``, i.e. the map ``g(i) -> g(p(i))``."""
    _check_degrees(g, p)
    out = [0] * p.degree
    for i, x in enumerate(p.images, 1):
        out[g.images[i - 1] - 1] = g.images[x - 1]
    return Permutation(tuple(out))


def n_cycle(n: int) -> Permutation:
    """The rotation ``(1 2 ... n)``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return Permutation(tuple(range(2, n + 1)) + (1,))


def reflection_gamma(n: int) -> Permutation:
    """The reflection ``i -> n + 1 - i`` that swaps sides 1 and n."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def theta(i: int, m: int) -> Permutation:
    """The cycle ``(i, i+1, ..., m)`` as a permutation of degree ``m``."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if not 1 <= i <= m:
        raise DomainError(f"need 1 <= i <= m, got i={i}, m={m}")
    return Permutation.from_cycles([range(i, m + 1)], m)


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """Complete canonical cycle decomposition, 1-cycles included.

    Each cycle starts at its minimum; cycles are sorted by that minimum.
    """
    seen = [False] * (p.degree + 1)
    cycles = []
    for i in range(1, p.degree + 1):
        if not seen[i]:
            cyc = p.orbit(i)
            for j in cyc:
                seen[j] = True
            cycles.append(tuple(cyc))
    return cycles


def format_cycles(cycles: Iterable[Sequence[int]]) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def format_perm(p: Permutation) -> str:
    """Canonical cycle notation with 1-cycles omitted; ``"id"`` for the identity."""
    cycles = [c for c in cycle_decomposition(p) if len(c) > 1]
    return format_cycles(cycles) if cycles else "id"


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(,)|(\d+)|(\S))")


def parse(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1 3)(2,4)"`` or ``"id"`` into degree ``n``."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    if text.strip() == "id":
        return Permutation.identity(n)

    cycles: list[list[int]] = []
    current: list[int] | None = None
    expect_sep = False
    seen: set[int] = set()
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        opening, closing, comma, number, other = m.groups()
        if opening:
            if current is not None:
                raise ParseError("nested '('", start)
            current, expect_sep = [], False
        elif closing:
            if current is None:
                raise ParseError("unmatched ')'", start)
            if not current:
                raise ParseError("empty cycle", start)
            if not expect_sep:
                raise ParseError("dangling ','", start)
            cycles.append(current)
            current = None
        elif comma:
            if current is None or not current or not expect_sep:
                raise ParseError("unexpected ','", start)
            expect_sep = False
        elif number:
            if current is None:
                raise ParseError("point outside a cycle", start)
            point = int(number)
            if not 1 <= point <= n:
                raise ParseError(f"point {point} out of range 1..{n}", start)
            if point in seen:
                raise ParseError(f"point {point} repeated", start)
            seen.add(point)
            current.append(point)
            expect_sep = True
        else:
            raise ParseError(f"unexpected character {other!r}", start)
        pos = m.end()
    if current is not None:
        raise ParseError("unterminated cycle", len(text))
    if not cycles:
        raise ParseError("empty permutation text (use 'id')", 0)
    return Permutation.from_cycles(cycles, n)
