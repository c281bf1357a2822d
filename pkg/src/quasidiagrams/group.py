"""Dihedral and rotation actions on quasi-diagrams by conjugation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .diagram import QuasiDiagram
from .exceptions import DegreeMismatch, DomainError, NoKoszulDual
from .homology import is_regular, koszul_info
from .perm import Permutation, compose, conjugate, n_cycle, power, reflection_gamma

GROUPS = ("dihedral", "rotations")


@lru_cache(maxsize=None)
def rotations_group(n: int) -> tuple[Permutation, ...]:
    zeta = n_cycle(n)
    return tuple(power(zeta, l) for l in range(n))


@lru_cache(maxsize=None)
def dihedral_group(n: int) -> tuple[Permutation, ...]:
    """The elements ``zeta^l`` and ``gamma zeta^l``, duplicates removed (n <= 2)."""
    gamma = reflection_gamma(n)
    rots = rotations_group(n)
    elems = list(rots) + [compose(gamma, r) for r in rots]
    return tuple(dict.fromkeys(elems))


@lru_cache(maxsize=None)
def _dihedral_set(n: int) -> frozenset:
    return frozenset(dihedral_group(n))


def _group(name: str, n: int) -> tuple[Permutation, ...]:
    if name == "dihedral":
        return dihedral_group(n)
    if name == "rotations":
        return rotations_group(n)
    raise DomainError(f"unknown group {name!r}")


def act(g: Permutation, d: QuasiDiagram) -> QuasiDiagram:
    """``g . alpha = g alpha g^{-1}`` for ``g`` in the dihedral group."""
    if g.degree != d.n:
        raise DegreeMismatch(f"degree mismatch: {g.degree} vs {d.n}")
    if g not in _dihedral_set(d.n):
        raise DomainError(f"{g} is not in the dihedral group D_{d.n}")
    return QuasiDiagram(conjugate(g, d.alpha))


def rotation(d: QuasiDiagram, l: int) -> QuasiDiagram:
    """The ``l``-th rotation ``zeta^l alpha zeta^{-l}``."""
    if d.n == 0:
        return d
    return QuasiDiagram(conjugate(rotations_group(d.n)[l % d.n], d.alpha))


def is_rotatably_regular(d: QuasiDiagram) -> bool:
    """Maximal, or every face contains an isolated point."""
    if d.is_maximal():
        return True
    return all(any(d.is_isolated(i) for i in w) for w in d.faces())


def is_rotatably_regular_by_definition(d: QuasiDiagram) -> bool:
    return all(is_regular(rotation(d, l)) for l in range(d.n))


def orbit(d: QuasiDiagram, group: str = "dihedral") -> list[QuasiDiagram]:
    """The orbit of ``d`` as a sorted list (lexicographic one-line order)."""
    return sorted({QuasiDiagram(conjugate(g, d.alpha)) for g in _group(group, d.n)})


@dataclass(frozen=True)
class OrbitReport:
    group: str
    orbits: list[list[QuasiDiagram]]

    @property
    def representatives(self) -> list[QuasiDiagram]:
        return [o[0] for o in self.orbits]

    def sizes(self) -> list[int]:
        return [len(o) for o in self.orbits]

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "orbits": [[d.to_json() for d in o] for o in self.orbits],
        }


def orbit_partition(diagrams: Iterable[QuasiDiagram], group: str = "dihedral") -> OrbitReport:
    """Partition ``diagrams`` into orbits; each orbit is cut down to the input set."""
    items = sorted(set(diagrams))
    if len({d.n for d in items}) > 1:
        raise DegreeMismatch("diagrams of mixed degree")
    remaining = set(items)
    orbits = []
    for d in items:
        if d not in remaining:
            continue
        o = [e for e in orbit(d, group) if e in remaining]
        remaining.difference_update(o)
        orbits.append(o)
    return OrbitReport(group, orbits)


@dataclass(frozen=True)
class ClosureResult:
    """Outcome of closing a diagram under rotation and Koszul dual.

    ``closed`` is true when every dual existed; ``members`` is then the closed
    set. Otherwise ``witness`` is the first diagram without a dual.
    """

    closed: bool
    members: list[QuasiDiagram] = field(default_factory=list)
    witness: Optional[QuasiDiagram] = None


def closure_under_rot_dual(d: QuasiDiagram) -> ClosureResult:
    seen = {d}
    queue = deque([d])
    while queue:
        x = queue.popleft()
        info = koszul_info(x)
        if not info.exists:
            return ClosureResult(False, witness=x)
        for y in (info.dual, rotation(x, 1)):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return ClosureResult(True, members=sorted(seen))
