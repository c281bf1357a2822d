"""Quasi-diagrams: involutions of ``{1, ..., n}`` read as chords on an n-gon.

The 2-cycles of ``alpha`` are chords, fixed points are isolated points, and
the faces are the cycles of ``zeta_n alpha`` (1-cycles kept), where
``zeta_n = (1 2 ... n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .exceptions import InvariantViolation, NotAnInvolution
from .perm import Permutation, compose, cycle_decomposition, n_cycle, parse


@dataclass(frozen=True)
class SurfaceInvariants:
    V: int
    E: int
    F: int
    euler_char: int
    genus: int


@dataclass(frozen=True, order=True)
class QuasiDiagram:
    """An involution ``alpha``; degree 0 is allowed and denotes the empty diagram."""

    alpha: Permutation

    def __post_init__(self):
        a = self.alpha.images
        for i, x in enumerate(a, 1):
            if a[x - 1] != i:
                raise NotAnInvolution(i)

    @classmethod
    def parse(cls, text: str, n: int) -> "QuasiDiagram":
        return cls(parse(text, n))

    @classmethod
    def from_chords(cls, chords: Iterable[tuple[int, int]], n: int) -> "QuasiDiagram":
        return cls(Permutation.from_cycles(chords, n))

    @classmethod
    def trivial(cls, n: int) -> "QuasiDiagram":
        return cls(Permutation.identity(n))

    @property
    def n(self) -> int:
        return self.alpha.degree

    def __call__(self, i: int) -> int:
        return self.alpha(i)

    def __str__(self) -> str:
        return str(self.alpha)

    def __repr__(self) -> str:
        return f"QuasiDiagram({str(self.alpha)!r}, n={self.n})"

    @cached_property
    def zeta_alpha(self) -> Permutation:
        return compose(n_cycle(self.n), self.alpha)

    @cached_property
    def alpha_zeta(self) -> Permutation:
        return compose(self.alpha, n_cycle(self.n))

    def chords(self) -> list[tuple[int, int]]:
        return [(i, x) for i, x in enumerate(self.alpha.images, 1) if i < x]

    def isolated_points(self) -> list[int]:
        return self.alpha.fixed_points()

    def is_isolated(self, i: int) -> bool:
        return self.alpha(i) == i

    def faces(self) -> list[tuple[int, ...]]:
        """Canonical cycles of ``zeta_n alpha``, 1-cycles included."""
        if self.n == 0:
            return []
        return cycle_decomposition(self.zeta_alpha)

    def is_trivial(self) -> bool:
        return self.alpha.is_identity()

    def is_chord_diagram(self) -> bool:
        return not self.isolated_points()

    def is_maximal(self) -> bool:
        return len(self.faces()) == 1

    def is_maximal_chord_diagram(self) -> bool:
        return self.is_chord_diagram() and self.is_maximal()

    def surface_invariants(self) -> SurfaceInvariants:
        """V, E, F, Euler characteristic and genus of the closed surface.

        ``2g = #chords - #faces + 1``. Undefined for the empty diagram.
        """
        n_iso = len(self.isolated_points())
        n_chords = len(self.chords())
        n_faces = len(self.faces())
        V, E, F = n_iso + 1, n_iso + n_chords, n_faces
        chi = V - E + F
        two_g = n_chords - n_faces + 1
        if two_g % 2 or two_g < 0 or chi != 2 - two_g:
            raise InvariantViolation(
                f"inconsistent surface data for {self!r}: chi={chi}, 2g={two_g}"
            )
        return SurfaceInvariants(V=V, E=E, F=F, euler_char=chi, genus=two_g // 2)

    def genus(self) -> int:
        return self.surface_invariants().genus

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "chords": [list(c) for c in self.chords()],
            "isolated": self.isolated_points(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuasiDiagram":
        d = cls.from_chords([tuple(c) for c in data["chords"]], data["n"])
        if d.isolated_points() != sorted(data.get("isolated", d.isolated_points())):
            raise ValueError("isolated list disagrees with chords")
        return d


def new_quasi_diagram(alpha: Permutation) -> QuasiDiagram:
    """Validate ``alpha`` as an involution and wrap it."""
    return QuasiDiagram(alpha)
