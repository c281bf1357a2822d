"""Expansion and contraction of quasi-diagrams at a position.

``expand(d, i)`` conjugates ``alpha`` (viewed in degree ``n+1``) by the
cycle ``(i, i+1, ..., n+1)``, inserting a new isolated point at ``i``.
``contract(d, i)`` undoes this at an isolated point ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import QuasiDiagram
from .exceptions import DomainError, InvariantViolation
from .perm import Permutation, compose, conjugate, inverse, theta


def _extend(alpha: Permutation, m: int) -> Permutation:
    return Permutation(alpha.images + tuple(range(alpha.degree + 1, m + 1)))


def expand(d: QuasiDiagram, i: int) -> QuasiDiagram:
    n = d.n
    if not 1 <= i <= n + 1:
        raise DomainError(f"expansion position {i} outside 1..{n + 1}")
    return QuasiDiagram(conjugate(theta(i, n + 1), _extend(d.alpha, n + 1)))


def contract(d: QuasiDiagram, i: int) -> QuasiDiagram:
    n = d.n
    if n < 1:
        raise DomainError("cannot contract the empty diagram")
    if not 1 <= i <= n or not d.is_isolated(i):
        raise DomainError(f"{i} is not an isolated point of {d!r}")
    beta = conjugate(inverse(theta(i, n)), d.alpha)
    if beta(n) != n:
        raise InvariantViolation(f"contraction of {d!r} at {i} does not fix {n}")
    return QuasiDiagram(Permutation(beta.images[:-1]))


def _cycle_of(p: Permutation, start: int) -> tuple[int, ...]:
    return tuple(p.orbit(start))


def _canonical(cycles) -> list[tuple[int, ...]]:
    def rot(c):
        k = c.index(min(c))
        return c[k:] + c[:k]
    return sorted(rot(tuple(c)) for c in cycles)


def _cycle_perm(cycle, m: int) -> Permutation:
    return Permutation.from_cycles([cycle], m)


def _transported(product: Permutation, track: int) -> tuple[int, ...]:
    """The cycle of ``product`` through ``track``, checking it is the only nontrivial one."""
    cyc = _cycle_of(product, track)
    others = [c for c in product.cycles() if len(c) > 1 and track not in c]
    if others:
        raise InvariantViolation("transported face is not a single cycle")
    return cyc


def predicted_expansion_faces(d: QuasiDiagram, i: int) -> list[tuple[int, ...]]:
    """Faces of ``expand(d, i)`` computed face-by-face from the faces of ``d``."""
    n = d.n
    m = n + 1
    out = []
    if n == 0:
        return [(1,)]
    for w in d.faces():
        if i == n + 1:
            if 1 not in w:
                out.append(w)
            else:
                prod = compose(_cycle_perm((1, m), m), _cycle_perm(w, m))
                out.append(_transported(prod, 1))
        else:
            th = theta(i, m)
            if i not in w:
                out.append(tuple(th(j) for j in w))
            else:
                prod = compose(
                    compose(theta(i + 1, m), _cycle_perm(w, m)), inverse(th)
                )
                out.append(_transported(prod, i))
    return _canonical(out)


def face_transport_check(d: QuasiDiagram, i: int) -> bool:
    """Do the face-transport formulas agree with the faces of ``expand(d, i)``?"""
    return predicted_expansion_faces(d, i) == expand(d, i).faces()


def predicted_contraction_faces(d: QuasiDiagram, i: int) -> list[tuple[int, ...]]:
    """Faces of ``contract(d, i)`` computed face-by-face from the faces of ``d``."""
    n = d.n
    if n == 1:
        return []
    out = []
    for w in d.faces():
        if i == n:
            if 1 not in w:
                out.append(w)
            else:
                prod = compose(_cycle_perm((1, n), n), _cycle_perm(w, n))
                out.append(_transported(prod, 1))
        else:
            th_inv = inverse(theta(i, n))
            if i not in w:
                out.append(tuple(th_inv(j) for j in w))
            else:
                prod = compose(
                    compose(inverse(theta(i + 1, n)), _cycle_perm(w, n)), theta(i, n)
                )
                out.append(_transported(prod, i))
    if any(n in w for w in out):
        raise InvariantViolation("contracted face still contains the dropped point")
    return _canonical(out)


def contraction_face_transport_check(d: QuasiDiagram, i: int) -> bool:
    return predicted_contraction_faces(d, i) == contract(d, i).faces()


@dataclass(frozen=True)
class ExpansionTrace:
    """``base`` expanded at ``positions[0]``, then ``positions[1]``, ... gives the diagram.

    The base is a chord diagram, or the degree-0 empty diagram when the
    traced diagram is trivial.
    """

    base: QuasiDiagram
    positions: tuple[int, ...]

    @property
    def base_is_empty(self) -> bool:
        return self.base.n == 0

    def replay(self) -> QuasiDiagram:
        d = self.base
        for i in self.positions:
            d = expand(d, i)
        return d

    def to_json(self) -> dict:
        return {
            "base": "empty" if self.base_is_empty else self.base.to_json(),
            "positions": list(self.positions),
        }


def decompose(d: QuasiDiagram) -> ExpansionTrace:
    """Contract at the least isolated point until none remain."""
    contracted = []
    current = d
    while current.n > 0 and not current.is_chord_diagram():
        i = current.isolated_points()[0]
        current = contract(current, i)
        contracted.append(i)
    trace = ExpansionTrace(current, tuple(reversed(contracted)))
    if trace.replay() != d:
        raise InvariantViolation(f"trace of {d!r} does not replay")
    return trace
