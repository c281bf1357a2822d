"""Bound quivers of gentle algebras with one maximal path.

Gluing the vertices of the linear quiver ``1 -> 2 -> ... -> n`` along the
classes of an involution gives a quiver with arrows ``a_1 .. a_{n-1}``
(``a_i`` runs from the class of ``i`` to the class of ``i+1``) and
quadratic monomial relations. Global dimension is computed here from paths
with full relations, which is deliberately independent of the orbit-based
formulas in :mod:`quasidiagrams.homology`.

Relations and length-two paths are ordered pairs ``(x, y)`` of arrow labels
meaning "first ``x``, then ``y``".
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import NamedTuple

from .diagram import QuasiDiagram
from .exceptions import DomainError, InvariantViolation, NoKoszulDual
from .perm import Permutation


class Arrow(NamedTuple):
    i: int
    src: int
    tgt: int


@dataclass(frozen=True)
class GentlePresentation:
    """A bound quiver on the vertex classes of an involution.

    ``classes`` are sorted by their least point and vertices are referred to
    by their 0-based index in that tuple. ``opposite`` is set on Koszul
    duals, whose arrows run backwards.
    """

    n: int
    classes: tuple[tuple[int, ...], ...]
    arrows: tuple[Arrow, ...]
    relations: frozenset[tuple[int, int]]
    opposite: bool = False

    def arrow(self, i: int) -> Arrow:
        return self.arrows[i - 1]

    def class_index(self, point: int) -> int:
        for k, cls in enumerate(self.classes):
            if point in cls:
                return k
        raise DomainError(f"point {point} not in any class")

    def length_two_paths(self) -> set[tuple[int, int]]:
        return {
            (a.i, b.i) for a in self.arrows for b in self.arrows if a.tgt == b.src
        }

    def nonzero_compositions(self) -> set[tuple[int, int]]:
        return self.length_two_paths() - self.relations

    def relation_successor(self) -> dict[int, int]:
        """``x -> y`` whenever ``(x, y)`` is a relation."""
        succ: dict[int, int] = {}
        for x, y in self.relations:
            if x in succ:
                raise InvariantViolation(f"arrow a_{x} has two relation partners")
            succ[x] = y
        return succ

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": [list(c) for c in self.classes],
            "arrows": [{"i": a.i, "src": a.src, "tgt": a.tgt} for a in self.arrows],
            "relations": [list(r) for r in sorted(self.relations)],
            "opposite": self.opposite,
        }

    @classmethod
    def from_json(cls, data: dict) -> "GentlePresentation":
        return cls(
            n=data["n"],
            classes=tuple(tuple(c) for c in data["classes"]),
            arrows=tuple(Arrow(a["i"], a["src"], a["tgt"]) for a in data["arrows"]),
            relations=frozenset(tuple(r) for r in data["relations"]),
            opposite=data.get("opposite", False),
        )


def check_gentle(p: GentlePresentation) -> None:
    """Raise :class:`InvariantViolation` unless ``p`` satisfies the gentle axioms."""
    for k in range(len(p.classes)):
        n_in = sum(a.tgt == k for a in p.arrows)
        n_out = sum(a.src == k for a in p.arrows)
        if n_in > 2 or n_out > 2:
            raise InvariantViolation(f"vertex {k} has {n_in} in / {n_out} out arrows")
    paths = p.length_two_paths()
    if not p.relations <= paths:
        raise InvariantViolation("a relation is not a path of length two")
    for a in p.arrows:
        right = [(a.i, y) for x, y in paths if x == a.i]
        left = [(x, a.i) for x, y in paths if y == a.i]
        for side, tag in ((right, "right"), (left, "left")):
            n_rel = sum(path in p.relations for path in side)
            if n_rel > 1 or len(side) - n_rel > 1:
                raise InvariantViolation(f"arrow a_{a.i} violates gentleness on the {tag}")


def presentation_from_diagram(d: QuasiDiagram) -> GentlePresentation:
    """Glue the linear quiver on ``1..n`` along the classes of ``d``."""
    n = d.n
    if n < 1:
        raise DomainError("presentation needs n >= 1")
    classes = tuple(sorted({tuple(sorted({i, d(i)})) for i in range(1, n + 1)}))
    index = {pt: k for k, cls in enumerate(classes) for pt in cls}
    arrows = tuple(Arrow(i, index[i], index[i + 1]) for i in range(1, n))
    relations = set()
    for i in range(1, n):
        j = d(i + 1)
        if j != i + 1 and j <= n - 1:
            relations.add((i, j))
    p = GentlePresentation(n, classes, arrows, frozenset(relations))
    check_gentle(p)
    return p


def _chains(succ: dict[int, int], labels) -> tuple[list[list[int]], bool]:
    """Maximal chains of a partial injective successor map, and whether it has a cycle."""
    has_pred = set(succ.values())
    chains = []
    covered = 0
    for start in sorted(labels):
        if start in has_pred:
            continue
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        covered += len(chain)
        chains.append(chain)
    return chains, covered < len(labels)


def full_relation_paths(p: GentlePresentation) -> list[list[int]]:
    """Maximal paths with full relations (as arrow labels), when there is no cycle."""
    chains, cyclic = _chains(p.relation_successor(), [a.i for a in p.arrows])
    if cyclic:
        raise DomainError("an oriented cycle with full relations exists")
    return chains


def oracle_gldim(p: GentlePresentation) -> float:
    """Global dimension as the longest path with full relations.

    Returns ``math.inf`` when some oriented cycle has full relations.
    """
    labels = [a.i for a in p.arrows]
    if not labels:
        return 0
    chains, cyclic = _chains(p.relation_successor(), labels)
    if cyclic:
        return math.inf
    return max(len(c) for c in chains)


def dual_presentation(p: GentlePresentation) -> GentlePresentation:
    """Opposite quiver, with relations the opposites of the nonzero length-two paths."""
    arrows = tuple(Arrow(a.i, a.tgt, a.src) for a in p.arrows)
    relations = frozenset((y, x) for x, y in p.nonzero_compositions())
    return replace(p, arrows=arrows, relations=relations, opposite=not p.opposite)


def koszul_dual_diagram(d: QuasiDiagram) -> QuasiDiagram:
    """The quasi-diagram read off the unique maximal path of the Koszul dual.

    Defined exactly when the global dimension is ``n - 1``.
    """
    p = presentation_from_diagram(d)
    n = d.n
    if oracle_gldim(p) != n - 1:
        raise NoKoszulDual(f"{d!r} has global dimension {oracle_gldim(p)} != {n - 1}")
    dual = dual_presentation(p)
    if n == 1:
        visits = [0]
    else:
        succ = dict(dual.nonzero_compositions())
        chains, cyclic = _chains(succ, [a.i for a in dual.arrows])
        if cyclic or len(chains) != 1:
            raise InvariantViolation(f"dual of {d!r} does not have one maximal path")
        path = [dual.arrow(i) for i in chains[0]]
        visits = [path[0].src] + [a.tgt for a in path]
    by_vertex: dict[int, list[int]] = {}
    for position, v in enumerate(visits, 1):
        by_vertex.setdefault(v, []).append(position)
    images = list(range(1, n + 1))
    for positions in by_vertex.values():
        if len(positions) > 2:
            raise InvariantViolation(f"vertex visited {len(positions)} times")
        if len(positions) == 2:
            u, v = positions
            images[u - 1], images[v - 1] = v, u
    return QuasiDiagram(Permutation(tuple(images)))


def _dot_label(cls) -> str:
    return "{" + ",".join(map(str, cls)) + "}"


def export_presentation(p: GentlePresentation, fmt: str = "dot") -> str:
    """Render ``p`` as Graphviz DOT or JSON. Output is byte-for-byte deterministic."""
    if fmt == "json":
        return json.dumps(p.to_json(), indent=2, sort_keys=True) + "\n"
    if fmt != "dot":
        raise DomainError(f"unknown presentation format {fmt!r}")
    name = "koszul_dual" if p.opposite else "gentle"
    suffix = "^op" if p.opposite else ""
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for k, cls in enumerate(p.classes):
        lines.append(f'  v{k} [label="{_dot_label(cls)}"];')
    for a in p.arrows:
        lines.append(f'  v{a.src} -> v{a.tgt} [label="a{a.i}{suffix}"];')
    for x, y in sorted(p.relations):
        # dotted arc from the start of the first arrow to the end of the second
        a, b = p.arrow(x), p.arrow(y)
        lines.append(
            f'  v{a.src} -> v{b.tgt} [style=dotted, arrowhead=none, constraint=false, '
            f'label="a{x}{suffix}a{y}{suffix}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
