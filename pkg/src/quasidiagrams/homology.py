"""Regularity, global dimension and Koszul-dual existence from orbit data.

Everything here is read off the permutations ``zeta alpha`` and
``alpha zeta``; no quiver is built except to hand the dual construction to
:func:`quasidiagrams.gentle.koszul_dual_diagram`.

Global dimension is an ``int`` or ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .diagram import QuasiDiagram
from .exceptions import DomainError, InvariantViolation, NotRegular
from .gentle import koszul_dual_diagram
from .perm import cycle_decomposition


def _require_points(d: QuasiDiagram) -> None:
    if d.n < 1:
        raise DomainError("the empty diagram has no associated algebra")


def script_A(d: QuasiDiagram) -> list[tuple[int, ...]]:
    """Faces with no isolated point that do not contain 1."""
    _require_points(d)
    return [
        w for w in d.faces()
        if 1 not in w and not any(d.is_isolated(i) for i in w)
    ]


def script_B(d: QuasiDiagram) -> list[tuple[int, ...]]:
    """Orbits of ``alpha zeta`` with no isolated point that do not contain n."""
    _require_points(d)
    return [
        w for w in cycle_decomposition(d.alpha_zeta)
        if d.n not in w and not any(d.is_isolated(i) for i in w)
    ]


def is_regular(d: QuasiDiagram) -> bool:
    """Every face contains 1 or an isolated point (equivalently, finite gldim)."""
    regular = not script_A(d)
    assert regular == (not script_B(d))
    return regular


def _steps_until(step, start: int, stop, n: int) -> int:
    x, k = start, 0
    while True:
        x, k = step(x), k + 1
        if stop(x):
            return k
        if k > n:
            raise InvariantViolation(f"orbit walk from {start} exceeded {n} steps")


def d_values(d: QuasiDiagram) -> dict[int, int]:
    """``d_i``: steps of ``zeta alpha`` from ``i`` to an isolated point or ``alpha(n)``."""
    if not is_regular(d):
        raise NotRegular(f"{d!r} is not regular")
    n, end = d.n, d(d.n)
    za = d.zeta_alpha
    stop = lambda x: d.is_isolated(x) or x == end
    return {i: 0 if i == end else _steps_until(za, i, stop, n) for i in range(1, n + 1)}


def g_values(d: QuasiDiagram) -> dict[int, int]:
    """``g_j``: steps of ``alpha zeta`` from ``j`` to ``n`` or an isolated point."""
    if not is_regular(d):
        raise NotRegular(f"{d!r} is not regular")
    n = d.n
    az = d.alpha_zeta
    stop = lambda x: x == n or d.is_isolated(x)
    return {j: 0 if j == n else _steps_until(az, j, stop, n) for j in range(1, n + 1)}


def gldim_from_g(d: QuasiDiagram) -> int:
    g = g_values(d)
    return max(g[j] for j in range(1, d.n + 1) if d.is_isolated(j) or j == d(1))


def gldim_from_d(d: QuasiDiagram) -> int:
    dv = d_values(d)
    return max(dv[i] for i in range(1, d.n + 1) if d.is_isolated(i) or i == 1)


def gldim(d: QuasiDiagram) -> float:
    """Global dimension of the associated gentle algebra (``math.inf`` if not regular)."""
    if not is_regular(d):
        return math.inf
    value = gldim_from_g(d)
    assert value == gldim_from_d(d), f"gldim formulas disagree on {d!r}"
    return value


def koszul_type(d: QuasiDiagram) -> Optional[str]:
    """Structural type A/B/C, or ``None`` when no Koszul dual exists."""
    _require_points(d)
    n = d.n
    iso = d.isolated_points()
    n_faces = len(d.faces())
    if n_faces == 1:
        if not iso:
            return "A"
        if set(iso) <= {1, n}:
            return "B"
    if n >= 2 and d(1) == n and len(iso) == 1 and n_faces == 2:
        return "C"
    return None


@dataclass(frozen=True)
class KoszulInfo:
    exists: bool
    type: Optional[str]
    dual: Optional[QuasiDiagram]

    def to_json(self) -> dict:
        return {
            "exists": self.exists,
            "type": self.type,
            "dual": self.dual.to_json() if self.dual is not None else None,
        }


def koszul_info(d: QuasiDiagram) -> KoszulInfo:
    exists = gldim(d) == d.n - 1
    kind = koszul_type(d)
    if exists != (kind is not None):
        raise InvariantViolation(f"type {kind} inconsistent with gldim for {d!r}")
    dual = koszul_dual_diagram(d) if exists else None
    return KoszulInfo(exists, kind, dual)


def gldim_to_json(value: float):
    return "inf" if value == math.inf else int(value)


@dataclass(frozen=True)
class HomologyReport:
    script_A: list
    script_B: list
    regular: bool
    d: Optional[dict]
    g: Optional[dict]
    gldim: float
    koszul: KoszulInfo

    def to_json(self) -> dict:
        return {
            "regular": self.regular,
            "gldim": gldim_to_json(self.gldim),
            "scriptA": [list(w) for w in self.script_A],
            "scriptB": [list(w) for w in self.script_B],
            "koszul": self.koszul.to_json(),
        }


def homology_report(d: QuasiDiagram) -> HomologyReport:
    regular = is_regular(d)
    return HomologyReport(
        script_A=script_A(d),
        script_B=script_B(d),
        regular=regular,
        d=d_values(d) if regular else None,
        g=g_values(d) if regular else None,
        gldim=gldim(d),
        koszul=koszul_info(d),
    )
