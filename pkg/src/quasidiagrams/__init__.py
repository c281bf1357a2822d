"""Quasi-diagrams and gentle algebras with one maximal path."""

__version__ = "0.1.0"

from .diagram import QuasiDiagram, SurfaceInvariants, new_quasi_diagram
from .exceptions import (
    DegreeMismatch,
    DomainError,
    InvariantViolation,
    NoKoszulDual,
    NotAnInvolution,
    NotRegular,
    ParseError,
    QuasiDiagramError,
)
from .perm import Permutation

__all__ = [
    "DegreeMismatch",
    "DomainError",
    "InvariantViolation",
    "NoKoszulDual",
    "NotAnInvolution",
    "NotRegular",
    "ParseError",
    "Permutation",
    "QuasiDiagram",
    "QuasiDiagramError",
    "SurfaceInvariants",
    "new_quasi_diagram",
]
