"""Command-line interface.

Diagrams are given as quoted cycle notation plus ``--n``. Exit codes:
0 ok, 2 parse or usage error, 3 invariant failure (e.g. not an
involution), 4 domain or bound error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .diagram import QuasiDiagram
from .draw import to_svg
from .enumeration import (
    ALIASES,
    CSV_HEADER,
    PREDICATES,
    counts_table,
    filter_diagrams,
    involutions,
)
from .exceptions import (
    DegreeMismatch,
    DomainError,
    InvariantViolation,
    NoKoszulDual,
    NotAnInvolution,
    NotRegular,
    ParseError,
)
from .gentle import dual_presentation, export_presentation, oracle_gldim, presentation_from_diagram
from .group import GROUPS, orbit_partition
from .homology import gldim, gldim_to_json, is_regular, koszul_info
from .moves import contract, expand

EXIT_OK, EXIT_PARSE, EXIT_INVARIANT, EXIT_DOMAIN = 0, 2, 3, 4
SWEEP_WARN_DEGREE = 14
FILTERS = sorted(PREDICATES) + sorted(ALIASES) + ["all"]


class UsageError(Exception):
    pass


def analysis_report(d: QuasiDiagram) -> dict:
    surface = d.surface_invariants()
    return {
        "diagram": d.to_json(),
        "chords": [list(c) for c in d.chords()],
        "isolated": d.isolated_points(),
        "faces": [list(w) for w in d.faces()],
        "regular": is_regular(d),
        "maximal": d.is_maximal(),
        "chord_diagram": d.is_chord_diagram(),
        "gldim": gldim_to_json(gldim(d)),
        "koszul": koszul_info(d).to_json(),
        "surface": {"V": surface.V, "E": surface.E, "F": surface.F, "genus": surface.genus},
    }


def _analysis_text(d: QuasiDiagram, report: dict) -> str:
    info = koszul_info(d)
    s = report["surface"]
    lines = [
        f"diagram: {d} (n={d.n})",
        f"isolated: {' '.join(map(str, report['isolated'])) or '-'}",
        "faces: " + "".join("(" + " ".join(map(str, w)) + ")" for w in report["faces"]),
        f"regular: {str(report['regular']).lower()}",
        f"maximal: {str(report['maximal']).lower()}",
        f"chord_diagram: {str(report['chord_diagram']).lower()}",
        f"gldim: {report['gldim']}",
        f"koszul: {info.type if info.exists else 'none'}",
        f"dual: {info.dual if info.exists else '-'}",
        f"surface: V={s['V']} E={s['E']} F={s['F']} genus={s['genus']}",
    ]
    return "\n".join(lines) + "\n"


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _diagram_out(d: QuasiDiagram, fmt: str) -> str:
    if fmt == "json":
        return _dumps(d.to_json())
    return f"{d}\n"


def _check_format(args, allowed):
    if args.format is None:
        return allowed[0]
    if args.format not in allowed:
        raise UsageError(f"{args.cmd} does not support --format {args.format}")
    return args.format


def _check_bound(args) -> None:
    if args.n > args.max_degree:
        raise DomainError(f"--n {args.n} exceeds --max-degree {args.max_degree}")
    if args.n > SWEEP_WARN_DEGREE:
        print(f"warning: sweeping degree {args.n} may take a long time", file=sys.stderr)


def _read_diagram(args) -> QuasiDiagram:
    return QuasiDiagram.parse(args.diagram, args.n)


def _sweep(args):
    stream = involutions(args.n)
    if args.filter != "all":
        stream = filter_diagrams(stream, args.filter)
    return list(stream)


def cmd_analyze(args) -> str:
    fmt = _check_format(args, ["json", "text"])
    d = _read_diagram(args)
    report = analysis_report(d)
    return _dumps(report) if fmt == "json" else _analysis_text(d, report)


def cmd_enumerate(args) -> str:
    fmt = _check_format(args, ["text", "json"])
    _check_bound(args)
    found = _sweep(args)
    if args.count_only:
        return _dumps(len(found)) if fmt == "json" else f"{len(found)}\n"
    if fmt == "json":
        return _dumps([d.to_json() for d in found])
    return "".join(f"{d}\n" for d in found)


def cmd_orbits(args) -> str:
    fmt = _check_format(args, ["json", "text"])
    _check_bound(args)
    report = orbit_partition(_sweep(args), args.group)
    if fmt == "json":
        return _dumps(report.to_json())
    return "".join(
        f"orbit {k} (size {len(o)}): " + " ".join(str(d) for d in o) + "\n"
        for k, o in enumerate(report.orbits, 1)
    )


def cmd_dual(args) -> str:
    fmt = _check_format(args, ["text", "json"])
    d = _read_diagram(args)
    info = koszul_info(d)
    if not info.exists:
        raise NoKoszulDual(f"{d} has no Koszul dual (gldim {gldim_to_json(gldim(d))} != {d.n - 1})")
    return _diagram_out(info.dual, fmt)


def cmd_expand(args) -> str:
    return _diagram_out(expand(_read_diagram(args), args.at), _check_format(args, ["text", "json"]))


def cmd_contract(args) -> str:
    return _diagram_out(contract(_read_diagram(args), args.at), _check_format(args, ["text", "json"]))


def cmd_quiver(args) -> str:
    fmt = _check_format(args, ["dot", "json"])
    p = presentation_from_diagram(_read_diagram(args))
    if args.dual:
        p = dual_presentation(p)
    return export_presentation(p, fmt)


def cmd_draw(args) -> str:
    _check_format(args, ["svg"])
    return to_svg(_read_diagram(args), args.size)


def cmd_oracle_check(args) -> str:
    _check_format(args, ["text"])
    _check_bound(args)
    count = 0
    for d in involutions(args.n):
        if d.n == 0:
            count += 1
            continue
        formula, oracle = gldim(d), oracle_gldim(presentation_from_diagram(d))
        if formula != oracle or is_regular(d) != (oracle != float("inf")):
            raise InvariantViolation(f"oracle mismatch on {d}: {formula} vs {oracle}")
        count += 1
    return f"{count} involutions of degree {args.n}: OK\n"


def cmd_counts(args) -> str:
    fmt = _check_format(args, ["csv", "json"])
    _check_bound(args)
    rows = [counts_table(k) for k in range(1, args.n + 1)]
    if fmt == "json":
        return _dumps([r.__dict__ for r in rows])
    return CSV_HEADER + "\n" + "".join(r.csv_row() + "\n" for r in rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="degree of the diagram(s)")
    common.add_argument("--format", choices=["json", "text", "dot", "svg", "csv"])
    common.add_argument("--max-degree", type=int, default=10, help="sweep bound (default 10)")

    parser = argparse.ArgumentParser(prog="quasidiagram", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, func, diagram=False, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        if diagram:
            sp.add_argument("diagram", help='cycle notation, e.g. "(1 3)(2 4)" or "id"')
        sp.set_defaults(func=func)
        return sp

    add("analyze", cmd_analyze, diagram=True, help="full report for one diagram")
    sp = add("enumerate", cmd_enumerate, help="list diagrams of degree n")
    sp.add_argument("--filter", choices=FILTERS, default="all")
    sp.add_argument("--count-only", action="store_true")
    sp = add("orbits", cmd_orbits, help="orbit partition of a filtered set")
    sp.add_argument("--filter", choices=FILTERS, default="maximal-chord")
    sp.add_argument("--group", choices=GROUPS, default="dihedral")
    add("dual", cmd_dual, diagram=True, help="Koszul dual diagram")
    for name, func in (("expand", cmd_expand), ("contract", cmd_contract)):
        sp = add(name, func, diagram=True, help=f"{name} at a position")
        sp.add_argument("--at", type=int, required=True)
    sp = add("quiver", cmd_quiver, diagram=True, help="export the bound quiver")
    sp.add_argument("--dual", action="store_true", help="export the Koszul dual presentation")
    sp = add("draw", cmd_draw, diagram=True, help="SVG drawing on an n-gon")
    sp.add_argument("--size", type=int, default=300)
    add("oracle-check", cmd_oracle_check, help="compare both gldim computations over degree n")
    add("counts", cmd_counts, help="CSV counts table for degrees 1..n")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotAnInvolution, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (DomainError, NoKoszulDual, NotRegular, DegreeMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
