"""Command-line front end: ``quiverlink <group> <action> [options]``.

Exit status is 0 on success, 1 when a computed answer contradicts an
assertion (non-isomorphic quivers, failed axioms, failed subquiver check)
and 2 for usage, lookup and parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import catalog
from . import diagram as dg
from .coloring import enumerate_colorings
from .polynomial import InDegreePolynomial
from .quandle import (
    QuandleAxiomError,
    QuandleFormatError,
    builtin,
    enumerate_endos,
    format_quandle,
    load_quandle,
    verify_axioms,
)
from .quiver import (
    QuiverTooLarge,
    are_isomorphic,
    build_quiver,
    check_remark,
    export_dot,
    export_json,
    full_quiver,
    in_degree_polynomial,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- spec resolution -----------------------------------------------------------


def resolve_quandle(spec: str):
    try:
        return load_quandle(spec)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    except (QuandleFormatError, QuandleAxiomError) as e:
        raise UsageError(f"{spec}: {e}") from None


def resolve_diagram(spec: str) -> dg.MarkedGraphDiagram:
    """A file path, or a catalog name with an optional ``@k`` alternate index."""
    path = Path(spec)
    if path.is_file():
        try:
            found = dg.parse_many(path.read_text())
        except dg.DiagramError as e:
            raise UsageError(f"{spec}: {e}") from None
        if len(found) != 1:
            raise UsageError(f"{spec}: expected one diagram, found {len(found)}")
        return found[0]
    name, _, index = spec.partition("@")
    try:
        entry = catalog.get(name)
    except catalog.UnknownEntry as e:
        raise UsageError(f"{spec!r} is neither a file nor a catalog entry; known entries: {', '.join(e.known)}") from None
    k = int(index) if index.isdigit() else 0
    if k >= len(entry.diagrams):
        raise UsageError(f"{entry.name} has {len(entry.diagrams)} diagram(s)")
    return entry.diagrams[k]


def parse_image(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").strip("[]").split(","))
    except ValueError:
        raise UsageError(f"bad image vector {text!r}; expected e.g. 1,1,2") from None


def resolve_endos(args, X):
    if args.endo:
        images = [parse_image(t) for t in args.endo]
        for img in images:
            if len(img) != X.n:
                raise UsageError(f"image vector {list(img)} has length {len(img)}, quandle has {X.n} elements")
        try:
            from .quiver import _normalise_endos

            return _normalise_endos(X, images)
        except ValueError as e:
            raise UsageError(str(e)) from None
    return enumerate_endos(X)


# -- output --------------------------------------------------------------------


def emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


# -- quandle -------------------------------------------------------------------


def cmd_quandle_verify(args) -> int:
    try:
        X = load_quandle(args.quandle)
    except QuandleAxiomError as e:
        emit(args, "invalid: " + e.report.summary())
        return EXIT_MISMATCH
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    except QuandleFormatError as e:
        raise UsageError(str(e)) from None
    report = verify_axioms(X.rows())
    emit(args, f"{X.name or args.quandle}: {report.summary()} (order {X.n})")
    return EXIT_OK if report.valid else EXIT_MISMATCH


def cmd_quandle_endos(args) -> int:
    X = resolve_quandle(args.quandle)
    maps = enumerate_endos(X)
    if args.count:
        emit(args, str(len(maps)))
    elif args.format == "json":
        emit(args, json.dumps([list(m.image) for m in maps]))
    else:
        emit(args, "\n".join(",".join(map(str, m.image)) for m in maps))
    return EXIT_OK


def cmd_quandle_show(args) -> int:
    emit(args, format_quandle(resolve_quandle(args.quandle)))
    return EXIT_OK


# -- diagram -------------------------------------------------------------------


def cmd_diagram_validate(args) -> int:
    D = resolve_diagram(args.diagram)
    report = dg.validate(D)
    if report.valid:
        emit(args, f"{D.name or args.diagram}: valid")
        return EXIT_OK
    emit(args, "\n".join(v.message for v in report.violations))
    return EXIT_MISMATCH


def cmd_diagram_resolve(args) -> int:
    D = resolve_diagram(args.diagram)
    R = dg.resolve(D, args.sign)
    emit(args, dg.to_json(R) if args.format == "json" else dg.serialize(R))
    return EXIT_OK


def diagram_info(D: dg.MarkedGraphDiagram) -> dict:
    report = dg.admissibility_report(D)
    return {
        "name": D.name,
        "ch": dg.ch_number(D),
        "crossings": len(D.crossings),
        "marked_vertices": len(D.marked_vertices),
        "planar": dg.is_planar(D),
        "components": {s: dg.component_count(dg.resolve(D, s)) for s in ("-", "+")},
        "surface_components": dg.surface_components(D),
        "euler_characteristic": dg.euler_characteristic(D),
        "admissibility": report.status,
    }


def cmd_diagram_info(args) -> int:
    info = diagram_info(resolve_diagram(args.diagram))
    if args.format == "json":
        emit(args, json.dumps(info, indent=1))
    else:
        lines = [f"{k}: {v}" for k, v in info.items() if k != "components"]
        lines.insert(4, f"resolution components: L- {info['components']['-']}, L+ {info['components']['+']}")
        emit(args, "\n".join(lines))
    return EXIT_OK


# -- color ---------------------------------------------------------------------


def cmd_color_count(args) -> int:
    D, X = resolve_diagram(args.diagram), resolve_quandle(args.quandle)
    emit(args, str(len(enumerate_colorings(D, X))))
    return EXIT_OK


def cmd_color_list(args) -> int:
    D, X = resolve_diagram(args.diagram), resolve_quandle(args.quandle)
    found = enumerate_colorings(D, X)
    if args.format == "json":
        emit(args, json.dumps([list(c.colors) for c in found]))
    else:
        emit(args, "\n".join(",".join(map(str, c.colors)) for c in found) or "(no colorings)")
    return EXIT_OK


# -- quiver --------------------------------------------------------------------


def _quiver(args):
    D, X = resolve_diagram(args.diagram), resolve_quandle(args.quandle)
    return D, X, build_quiver(D, X, resolve_endos(args, X))


def cmd_quiver_build(args) -> int:
    D, _, Q = _quiver(args)
    if args.format == "dot":
        emit(args, export_dot(Q, D.name or "quiver"))
    elif args.format == "json":
        emit(args, export_json(Q))
    else:
        lines = [f"{len(Q)} vertices, {len(Q.edges)} edges, |S| = {len(Q.endos)}"]
        for i, v in enumerate(Q.vertices):
            targets = sorted(t for s, t, _ in Q.edges if s == i)
            lines.append(f"v{i} {','.join(map(str, v))} -> {' '.join(f'v{t}' for t in targets)}")
        emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_quiver_poly(args) -> int:
    _, _, Q = _quiver(args)
    poly = in_degree_polynomial(Q)
    emit(args, json.dumps({"polynomial": str(poly), "terms": poly.to_json()}) if args.format == "json" else str(poly))
    return EXIT_OK


def cmd_quiver_iso(args) -> int:
    X = resolve_quandle(args.quandle)
    S = resolve_endos(args, X)
    Q1 = build_quiver(resolve_diagram(args.diagram), X, S)
    Q2 = build_quiver(resolve_diagram(args.other), X, S)
    try:
        iso = are_isomorphic(Q1, Q2, max_vertices=args.max_vertices)
    except QuiverTooLarge as e:
        raise UsageError(f"{e}; raise --max-vertices to try anyway") from None
    emit(args, "isomorphic" if iso else "not isomorphic")
    if args.expect is None:
        return EXIT_OK
    return EXIT_OK if iso == (args.expect == "iso") else EXIT_MISMATCH


def cmd_quiver_remark(args) -> int:
    D, X = resolve_diagram(args.diagram), resolve_quandle(args.quandle)
    report = check_remark(D, X, None if not args.endo else resolve_endos(args, X))
    sizes = ", ".join(f"{k}: {v}" for k, v in report.sizes.items())
    emit(args, ("embeds" if report.ok else "fails: " + report.counterexample) + f" (vertices {sizes})")
    return EXIT_OK if report.ok else EXIT_MISMATCH


# -- table ---------------------------------------------------------------------


def checksum_ok(poly: InDegreePolynomial, n_endos: int) -> bool:
    """Sum of in-degrees equals |S| times the number of vertices."""
    return poly.derivative_at_one() == n_endos * poly(1)


def _row(name: str) -> dict:
    try:
        entry = catalog.get(name)
    except catalog.UnknownEntry:
        return {"name": name, "diagram": None, "ch": None, "cells": None}
    D = entry.diagram
    cells = []
    for qname in catalog.TABLE_QUANDLES:
        X = builtin(qname)
        Q = full_quiver(D, X)
        cells.append((qname, str(in_degree_polynomial(Q)), len(Q.endos)))
    return {"name": entry.name, "diagram": D.name, "ch": dg.ch_number(D), "cells": cells}


def reproduce_table(threads: int = 1) -> dict:
    rows = catalog.published_table()
    names = [r.name for r in rows]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            computed = list(pool.map(_row, names))
    else:
        computed = [_row(n) for n in names]
    n_endos = {q: len(enumerate_endos(builtin(q))) for q in catalog.TABLE_QUANDLES}
    out = []
    for row, comp in zip(rows, computed):
        cells = []
        for k, qname in enumerate(catalog.TABLE_QUANDLES):
            printed = row.polys[k]
            printed_ok = checksum_ok(printed, n_endos[qname])
            cell = {
                "quandle": qname,
                "printed": str(printed),
                "printed_checksum": "ok" if printed_ok else "violated",
                "computed": None,
                "computed_checksum": None,
                "status": "no diagram" if printed_ok else "no diagram, printed row fails checksum",
            }
            if comp["cells"] is not None:
                value = InDegreePolynomial.parse(comp["cells"][k][1])
                cell["computed"] = str(value)
                cell["computed_checksum"] = "ok" if checksum_ok(value, comp["cells"][k][2]) else "violated"
                if value == printed:
                    cell["status"] = "match"
                elif not printed_ok:
                    cell["status"] = "printed row fails checksum"
                else:
                    cell["status"] = "mismatch"
            cells.append(cell)
        out.append({"name": row.name, "catalog_name": comp["name"] if comp["cells"] else None,
                    "ch": comp["ch"], "cells": cells})
    summary = {
        "match": sum(c["status"] == "match" for r in out for c in r["cells"]),
        "flagged": sum(c["printed_checksum"] == "violated" for r in out for c in r["cells"]),
        "mismatch": sum(c["status"] == "mismatch" for r in out for c in r["cells"]),
        "no_diagram": sum(c["computed"] is None for r in out for c in r["cells"]),
    }
    return {"quandles": list(catalog.TABLE_QUANDLES), "endo_counts": n_endos, "rows": out, "summary": summary}


def format_table(result: dict) -> str:
    lines = []
    head = ("link", "quandle", "computed", "printed", "status")
    body = []
    for row in result["rows"]:
        for c in row["cells"]:
            status = c["status"]
            if c["printed_checksum"] == "violated":
                status = "FLAG: " + status
            body.append((row["name"], c["quandle"], c["computed"] or "-", c["printed"], status))
    widths = [max(len(r[i]) for r in [head, *body]) for i in range(len(head))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines.append(fmt.format(*head).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    lines += [fmt.format(*r).rstrip() for r in body]
    s = result["summary"]
    lines.append("")
    lines.append(
        f"{s['match']} match, {s['flagged']} flagged (printed value fails the checksum), "
        f"{s['mismatch']} mismatch, {s['no_diagram']} without a catalog diagram"
    )
    return "\n".join(lines)


def cmd_table_reproduce(args) -> int:
    result = reproduce_table(args.threads)
    emit(args, json.dumps(result, indent=1) if args.json else format_table(result))
    return EXIT_OK


def cmd_catalog_list(args) -> int:
    lines = []
    for name in catalog.names():
        e = catalog.get(name)
        lines.append(f"{e.name:<14} {e.kind:<13} ch {dg.ch_number(e.diagram):<3} diagrams {len(e.diagrams)}")
    emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_catalog_show(args) -> int:
    try:
        e = catalog.get(args.name)
    except catalog.UnknownEntry as err:
        raise UsageError(str(err)) from None
    head = f"# {e.name} ({e.kind})" + (f": {e.note}" if e.note else "")
    if e.provenance:
        head += f"\n# {e.provenance}"
    emit(args, head + "\n" + "".join(dg.serialize(D) for D in e.diagrams))
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quiverlink", description="Quandle coloring quivers of surface-links.")
    p.add_argument("--threads", type=int, default=1, help="cap on worker processes (default 1)")
    groups = p.add_subparsers(dest="group", required=True)

    def action(group, name, func, help_text):
        sp = group.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        return sp

    def endo_opts(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--full", action="store_true", help="S = Hom(X, X) (default)")
        g.add_argument("--endo", action="append", metavar="IMAGE", help="endomorphism image vector, e.g. 1,1,2; repeatable")

    q = groups.add_parser("quandle", help="quandle tables and endomorphisms").add_subparsers(dest="action", required=True)
    sp = action(q, "verify", cmd_quandle_verify, "check the quandle axioms")
    sp.add_argument("--quandle", required=True)
    sp = action(q, "endos", cmd_quandle_endos, "list endomorphisms")
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp = action(q, "show", cmd_quandle_show, "print the operation table")
    sp.add_argument("--quandle", required=True)

    d = groups.add_parser("diagram", help="marked graph diagrams").add_subparsers(dest="action", required=True)
    for name, func, text in (
        ("validate", cmd_diagram_validate, "structural checks"),
        ("resolve", cmd_diagram_resolve, "print a resolution"),
        ("info", cmd_diagram_info, "ch number, resolutions, admissibility"),
    ):
        sp = action(d, name, func, text)
        sp.add_argument("--diagram", required=True, help="file or catalog name (name@k for alternates)")
        if name == "resolve":
            sp.add_argument("--sign", choices=("+", "-"), required=True)
        if name != "validate":
            sp.add_argument("--format", choices=("text", "json"), default="text")

    c = groups.add_parser("color", help="quandle colorings").add_subparsers(dest="action", required=True)
    for name, func in (("count", cmd_color_count), ("list", cmd_color_list)):
        sp = action(c, name, func, f"{name} colorings")
        sp.add_argument("--diagram", required=True)
        sp.add_argument("--quandle", required=True)
        if name == "list":
            sp.add_argument("--format", choices=("text", "json"), default="text")

    qv = groups.add_parser("quiver", help="coloring quivers").add_subparsers(dest="action", required=True)
    sp = action(qv, "build", cmd_quiver_build, "build the quiver")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--format", choices=("text", "json", "dot"), default="text")
    endo_opts(sp)
    sp = action(qv, "poly", cmd_quiver_poly, "in-degree polynomial")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    endo_opts(sp)
    sp = action(qv, "iso", cmd_quiver_iso, "compare the quivers of two diagrams")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--other", required=True, help="second diagram")
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--expect", choices=("iso", "non-iso"), help="exit 1 unless the answer matches")
    sp.add_argument("--max-vertices", type=int, default=64)
    endo_opts(sp)
    sp = action(qv, "remark", cmd_quiver_remark, "check the quiver embeds in both resolutions' quivers")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--quandle", required=True)
    endo_opts(sp)

    t = groups.add_parser("table", help="the published polynomial table").add_subparsers(dest="action", required=True)
    sp = action(t, "reproduce", cmd_table_reproduce, "recompute every row and compare")
    sp.add_argument("--json", action="store_true")

    cat = groups.add_parser("catalog", help="built-in diagrams").add_subparsers(dest="action", required=True)
    action(cat, "list", cmd_catalog_list, "list entries")
    sp = action(cat, "show", cmd_catalog_show, "print an entry's diagrams")
    sp.add_argument("name")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.threads < 1:
        parser.print_usage(sys.stderr)
        print("quiverlink: error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    os.environ.setdefault("OMP_NUM_THREADS", str(args.threads))
    try:
        return args.func(args)
    except UsageError as e:
        print(f"quiverlink: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except dg.DiagramError as e:
        print(f"quiverlink: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
