"""Command line front end.

Presentations are JSON documents::

    {"name": "optional", "genus": 1, "handles": 1, "monodromy": [[...], ...]}

with the monodromy given row-major as the pullback action on H^1 in the
split basis (c_0..c_{N-1}, d_0..d_{N-1}, x_0..x_{2g-1}).  Tables print as
TSV with a header row by default; ``--format json`` mirrors the same fields.
Exit codes: 0 success or verification pass, 1 verification mismatch,
2 malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .intersection import intersection_number
from .surface import SurfaceModel, random_symplectic
from .torsion import torsion_representative
from .tqft import (Presentation, compute_b1, sw_table, trace_kappa_coefficient,
                   validate_presentation, verify_main_identity, zeta_series)


class InputError(Exception):
    """Bad presentation file or arguments; maps to exit code 2."""


def load_presentation(path: str) -> Presentation:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror or e}")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}")
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    for key in ("genus", "handles", "monodromy"):
        if key not in doc:
            raise InputError(f"{path}: missing field '{key}'")
    problems = validate_presentation(doc["genus"], doc["handles"], doc["monodromy"])
    if problems:
        raise InputError(f"{path}: " + "; ".join(problems))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError(f"{path}: field 'name' must be a string")
    return Presentation.from_matrix(doc["genus"], doc["handles"],
                                    doc["monodromy"], name)


def presentation_document(P: Presentation) -> dict:
    doc = {}
    if P.name is not None:
        doc["name"] = P.name
    doc["genus"] = P.genus
    doc["handles"] = P.handles
    doc["monodromy"] = [list(row) for row in P.monodromy.mat]
    return doc


def write_presentation(P: Presentation, path: str) -> None:
    text = json.dumps(presentation_document(P), indent=2) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def generate_fixture(g: int, handles: int, words: int, seed: int,
                     name: Optional[str] = None) -> Presentation:
    """Deterministic presentation from a transvection word."""
    surface = SurfaceModel(g + handles, (handles, g))
    A = random_symplectic(surface, words, seed)
    return Presentation(g, handles, A, name)


def _emit(rows: List[dict], header: List[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        out.write("\t".join(header) + "\n")
        for row in rows:
            out.write("\t".join(str(row[h]) for h in header) + "\n")


def _series_rows(series) -> List[dict]:
    return [{"k": k, "coefficient": str(series[k]) if series[k].denominator != 1
             else str(series[k].numerator)}
            for k in range(series.order + 1)]


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="swtorsion",
        description="Torsion, zeta, and averaged Seiberg-Witten trace "
                    "invariants of compression-body presentations M(g, N, h).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fmt(p):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("validate", help="check a presentation file")
    p.add_argument("file")

    p = sub.add_parser("sw", help="averaged Seiberg-Witten table")
    p.add_argument("file")
    p.add_argument("--nmax", type=int, required=True)
    add_fmt(p)

    p = sub.add_parser("zeta", help="zeta function of the monodromy")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, required=True)
    add_fmt(p)

    p = sub.add_parser("torsion", help="Morse-complex torsion representative")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, required=True)
    add_fmt(p)

    p = sub.add_parser("verify", help="check the trace identity")
    p.add_argument("file")
    p.add_argument("--nmax", type=int, required=True)
    add_fmt(p)

    p = sub.add_parser("intersect", help="graph-diagonal intersection number")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    add_fmt(p)

    p = sub.add_parser("b1", help="first Betti number of the presentation")
    p.add_argument("file")

    p = sub.add_parser("gen", help="write a deterministic fixture file")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--handles", type=int, required=True)
    p.add_argument("--words", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--name")

    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        return _dispatch(args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args, out) -> int:
    if args.command == "gen":
        for field in ("g", "handles", "words"):
            if getattr(args, field) < 0:
                raise InputError(f"--{field} must be nonnegative")
        P = generate_fixture(args.g, args.handles, args.words, args.seed,
                             args.name)
        write_presentation(P, args.out)
        out.write(f"wrote {args.out}\n")
        return 0

    if args.command == "validate":
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as e:
            raise InputError(f"{args.file}: {e.strerror or e}")
        except json.JSONDecodeError as e:
            raise InputError(
                f"{args.file}: line {e.lineno}, column {e.colno}: {e.msg}")
        if not isinstance(doc, dict):
            raise InputError(f"{args.file}: top level must be a JSON object")
        missing = [k for k in ("genus", "handles", "monodromy") if k not in doc]
        if missing:
            raise InputError(f"{args.file}: missing field '{missing[0]}'")
        problems = validate_presentation(doc["genus"], doc["handles"],
                                         doc["monodromy"])
        if problems:
            raise InputError(f"{args.file}: " + "; ".join(problems))
        out.write("valid\n")
        return 0

    P = load_presentation(args.file)

    if args.command == "b1":
        out.write(f"{compute_b1(P)}\n")
        return 0

    if args.command == "zeta":
        if args.kmax < 0:
            raise InputError("--kmax must be nonnegative")
        rows = _series_rows(zeta_series(P, args.kmax))
        _emit(rows, ["k", "coefficient"], args.format, out)
        return 0

    if args.command == "torsion":
        if args.kmax < P.handles:
            raise InputError("--kmax must be at least the handle count")
        rows = _series_rows(torsion_representative(P, args.kmax))
        _emit(rows, ["k", "coefficient"], args.format, out)
        return 0

    if args.command == "sw":
        if args.nmax < 0:
            raise InputError("--nmax must be nonnegative")
        table = sw_table(P, args.nmax)
        rows = [{"n": r.n, "m": r.m, "value": r.value} for r in table.rows]
        if args.format == "json":
            doc = {"b1": table.b1, "mode": table.mode, "rows": rows,
                   "note": table.note}
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write(f"# b1={table.b1}\tmode={table.mode}\n")
            _emit(rows, ["n", "m", "value"], "tsv", out)
        return 0

    if args.command == "verify":
        if args.nmax < 0:
            raise InputError("--nmax must be nonnegative")
        report = verify_main_identity(P, args.nmax)
        rows = [{"n": r.n, "lhs": r.lhs, "rhs": r.rhs,
                 "match": "match" if r.match else "MISMATCH"}
                for r in report.rows]
        _emit(rows, ["n", "lhs", "rhs", "match"], args.format, out)
        return 0 if report.passed else 1

    if args.command == "intersect":
        if args.n < 0:
            raise InputError("--n must be nonnegative")
        value = intersection_number(P, args.n)
        check = trace_kappa_coefficient(P, args.n)
        rows = [{"n": args.n, "intersection": value, "trace": check,
                 "match": "match" if value == check else "MISMATCH"}]
        _emit(rows, ["n", "intersection", "trace", "match"], args.format, out)
        return 0 if value == check else 1

    raise InputError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
