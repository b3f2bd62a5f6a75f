"""``kfano`` command-line interface.

Exit status: 0 when every check passes, 1 when a check fails, 2 on bad
input, 3 when a Gröbner computation runs out of budget (``KFANO_BUDGET``).
"""

import argparse
import json
import os
import sys

from . import datasets, pipelines
from .grobner import BudgetExceeded
from .polytope import DegeneratePolytopeError, Polytope
from .report import ReportDocument, canonical
from .toric_fano import fano_summary

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def load_polytope(src):
    """A builtin name or a path to a polytope JSON file."""
    if src in datasets.builtin_names():
        return datasets.builtin_polytope(src), {"builtin": src}
    if not os.path.isfile(src):
        raise InputError(f"{src!r} is neither a builtin ({', '.join(datasets.builtin_names())}) nor a file")
    try:
        return Polytope.from_json(src), {"file": os.path.basename(src)}
    except (json.JSONDecodeError, ValueError, TypeError, KeyError, DegeneratePolytopeError) as exc:
        raise InputError(f"{src}: {exc}") from exc


def polytope_info(src):
    P, origin = load_polytope(src)
    if not P.is_fano():
        raise InputError(f"{src}: not a Fano polytope (origin interior, primitive vertices)")
    doc = ReportDocument("polytope-info", inputs=origin)
    doc.invariants.update(fano_summary(P))
    return doc


def scan(directory):
    """One row per ``*.json`` file; malformed files give error rows."""
    if not os.path.isdir(directory):
        raise InputError(f"{directory!r} is not a directory")
    rows = []
    for name in sorted(os.listdir(directory)):
        if not name.endswith(".json"):
            continue
        path = os.path.join(directory, name)
        try:
            P, _ = load_polytope(path)
            if not P.is_fano():
                raise InputError("not a Fano polytope")
            s = fano_summary(P)
            row = {"file": name, "status": "ok", "f_vector": s["f_vector"], "degree": s["degree"],
                   "reflexive": s["reflexive"], "k_polystable": s["k_polystable"],
                   "aut_order": s["automorphisms"]["order"]}
            if "singular_locus" in s:
                row["singularities"] = len(s["singular_locus"]["components"])
        except (InputError, ValueError, ArithmeticError) as exc:
            row = {"file": name, "status": "error", "error": str(exc)}
        rows.append(row)
    return rows


def _format_rows(rows):
    if not rows:
        return "(no polytope files)\n"
    out = []
    for r in rows:
        if r["status"] == "ok":
            out.append(f"{r['file']}: degree {r['degree']}, f-vector {r['f_vector']}, "
                       f"reflexive {r['reflexive']}, K-polystable {r['k_polystable']}, "
                       f"|Aut| {r['aut_order']}")
        else:
            out.append(f"{r['file']}: ERROR {r['error']}")
    return "\n".join(out) + "\n"


def _emit(doc, fmt, out):
    out.write(doc.to_json() if fmt == "json" else doc.to_text())


def build_parser():
    p = argparse.ArgumentParser(prog="kfano", description="Exact invariants and deformations of toric Fano 3-folds.")
    sub = p.add_subparsers(dest="command", required=True)
    info = sub.add_parser("polytope-info", help="invariants of a Fano polytope")
    info.add_argument("src", help="builtin name or polytope JSON file")
    info.add_argument("--format", choices=("json", "text"), default="text")
    rep = sub.add_parser("reproduce", help="run a reproduction pipeline")
    rep.add_argument("case", choices=pipelines.CASES)
    rep.add_argument("--format", choices=("json", "text"), default="text")
    sc = sub.add_parser("scan", help="tabulate every polytope JSON in a directory")
    sc.add_argument("directory")
    sc.add_argument("--format", choices=("json", "text"), default="text")
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "polytope-info":
            _emit(polytope_info(args.src), args.format, out)
            return EXIT_OK
        if args.command == "reproduce":
            doc = pipelines.reproduce(args.case)
            _emit(doc, args.format, out)
            return EXIT_OK if doc.passed else EXIT_FAILED
        rows = scan(args.directory)
        if args.format == "json":
            out.write(json.dumps(canonical(rows), indent=2, sort_keys=True) + "\n")
        else:
            out.write(_format_rows(rows))
        bad = sum(r["status"] == "error" for r in rows)
        if bad:
            err.write(f"warning: {bad} file(s) could not be read\n")
        return EXIT_OK
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except ValueError as exc:
        if "KFANO_BUDGET" in str(exc):
            err.write(f"error: {exc}\n")
            return EXIT_INPUT
        raise


if __name__ == "__main__":
    sys.exit(main())
