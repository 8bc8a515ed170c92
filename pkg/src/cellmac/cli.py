"""Command line interface.

Six subcommands over a shared input convention (--builtin or --file),
with deterministic output in json, tsv or text form.  Exit codes:
0 ok, 2 invalid complex or malformed input, 3 I/O error, 4 failed
precondition (non-simplicial input, non-prime characteristic, and the
like).
"""

import argparse
import json
import sys

from .builtins import builtin_names, get_builtin
from .cm import CMReport
from .complexes import from_json_dict
from .errors import InvalidComplexError, MalformedInputError, PreconditionError
from .fields import Field
from .hexagon import build_hexagon, homology_table, is_linear, verify_hexagon_identity
from .homology import enriched_cohomology_table, enriched_homology_table
from .tables import cross_check_tables, entries_to_table

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_PRECONDITION = 4

COMMANDS = ("validate", "cm", "homology", "hexagon", "resolve", "table")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cellmac",
        description="Exact-arithmetic analysis of regular cell complexes.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub = subs.add_parser(name)
        grp = sub.add_mutually_exclusive_group(required=True)
        grp.add_argument("--builtin", metavar="NAME", help="built-in complex name")
        grp.add_argument("--file", metavar="PATH", help="JSON complex description")
        sub.add_argument("--char", type=int, default=0, metavar="P",
                         help="field characteristic, 0 for the rationals")
        sub.add_argument("--format", dest="fmt", choices=("json", "tsv", "text"),
                         default="text")
        sub.add_argument("--jobs", type=int, default=1)
    return parser


def _load_complex(args):
    if args.builtin is not None:
        try:
            return get_builtin(args.builtin)
        except KeyError:
            names = ", ".join(builtin_names())
            raise MalformedInputError(
                f"unknown builtin {args.builtin!r}; available: {names}"
            ) from None
    with open(args.file, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except ValueError as exc:
            raise MalformedInputError(f"not valid JSON: {exc}") from None
    return from_json_dict(data)


def _table_json(gamma, entries):
    return entries_to_table(gamma, entries).to_json_dict()


def cmd_validate(gamma, field, args):
    return {
        "field": repr(field),
        "ok": True,
        "cells": gamma.n_cells,
        "dim": gamma.dim,
        "vertices": list(gamma.vertices),
    }


def cmd_cm(gamma, field, args):
    return CMReport(gamma, field).to_json_dict()


def cmd_homology(gamma, field, args):
    return {
        "field": repr(field),
        "dim": gamma.dim,
        "vertices": list(gamma.vertices),
        "homology": enriched_homology_table(gamma, field, args.jobs).to_json_dict(),
        "cohomology": enriched_cohomology_table(gamma, field, args.jobs).to_json_dict(),
    }


def cmd_hexagon(gamma, field, args):
    bundle = build_hexagon(gamma, field)
    corners = {}
    htables = {}
    for key, p in bundle.corners.items():
        htables[key] = homology_table(p, args.jobs)
        corners[key] = {
            "betti": p.betti_table().to_json_dict(),
            "homology": htables[key].to_json_dict(),
        }
    k_indices = sorted({-lev for lev, _ in htables["res2"].entries})
    return {
        "field": repr(field),
        "vertices": list(gamma.vertices),
        "corners": corners,
        "verdicts": {
            "identity": verify_hexagon_identity(gamma, field, args.jobs, bundle),
            "linear": {key: is_linear(bundle.corner(key))
                       for key in ("cells", "res1_dual", "res2_dual")},
            "kIndices": k_indices,
        },
    }


def cmd_resolve(gamma, field, args):
    bundle = build_hexagon(gamma, field)
    res2 = bundle.corner("res2")
    return {
        "field": repr(field),
        "vertices": list(gamma.vertices),
        "betti": res2.betti_table().to_json_dict(),
        "homology": homology_table(res2, args.jobs).to_json_dict(),
    }


def cmd_table(gamma, field, args):
    check = cross_check_tables(gamma, field, args.jobs)
    rows = {}
    for key in sorted(check):
        r = check[key]
        rows[key] = {
            "bettiMatch": r["betti_match"],
            "homologyMatch": r["homology_match"],
            "computed": {
                "betti": _table_json(gamma, r["computed"]["betti"]),
                "homology": _table_json(gamma, r["computed"]["homology"]),
            },
            "oracle": {
                "betti": _table_json(gamma, r["oracle"]["betti"]),
                "homology": _table_json(gamma, r["oracle"]["homology"]),
            },
        }
    return {
        "field": repr(field),
        "vertices": list(gamma.vertices),
        "rows": rows,
        "allMatch": all(
            r["bettiMatch"] and r["homologyMatch"] for r in rows.values()
        ),
    }


_HANDLERS = {
    "validate": cmd_validate,
    "cm": cmd_cm,
    "homology": cmd_homology,
    "hexagon": cmd_hexagon,
    "resolve": cmd_resolve,
    "table": cmd_table,
}


def _is_table_dict(v):
    return isinstance(v, dict) and set(v) == {"axis", "vertices", "entries"}


def _flatten(prefix, v, out):
    if _is_table_dict(v):
        for e in v["entries"]:
            out.append((f"{prefix}.{e['index']}.{e['subset']}", str(e["dim"])))
        if not v["entries"]:
            out.append((prefix, "empty"))
    elif isinstance(v, dict):
        for k in sorted(v):
            _flatten(f"{prefix}.{k}" if prefix else k, v[k], out)
    else:
        out.append((prefix, json.dumps(v)))


def _text_validate(report):
    return f"field: {report['field']}\nok, {report['cells']} cells\n"


def _text_cm(report):
    lines = [
        f"field: {report['field']}",
        f"dim: {report['dim']}",
        f"isCM: {json.dumps(report['isCM'])}",
        f"lcmOrder: {report['lcmOrder']}",
        f"gorensteinStar: {json.dumps(report['gorensteinStar'])}",
        f"topCohomologyRank: {report['topCohomologyRank']}",
    ]
    for p, names in report["witnesses"]:
        lines.append(f"witness: degree {p} subset {{{','.join(names)}}}")
    return "\n".join(lines) + "\n"


def _render(command, report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    flat = []
    _flatten("", report, flat)
    if fmt == "tsv":
        return "".join(f"{p}\t{v}\n" for p, v in flat)
    if command == "validate":
        return _text_validate(report)
    if command == "cm":
        return _text_cm(report)
    return "".join(f"{p}: {v}\n" for p, v in flat)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        field = Field(args.char)
        gamma = _load_complex(args)
        report = _HANDLERS[args.command](gamma, field, args)
    except InvalidComplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(_render(args.command, report, args.fmt))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
