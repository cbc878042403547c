"""finring command line.

    finring validate SPEC
    finring props SPEC [--property P]... [--side left|right]
    finring check (SPEC | --catalog [--catalog-dir DIR])
    finring enumerate --order N [--emit DIR]
    finring zdemo [--bound B]

Exit codes: 0 all consistent, 1 discrepancy (or failed validation),
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration, properties, theorems, zint
from .ring import RingError, validate
from .specs import SpecError, construct, load_spec, spec_order, to_table_spec
from .subsets import units

EXIT_OK, EXIT_DISCREPANCY, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_spec(path):
    try:
        doc = load_spec(path)
    except OSError as exc:
        raise InputError(f"cannot read spec {path}: {exc.strerror or exc}") from None
    except ValueError as exc:
        raise InputError(f"cannot parse spec {path}: {exc}") from None
    try:
        spec_order(doc)
    except SpecError as exc:
        raise InputError(f"malformed spec {path}: field {exc}") from None
    return doc


def _build(doc, path):
    try:
        return construct(doc)
    except SpecError as exc:
        raise InputError(f"malformed spec {path}: field {exc}") from None
    except RingError as exc:
        raise InputError(f"spec {path} is not a ring: {exc}") from None


def cmd_validate(args):
    doc = _read_spec(args.spec)
    if doc["kind"] == "table":
        report = validate(doc["add"], doc["mul"], doc["zero"], doc["one"], doc["order"])
        label = doc.get("label", "table")
    else:
        R = _build(doc, args.spec)
        report = validate(R.add, R.mul, R.zero, R.one, R.order)
        label = R.label
    out = {"command": "validate", "spec": doc, "label": label, "order": doc.get("order", spec_order(doc)),
           "validation": report.to_dict()}
    lines = [f"{label}: {'valid ring' if report.ok else 'NOT a ring'}"]
    for axiom, wit in report.violations:
        lines.append(f"  {axiom}: witness {list(wit)}")
    return out, lines, EXIT_OK if report.ok else EXIT_DISCREPANCY


def cmd_props(args):
    doc = _read_spec(args.spec)
    R = _build(doc, args.spec)
    wanted = args.property or list(properties.ALL_PROPERTIES)
    for name in wanted:
        if name not in properties.ALL_PROPERTIES:
            raise InputError(f"--property: unknown property {name!r}")
    sides = [args.side] if args.side else ["left", "right"]
    results = []
    for name in wanted:
        fn, sided = properties.ALL_PROPERTIES[name]
        if sided:
            results.extend(fn(R, s) for s in sides)
        else:
            results.append(fn(R))
    out = {
        "command": "props",
        "spec": doc,
        "label": R.label,
        "order": R.order,
        "units": units(R).members(),
        "results": [r.to_dict() for r in results],
    }
    lines = [f"{R.label} (order {R.order})"]
    for r in results:
        name = r.name + (f"[{r.side}]" if r.side else "")
        status = "holds" if r.holds else f"fails, witness {dict(r.witness)}"
        lines.append(f"  {name}: {status} ({r.search_space} checked)")
    return out, lines, EXIT_OK


def _suite_lines(reports):
    lines = []
    for rep in reports:
        head = f"{rep.entry or rep.label}: {rep.label}"
        if rep.error:
            lines.append(f"{head}  ERROR {rep.error}")
            continue
        marks = " ".join(f"{v.check}={v.status}" for v in rep.verdicts)
        qm = rep.properties["quasi_morphic[left]"].holds
        lines.append(f"{head} (order {rep.order}, left quasi-morphic={qm})  {marks}")
    bad = sum(1 for r in reports if r.discrepancies)
    err = sum(1 for r in reports if r.error)
    lines.append(f"{len(reports)} rings, {bad} with discrepancies, {err} input errors")
    return lines


def cmd_check(args):
    if args.catalog:
        try:
            catalog = theorems.load_catalog(args.catalog_dir)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read catalog: {exc}") from None
        source = {"catalog": args.catalog_dir or "default"}
    else:
        if args.spec is None:
            raise InputError("check: give a SPEC path or --catalog")
        doc = _read_spec(args.spec)
        catalog = [theorems.CatalogEntry(str(args.spec), doc)]
        source = {"spec": doc}
    reports = theorems.run_suite(catalog, args.budget)
    status = theorems.suite_status(reports)
    out = {"command": "check", **source,
           "reports": [r.to_dict(timings=args.timings) for r in reports],
           "status": status}
    return out, _suite_lines(reports), status


def cmd_enumerate(args):
    try:
        rings = enumeration.enumerate_unital_rings(args.order, max_order=args.max_order,
                                                   budget=args.budget)
    except ValueError as exc:
        raise InputError(f"--order: {exc}") from None
    except enumeration.BudgetExceeded as exc:
        raise InputError(f"budget exceeded: {exc}") from None
    entries = [{
        "label": R.label,
        "canonical_hash": enumeration.canonical_hash(R),
        "units": len(units(R)),
        "spec": to_table_spec(R),
    } for R in rings]
    out = {"command": "enumerate", "order": args.order, "count": len(rings), "rings": entries}
    if args.emit:
        paths = enumeration.emit(rings, args.emit)
        out["emitted"] = [p.name for p in paths]
    lines = [f"order {args.order}: {len(rings)} unital rings up to isomorphism"]
    lines += [f"  {e['label']}  units={e['units']}  {e['canonical_hash']}" for e in entries]
    return out, lines, EXIT_OK


def cmd_zdemo(args):
    try:
        rep = zint.z_remark6_report(args.bound)
    except properties.PreconditionError as exc:
        raise InputError(f"--bound: {exc}") from None
    out = {"command": "zdemo", "spec": {"ring": "Z", "bound": args.bound}, "report": rep}
    lines = [f"Z (|a|, |x|, |b| <= {args.bound})"]
    lines += [f"  {k}: {v}" for k, v in rep["properties"].items()]
    lines.append(f"  least stable-range-one failure (a, x, b) = {tuple(rep['sr1_witness'])}")
    lines.append(f"  least lifting failure (b, c) = {tuple(rep['lifting_witness'])}")
    lines += [f"  {k}: {v}" for k, v in rep["verdicts"].items()]
    ok = all(v == theorems.CONSISTENT for v in rep["verdicts"].values())
    return out, lines, EXIT_OK if ok else EXIT_DISCREPANCY


def _budget(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected seconds, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text",
                        help="human summary or a single JSON document")
    common.add_argument("--budget", type=_budget, default=None,
                        help=f"per-ring time budget in seconds (env {theorems.BUDGET_ENV})")

    parser = argparse.ArgumentParser(prog="finring", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the ring axioms of a spec")
    p.add_argument("spec")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("props", parents=[common], help="decide ring properties")
    p.add_argument("spec")
    p.add_argument("--property", action="append",
                   help=f"one of {', '.join(properties.ALL_PROPERTIES)}; repeatable")
    p.add_argument("--side", choices=("left", "right"))
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("check", parents=[common], help="verify the theorems on rings")
    p.add_argument("spec", nargs="?")
    p.add_argument("--catalog", action="store_true", help="run the shipped catalog")
    p.add_argument("--catalog-dir", default=None, help="directory of spec files to use instead")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings (machine output is then not reproducible)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="list unital rings of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-order", type=int, default=enumeration.DEFAULT_MAX_RING_ORDER)
    p.add_argument("--emit", default=None, help="write table specs into this directory")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("zdemo", parents=[common], help="decide the properties of Z")
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(func=cmd_zdemo)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.budget is None:
            try:
                args.budget = theorems.default_budget()
            except ValueError as exc:
                raise InputError(str(exc)) from None
        out, lines, status = args.func(args)
    except InputError as exc:
        print(f"finring: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "machine":
        stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
