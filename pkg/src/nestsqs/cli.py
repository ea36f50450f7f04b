"""Command-line surface: construct, verify, export-fr, simulate, registry.

Every command emits a run manifest (command, parameters, outputs, verification
summary).  All commands are deterministic: identical invocations produce
byte-identical files and manifests.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import boolean, catalog, designs, frcodes
from .designs import DesignError
from .fields import FieldError, Gf2mField


def _manifest(command: str, parameters: dict, outputs: list, summary) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "outputs": outputs,
        "verification_summary": summary,
    }


def _emit(manifest: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(manifest, indent=2, sort_keys=True))
        return
    print(f"command: {manifest['command']}")
    for key, value in sorted(manifest["parameters"].items()):
        print(f"  {key}: {value}")
    for path in manifest["outputs"]:
        print(f"wrote {path}")
    summary = manifest["verification_summary"]
    if isinstance(summary, dict):
        for key, value in sorted(summary.items()):
            print(f"  {key}: {value}")


def cmd_construct(args) -> tuple[dict, int]:
    if args.kind == "boolean":
        if args.m is None:
            raise DesignError("construct boolean requires --m")
        f = Gf2mField(args.m)
        design = boolean.nested_boolean_sqs(f)
        if args.form == "rotational":
            design = boolean.to_rotational(f, design)
        params = {"kind": "boolean", "m": args.m, "form": args.form}
    elif args.kind.startswith("catalog:"):
        name = args.kind.split(":", 1)[1]
        if name not in catalog.CONSTRUCTORS:
            raise DesignError(
                f"unknown catalog name {name!r}; known: {', '.join(sorted(catalog.CONSTRUCTORS))}"
            )
        design = catalog.CONSTRUCTORS[name]()
        params = {"kind": args.kind}
    else:
        raise DesignError(f"unknown construct kind {args.kind!r}")
    outputs = []
    if args.out:
        designs.write_nsqs(design, args.out)
        outputs.append(args.out)
    summary = designs.verification_report(design)
    return _manifest("construct", params, outputs, summary), 0


def cmd_verify(args) -> tuple[dict, int]:
    design = designs.read_nsqs(args.path)
    report = designs.verification_report(design)
    t2 = designs.check_t_design(designs.underlying_blocks(design), design.v, 2)
    report["t2_design"] = {"t": 2, "lambda": t2.lam, "pass": t2.ok}
    failures = []
    if not report["t_design"]["pass"] and not t2.ok:
        td = designs.check_t_design(designs.underlying_blocks(design), design.v, 3, 1)
        failures.append(f"not a t-design at t=3 or t=2; t=3 witnesses: {td.violations}")
    if args.expect_class and report["class"] != args.expect_class:
        failures.append(f"class {report['class']} != expected {args.expect_class}")
    if args.expect_mu is not None:
        hist = report["histogram"]
        if list(hist) != [str(args.expect_mu)]:
            failures.append(f"histogram {hist} != constant multiplicity {args.expect_mu}")
    if args.expect_lambda is not None and report["t_design"]["lambda"] != args.expect_lambda:
        failures.append(
            f"t=3 lambda {report['t_design']['lambda']} != expected {args.expect_lambda}"
        )
    report["failures"] = failures
    manifest = _manifest("verify", {"path": args.path}, [], report)
    return manifest, (1 if failures else 0)


def cmd_export_fr(args) -> tuple[dict, int]:
    design = designs.read_nsqs(args.path)
    code = frcodes.to_fr_code(design)
    outputs = []
    if args.out:
        frcodes.write_layout(code, args.out)
        outputs.append(args.out)
    zs = frcodes.verify_zero_skip(code)
    summary = {
        "b": code.b,
        "k": code.k,
        "r": code.r,
        "v": code.v,
        "zero_skip": zs.ok,
        "max_skip": zs.worst_skip,
    }
    manifest = _manifest("export-fr", {"path": args.path}, outputs, summary)
    return manifest, 0


def _plan_dict(code, plan) -> dict:
    return {
        "failed": plan.failed,
        "helpers": [
            {"node": node_id, "read_positions": list(positions)}
            for node_id, positions in plan.helpers
        ],
        "total_skip": plan.total_skip,
        "packets": sorted(code.name_of(p) for p in plan.packets_recovered),
    }


def cmd_simulate(args) -> tuple[dict, int]:
    code = frcodes.read_layout(args.layout)
    if args.fail == "all":
        plans = [frcodes.plan_repair(code, i) for i in code.ids()]
    else:
        plans = [frcodes.plan_repair(code, int(args.fail))]
    summary = {
        "plans": [_plan_dict(code, p) for p in plans],
        "total_skip": sum(p.total_skip for p in plans),
        "max_skip": max(p.total_skip for p in plans),
    }
    outputs = []
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
            fh.write("\n")
        outputs.append(args.out)
    manifest = _manifest(
        "simulate", {"layout": args.layout, "fail": args.fail}, outputs, summary
    )
    return manifest, 0


def cmd_registry(args) -> tuple[dict, int]:
    rows = [
        {
            "v": e.v,
            "status": e.status,
            "source": e.source,
            "constructible_here": e.constructible_here,
        }
        for e in catalog.registry()
    ]
    manifest = _manifest("registry", {}, [], {"rows": rows})
    return manifest, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nestsqs",
        description="Construct, verify, and export nested Steiner quadruple systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a design and write it as .nsqs")
    p.add_argument("kind", help="'boolean' or 'catalog:<name>' (e.g. catalog:sqs50)")
    p.add_argument("--m", type=int, help="extension degree for boolean constructions")
    p.add_argument("--form", choices=["field", "rotational"], default="field")
    p.add_argument("--out", help="output .nsqs path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a .nsqs file")
    p.add_argument("path")
    p.add_argument("--expect-class", dest="expect_class")
    p.add_argument("--expect-mu", dest="expect_mu", type=int)
    p.add_argument("--expect-lambda", dest="expect_lambda", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-fr", help="export a completely uniform design as an FR layout")
    p.add_argument("path")
    p.add_argument("--out", help="output layout path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_export_fr)

    p = sub.add_parser("simulate", help="plan repairs for a stored FR layout")
    p.add_argument("layout")
    p.add_argument("--fail", default="all", help="node id, or 'all'")
    p.add_argument("--out", help="optional JSON report path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("registry", help="print the nested SQS existence registry")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_registry)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        manifest, status = args.func(args)
    except (DesignError, FieldError, frcodes.RepairError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(manifest, args.json)
    return status


if __name__ == "__main__":
    sys.exit(main())
