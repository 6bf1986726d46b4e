"""Command-line front end.

All input and output is JSON on disk (or stdout).  Exit codes: 0 ok,
2 degenerate input, 3 validation failure, 4 internal invariant violation.
Errors print one line ``error: <Code> key=value ...`` on stderr.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass, field

from . import acceptance
from .brauer import QuaternionAlgebra, QuaternionOverFt, non_retract_witness, residue_table
from .errors import Degenerate, InvariantViolation, M0nError
from .etale import EtaleAlgebra
from .exactnum import rat_str
from .parametrize import (Configuration, build_context, canonical, chart_coords, context_from_json,
                          from_chart, plucker, realize)
from .sampling import random_plane_in_z


@dataclass
class JobDescriptor:
    command: str
    inputs: list[str] = field(default_factory=list)
    output: str | None = None
    seed: int = 0
    format: str = "json"


def _load(path: str):
    with open(path) as fh:
        return json.load(fh)


def _emit(job: JobDescriptor, payload: dict) -> None:
    doc = {"job": asdict(job), **payload}
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if job.output:
        with open(job.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _context(path: str, seed: int):
    data = _load(path)
    data = data.get("context", data)
    if "factors" in data:
        return build_context(EtaleAlgebra.from_json(data), seed)
    return context_from_json(data)


def _canonical_payload(ctx, S) -> dict:
    piv, coords = chart_coords(ctx, S)
    return {
        "canonical": S.to_json(),
        "chart": {"pivots": list(piv), "coords": [rat_str(c) for c in coords]},
        "plucker": [rat_str(c) for c in plucker(S)],
    }


def cmd_define(args, job) -> int:
    e = EtaleAlgebra.from_json(_load(args.algebra))
    n = e.degree
    parity = "odd" if n % 2 else "even"
    if n % 2 and n >= 5:
        branch = "parametrization available"
    elif n % 2 == 0 and n >= 6:
        branch = "obstruction module applies"
    else:
        branch = "degree below the supported range"
    _emit(job, {
        "degree": n,
        "parity": parity,
        "etale": True,
        "factor_degrees": [p.degree for p in e.factors],
        "branch": branch,
        "summary": f"degree {n}, {parity}, {branch}",
    })
    return 0


def cmd_context(args, job) -> int:
    ctx = build_context(EtaleAlgebra.from_json(_load(args.algebra)), args.seed)
    _emit(job, {"context": ctx.to_json()})
    return 0


def cmd_canonical(args, job) -> int:
    ctx = _context(args.context, args.seed)
    cfg = Configuration.from_json(ctx.algebra, _load(args.config))
    _emit(job, _canonical_payload(ctx, canonical(ctx, cfg)))
    return 0


def cmd_compare(args, job) -> int:
    ctx = _context(args.context, args.seed)
    cfgs = [Configuration.from_json(ctx.algebra, _load(p)) for p in (args.config_a, args.config_b)]
    try:
        sa, sb = (canonical(ctx, c) for c in cfgs)
    except Degenerate as exc:
        _emit(job, {"result": "DEGENERATE", "reason": exc.code})
        return exc.exit_code
    _emit(job, {"result": "EQUIVALENT" if sa == sb else "DIFFERENT",
                "canonical_a": sa.to_json(), "canonical_b": sb.to_json()})
    return 0


def cmd_roundtrip(args, job) -> int:
    ctx = _context(args.context, args.seed)
    rng = random.Random(args.seed)
    checked = skipped = 0
    while checked < args.trials:
        S = random_plane_in_z(rng, ctx)
        try:
            T = canonical(ctx, realize(ctx, S))
        except Degenerate:
            skipped += 1
            continue
        piv, coords = chart_coords(ctx, S)
        if T != S or from_chart(ctx, piv, coords) != S:
            raise InvariantViolation("round trip failed", trial=checked)
        checked += 1
    _emit(job, {"trials": checked, "outside_open_set": skipped, "passed": True})
    return 0


def cmd_obstruction(args, job) -> int:
    A = QuaternionAlgebra.from_json(_load(args.quaternion))
    cert = non_retract_witness(args.n, A)
    _emit(job, {"certificate": cert.to_json()})
    return 0


def cmd_residues(args, job) -> int:
    A = QuaternionOverFt.from_json(_load(args.quaternion))
    extra = [p for p in args.points.split(",") if p] if args.points else []
    _emit(job, residue_table(A, extra))
    return 0


def cmd_selftest(args, job) -> int:
    results = acceptance.run_all(args.scale, args.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    _emit(job, {"scale": args.scale,
                "criteria": [{"number": r.number, "name": r.name, "passed": r.passed,
                              "detail": r.detail} for r in results]})
    return 0 if all(r.passed for r in results) else 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write JSON here instead of stdout")
    common.add_argument("--format", choices=["json"], default="json")

    parser = argparse.ArgumentParser(prog="twisted-m0n", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("define", parents=[common], help="validate an étale algebra")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_define, inputs=["algebra"])

    p = sub.add_parser("context", parents=[common], help="build a parametrization context")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_context, inputs=["algebra"])

    p = sub.add_parser("canonical", parents=[common], help="canonical plane and chart coordinates")
    p.add_argument("context", help="context JSON (or an algebra JSON)")
    p.add_argument("config")
    p.set_defaults(func=cmd_canonical, inputs=["context", "config"])

    p = sub.add_parser("compare", parents=[common], help="compare two configurations")
    p.add_argument("context")
    p.add_argument("config_a")
    p.add_argument("config_b")
    p.set_defaults(func=cmd_compare, inputs=["context", "config_a", "config_b"])

    p = sub.add_parser("roundtrip", parents=[common], help="realize/canonical round trips")
    p.add_argument("context")
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_roundtrip, inputs=["context"])

    p = sub.add_parser("obstruction", parents=[common], help="non-retract-rationality certificate")
    p.add_argument("quaternion")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_obstruction, inputs=["quaternion"])

    p = sub.add_parser("residues", parents=[common], help="residue table of a symbol over Q(t)")
    p.add_argument("quaternion")
    p.add_argument("--points", default="0,1", help="extra rational points, comma separated")
    p.set_defaults(func=cmd_residues, inputs=["quaternion"])

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    p.add_argument("--scale", choices=["small", "full"], default="small")
    p.set_defaults(func=cmd_selftest, inputs=[])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    job = JobDescriptor(args.command, [getattr(args, k) for k in args.inputs], args.out,
                        args.seed, args.format)
    try:
        return args.func(args, job)
    except M0nError as exc:
        print(f"error: {exc.reason()}", file=sys.stderr)
        return exc.exit_code
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"error: MalformedInput {type(exc).__name__}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
