"""Command line front end.

Exit codes: 0 ok, 1 input error, 2 verification failure, 3 unknown (budget).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .core import IdealError, ParseError, parse_ideal, render, render_monomial
from .decomp import (dump_decomposition, load_decomposition, partition_to_decomposition,
                     verify_decomposition)
from .poset import build_poset, dump_partition, load_partition, validate_partition
from .scan import scan_ci, summarize
from .solver import default_budget, sdepth_exact
from .transforms import (carry_partition, extend_decomposition, lift_partition,
                         lower_partition, project_decomposition, radical_reduction_chain)

OK, INPUT_ERROR, INVALID, UNKNOWN = 0, 1, 2, 3


class InputError(Exception):
    pass


def _ideal(args, text: str):
    try:
        return parse_ideal(text, args.vars)
    except ParseError as exc:
        raise InputError("parse error:\n" + exc.diagnostic()) from exc


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_sdepth(args) -> int:
    ideal = _ideal(args, args.ideal)
    result = sdepth_exact(ideal, budget=args.budget)
    payload = {"ideal": render(ideal), "n": ideal.n, "sdepth": result.value,
               "lower": result.lower, "upper": result.upper,
               "refutation_level": result.refutation_level, "nodes": result.nodes}
    if args.certificate and result.certificate is not None:
        dump_partition(result.certificate, args.certificate)
    if args.decomposition and result.certificate is not None:
        dump_decomposition(partition_to_decomposition(result.certificate), args.decomposition)
    if not result.known:
        _emit(args, payload, [f"sdepth {render(ideal)}: unknown, bounds "
                              f"[{result.lower},{result.upper}] after {result.nodes} nodes"])
        return UNKNOWN
    _emit(args, payload, [
        f"sdepth {render(ideal)} = {result.value}",
        f"certificate: {len(result.certificate.intervals)} intervals, min rho {result.value}",
        f"no partition at k = {result.refutation_level}" if result.refutation_level <= ideal.n
        else f"k = {result.refutation_level} exceeds n",
        f"nodes: {result.nodes}",
    ])
    return OK


def cmd_verify(args) -> int:
    ideal = _ideal(args, args.ideal)
    dec = load_decomposition(args.decomposition)
    report = verify_decomposition(ideal, dec)
    payload = report.as_dict()
    payload["ideal"] = render(ideal)
    if report.valid:
        _emit(args, payload, [f"valid Stanley decomposition of {render(ideal)}, sdepth {report.sdepth}"])
        return OK
    _emit(args, payload, [f"invalid: {report.problem}",
                          f"witness: {render_monomial(report.witness)}" if report.witness else ""])
    return INVALID


def _optional_ideal(args):
    return _ideal(args, args.ideal) if args.ideal else None


def cmd_transform(args) -> int:
    kind = args.kind
    if kind in ("lift", "lower"):
        part = load_partition(args.input, _optional_ideal(args))
        before = validate_partition(part.poset, part)
        if not before.valid:
            raise IdealError("input partition is invalid: " + "; ".join(before.problems[:3]))
        dropped = 0
        if kind == "lift":
            out = lift_partition(part, args.var)
        else:
            lowered = lower_partition(part, args.var)
            out, dropped = lowered.partition, lowered.dropped
        after = validate_partition(out.poset, out)
        if args.output:
            dump_partition(out, args.output)
        payload = {"from": render(part.poset.ideal), "to": render(out.poset.ideal),
                   "min_rho_before": before.min_rho, "min_rho_after": after.min_rho,
                   "valid": after.valid, "dropped": dropped}
        _emit(args, payload, [
            f"{render(part.poset.ideal)} -> {render(out.poset.ideal)}",
            f"min rho: {before.min_rho} -> {after.min_rho}"
            + (f" ({dropped} empty intervals dropped)" if dropped else ""),
            "result validates" if after.valid else "RESULT INVALID",
        ])
        return OK if after.valid else INVALID
    if kind in ("project", "extend"):
        dec = load_decomposition(args.input)
        ideal = _optional_ideal(args)
        if kind == "project":
            out = project_decomposition(dec, args.drop, ideal)
        else:
            out = extend_decomposition(dec, ideal)
        if args.output:
            dump_decomposition(out, args.output)
        target = out.generated_ideal()
        payload = {"to": render(target), "sdepth_before": dec.sdepth, "sdepth_after": out.sdepth,
                   "decomposition": out.to_json()}
        _emit(args, payload, [str(out), f"decomposes {render(target)}",
                              f"sdepth: {dec.sdepth} -> {out.sdepth}"])
        return OK
    # radical-chain
    ideal = _ideal(args, args.input)
    steps = radical_reduction_chain(ideal)
    payload = {"ideal": render(ideal), "radical": render(steps[-1].after if steps else ideal),
               "steps": [{"variable": s.variable, "generator": s.generator,
                          "before": render(s.before), "after": render(s.after)} for s in steps]}
    lines = [s.describe() for s in steps] + [f"{len(steps)} steps, radical {payload['radical']}"]
    if args.partition:
        part = load_partition(args.partition, ideal)
        carried = carry_partition(steps, part)
        report = validate_partition(carried.poset, carried)
        payload["min_rho_before"] = validate_partition(part.poset, part).min_rho
        payload["min_rho_after"] = report.min_rho
        lines.append(f"partition carried to the radical: min rho {payload['min_rho_before']}"
                     f" -> {report.min_rho}")
        if args.certificate:
            dump_partition(carried, args.certificate)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
            fh.write("\n")
    _emit(args, payload, lines)
    return OK


def cmd_scan(args) -> int:
    skip = set()
    out = sys.stdout
    if args.resume:
        try:
            with open(args.resume, encoding="utf-8") as fh:
                for line in fh:
                    if line.strip():
                        rec = json.loads(line)
                        skip.add((rec["n"], rec["ideal"]))
        except FileNotFoundError:
            pass
        out = open(args.resume, "a", encoding="utf-8")
    elif args.out:
        out = open(args.out, "w", encoding="utf-8")
    records = []
    try:
        for rec in scan_ci(args.n_min, args.n_max, args.exp_max, args.exponents,
                           args.samples, args.seed, args.budget, frozenset(skip), args.threads):
            records.append(rec)
            out.write(json.dumps(rec.to_json()) + "\n")
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    summary = summarize(records)
    summary["seed"] = args.seed
    summary["skipped"] = len(skip)
    mismatches = [r.ideal for r in records if r.match is False]
    summary["mismatches"] = mismatches
    if args.json:
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    else:
        print(f"scan: {summary['records']} records, {summary['match']} match, "
              f"{summary['mismatch']} mismatch, {summary['unknown']} unknown "
              f"(seed {args.seed}, {len(skip)} resumed)", file=sys.stderr)
        for ideal in mismatches:
            print(f"  mismatch: {ideal}", file=sys.stderr)
    return OK


def cmd_poset(args) -> int:
    ideal = _ideal(args, args.ideal)
    g = [int(a) for a in args.g.split(",")] if args.g else None
    poset = build_poset(ideal, g)
    payload = {"ideal": render(ideal), "g": list(poset.g), "size": len(poset),
               "points": [list(p) for p in poset.points]}
    _emit(args, payload, [f"P for {render(ideal)} with g={poset.g}: {len(poset)} points"]
          + [" ".join(map(str, p)) for p in poset.points])
    return OK


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", type=int, default=None, help="number of variables n")
    common.add_argument("--budget", type=int, default=None,
                        help="search node budget (default $STANLEY_BUDGET or 10^8)")
    common.add_argument("--threads", type=int, default=1, help="worker processes for scans")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled exponents")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="stanleydepth", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sdepth", parents=[common], help="compute the Stanley depth of an ideal")
    p.add_argument("ideal")
    p.add_argument("--certificate", metavar="FILE", help="write the interval partition")
    p.add_argument("--decomposition", metavar="FILE", help="write a Stanley decomposition")
    p.set_defaults(func=cmd_sdepth)

    p = sub.add_parser("verify", parents=[common], help="check a Stanley decomposition")
    p.add_argument("ideal")
    p.add_argument("decomposition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="move certificates between related ideals")
    tsub = p.add_subparsers(dest="kind", required=True)
    for kind in ("lift", "lower"):
        t = tsub.add_parser(kind, parents=[common])
        t.add_argument("input", help="partition JSON")
        t.add_argument("--var", type=int, required=True)
        t.add_argument("--ideal", help="ideal of the partition (default: from its bottoms)")
        t.add_argument("-o", "--output")
        t.set_defaults(func=cmd_transform)
    t = tsub.add_parser("project", parents=[common])
    t.add_argument("input", help="decomposition JSON")
    t.add_argument("--drop", type=int, default=None, help="variable set to 1 (default: last)")
    t.add_argument("--ideal", help="ideal of the decomposition (default: generated by the u_i)")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_transform)
    t = tsub.add_parser("extend", parents=[common])
    t.add_argument("input", help="decomposition JSON")
    t.add_argument("--ideal")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_transform)
    t = tsub.add_parser("radical-chain", parents=[common])
    t.add_argument("input", help="complete intersection ideal")
    t.add_argument("--partition", help="partition of the ideal to carry down the chain")
    t.add_argument("--certificate", help="where to write the carried partition")
    t.add_argument("-o", "--output", help="write the chain as JSON")
    t.set_defaults(func=cmd_transform)

    p = sub.add_parser("scan-ci", parents=[common], help="scan complete intersections")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--exp-max", type=int, default=1)
    p.add_argument("--exponents", action="store_true",
                   help="non-squarefree exponent assignments up to --exp-max")
    p.add_argument("--samples", type=int, default=None,
                   help="random exponent assignments per pattern instead of all")
    p.add_argument("--out", help="JSON-lines output file (default stdout)")
    p.add_argument("--resume", help="append to this file, skipping records already in it")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("poset", help="characteristic poset tools")
    psub = p.add_subparsers(dest="kind", required=True)
    t = psub.add_parser("show", parents=[common])
    t.add_argument("ideal")
    t.add_argument("--g", help="bounding vector, comma separated (default: lcm)")
    t.set_defaults(func=cmd_poset)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = default_budget()
    if getattr(args, "n_max", 1) < 1:
        parser.error("--n-max must be at least 1")
    try:
        return args.func(args)
    except InputError as exc:
        print(exc, file=sys.stderr)
    except (IdealError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
