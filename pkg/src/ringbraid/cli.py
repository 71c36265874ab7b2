"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 parse/input error,
3 word-length cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import dsl, geometry
from .braid import exponent_sum, permutation
from .freegroup import WordLengthError, max_word_length
from .model import DEFAULT_MODEL as MODEL
from .verify import TraceFormatError, conjugate_trace, load_trace, shipped_trace, verify_derivation, verify_lemma_comp

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3


def _summary(e) -> dict:
    labels = MODEL.wedge_label_action(e)
    return {
        "framing": list(e.framing),
        "braid": str(e.braid),
        "exponent_sum": exponent_sum(e.braid),
        "permutation": list(permutation(e.braid)),
        "joint_invariant": MODEL.joint_invariant(e),
        "label_action": {
            "disk_permutation": list(labels.disk_permutation()),
            "branch_shifts": list(labels.shifts()),
            "fixed_disks": labels.fixed_disks(),
            "order": labels.order(),
        },
    }


def _equality(r) -> dict:
    return {"equal": r.equal, "certificate": r.certificate, "evidence": json.loads(json.dumps(r.detail))}


def cmd_eq(args) -> tuple[dict, bool]:
    r = MODEL.equal(dsl.evaluate(args.left), dsl.evaluate(args.right))
    return {"left": args.left, "right": args.right, **_equality(r)}, r.equal


def cmd_normalize(args) -> tuple[dict, bool]:
    return {"expr": args.expr, **_summary(dsl.evaluate(args.expr))}, True


def cmd_order(args) -> tuple[dict, bool]:
    k = MODEL.element_order(dsl.evaluate(args.expr), args.max)
    return {"expr": args.expr, "max": args.max, "order": k}, k is not None


def cmd_comm(args) -> tuple[dict, bool]:
    r = MODEL.commutes(dsl.evaluate(args.left), dsl.evaluate(args.right))
    return {"left": args.left, "right": args.right, "commutes": r.equal, **_equality(r)}, r.equal


def cmd_verify_lemma(args) -> tuple[dict, bool]:
    report = verify_lemma_comp()
    return report.to_dict(), report.passed


def cmd_verify_derivation(args) -> tuple[dict, bool]:
    trace = load_trace(args.file) if args.file else shipped_trace()
    if args.conjugate:
        trace = conjugate_trace(trace, args.conjugate)
    report = verify_derivation(trace)
    out = report.to_dict()
    out["start"] = trace.start
    out["final"] = trace.final
    return out, report.passed


def cmd_simulate(args) -> tuple[dict, bool]:
    cfg = geometry.load_config(args.config) if args.config else geometry.DiskConfig()
    samples = geometry.build_samples(cfg, args.depth)
    element = dsl.evaluate(args.expr)
    out = {"expr": args.expr, "samples": len(samples), "maps": [f"{n}^{s}" for n, s in geometry.map_expr(args.expr)]}
    try:
        sim = geometry.apply_word(args.expr, samples, cfg)
    except geometry.MatchError as exc:
        out["error"] = str(exc)
        return out, False
    algebraic = MODEL.wedge_label_action(element)
    agree = sim.labels == algebraic
    out["label_action"] = {
        "disk_permutation": list(sim.labels.disk_permutation()),
        "branch_shifts": list(sim.labels.shifts()),
        "order": sim.labels.order(),
    }
    out["matches_algebra"] = agree
    if args.svg:
        geometry.write_svg(args.svg, samples, sim.moved, cfg, title=args.expr)
        out["svg"] = args.svg
    return out, agree


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock duration (byte-stable output)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--max-word-length", type=int, default=None, help="abort when a free group word exceeds this length")

    parser = argparse.ArgumentParser(prog="ringbraid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eq", parents=[common], help="decide equality of two words")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("normalize", parents=[common], help="print invariants of a word")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("order", parents=[common], help="element order up to a bound")
    p.add_argument("expr")
    p.add_argument("--max", type=int, default=100)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("comm", parents=[common], help="do two words commute")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_comm)

    p = sub.add_parser("verify-lemma", parents=[common], help="run the relation suite")
    p.set_defaults(func=cmd_verify_lemma)

    p = sub.add_parser("verify-derivation", parents=[common], help="replay a derivation trace")
    p.add_argument("file", nargs="?", help="trace file (default: the shipped s3 derivation)")
    p.add_argument("--conjugate", help="conjugate the trace by this word first")
    p.set_defaults(func=cmd_verify_derivation)

    p = sub.add_parser("simulate", parents=[common], help="push Cantor samples through a word")
    p.add_argument("expr")
    p.add_argument("--config", help="geometry config (JSON)")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--svg", help="write a before/after plot")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.max_word_length is not None:
            with max_word_length(args.max_word_length):
                report, ok = args.func(args)
        else:
            report, ok = args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        # DslSyntaxError, TraceFormatError and ConfigError are ValueErrors
        kind = type(exc).__name__
        print(f"error: {kind}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except WordLengthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    doc = {"command": args.command, "status": "pass" if ok else "fail", **report}
    if not args.no_timing:
        doc["duration_s"] = round(time.perf_counter() - t0, 6)
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
