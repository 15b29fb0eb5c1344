"""Command-line entry point: one subcommand per module.

Instances travel as JSON (path or inline), traces leave as CSV.
Exit codes: 0 ok, 1 selftest violation, 2 malformed input, 3
precondition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .choquet import choquet, level_chain
from .fubini import FubiniInstance, lln_run, lopsided_check
from .intervals import IntervalSetFunction, StepFunction, choquet_interval
from .selftest import run_all
from .setfunctions import (GroundSet, PreconditionError,
                           is_increasing, is_modular, is_submodular,
                           setfunction_from_json)
from .uncrossing import WeightedFamily, family_sum, uncross
from .variation import (canonical_decomposition, max_variation_chain,
                        total_variation)


def _load_json(source: str):
    if os.path.exists(source):
        with open(source) as handle:
            return json.load(handle)
    return json.loads(source)


def _interval_phi_from_json(obj) -> IntervalSetFunction:
    if obj["kind"] == "concave-of-measure":
        density = obj.get("density")
        if density is not None:
            density = (tuple(density["breakpoints"]), tuple(density["values"]))
        return IntervalSetFunction.concave_of_measure(obj["breakpoints"], density)
    if obj["kind"] == "point-mass":
        return IntervalSetFunction.point_mass(obj["location"], obj["mass"])
    raise ValueError(f"unknown interval setfunction kind {obj['kind']!r}")


def _verdict_text(name, verdict, ground):
    if verdict:
        return f"{name}: yes"
    s, t = verdict.witness
    return (f"{name}: no (witness {ground.format_mask(s)}, "
            f"{ground.format_mask(t)})")


def cmd_check(args):
    phi = setfunction_from_json(_load_json(args.input))
    sub = is_submodular(phi, args.tol)
    inc = is_increasing(phi, args.tol)
    mod = is_modular(phi, args.tol)
    if args.format == "json":
        print(json.dumps({
            "submodular": {"holds": sub.holds, "witness": sub.witness},
            "increasing": {"holds": inc.holds, "witness": inc.witness},
            "modular": {"holds": mod.holds, "witness": mod.witness},
        }))
    else:
        for name, verdict in (("submodular", sub), ("increasing", inc),
                              ("modular", mod)):
            print(_verdict_text(name, verdict, phi.ground))
    return 0


def cmd_choquet_eval(args):
    phi = setfunction_from_json(_load_json(args.input))
    f = [float(v) for v in _load_json(args.function)]
    value = choquet(phi, f, shift=args.shift)
    if args.chain:
        chain = level_chain(f)
        print("threshold,mask,phi,contribution")
        thresholds = list(chain.thresholds)
        for t, mask, nxt in zip(thresholds, chain.sets, thresholds[1:] + [0.0]):
            print(f"{t!r},{mask},{phi(mask)!r},{((t - nxt) * phi(mask))!r}")
    if args.format == "json":
        print(json.dumps({"value": value}))
    else:
        print(f"choquet value: {value!r}")
    return 0


def cmd_variation(args):
    phi = setfunction_from_json(_load_json(args.input))
    k = total_variation(phi)
    chain = max_variation_chain(phi)
    if args.format == "json":
        print(json.dumps({"variation": k, "chain": chain}))
    else:
        print(f"total variation: {k!r}")
        print("maximizing chain: " + " -> ".join(
            phi.ground.format_mask(m) for m in chain))
    return 0


def cmd_decompose(args):
    phi = setfunction_from_json(_load_json(args.input))
    dec = canonical_decomposition(phi)
    print(json.dumps({"mu": list(dec.mu), "nu": list(dec.nu),
                      "variation": dec.variation}))
    return 0


def cmd_uncross(args):
    obj = _load_json(args.input)
    ground = GroundSet(int(obj["n"]))
    family = WeightedFamily.of(ground, [(int(m), int(a)) for m, a in obj["entries"]])
    phi = None
    if args.phi is not None:
        phi = setfunction_from_json(_load_json(args.phi))
    trace = uncross(family, phi)
    print("step,mask_a,mask_b,potential_before,potential_after,"
          "phi_sum_before,phi_sum_after")
    for i, step in enumerate(trace.steps):
        print(f"{i},{step.pair[0]},{step.pair[1]},{step.potential_before},"
              f"{step.potential_after},{step.phi_sum_before!r},"
              f"{step.phi_sum_after!r}")
    print("final chain: " + json.dumps([list(e) for e in trace.final.entries]))
    print("h: " + json.dumps(list(family_sum(trace.final).values)))
    return 0


def cmd_interval_choquet(args):
    obj = _load_json(args.input)
    phi = _interval_phi_from_json(obj["phi"])
    f = StepFunction(tuple(obj["f"]["breakpoints"]), tuple(obj["f"]["values"]))
    value = choquet_interval(phi, f)
    if args.format == "json":
        print(json.dumps({"value": value}))
    else:
        print(f"interval choquet value: {value!r}")
    return 0


def cmd_fubini(args):
    obj = _load_json(args.input)
    phi = setfunction_from_json(obj["phi"])
    inst = FubiniInstance.of(obj["lambda"], obj["pi"], obj["F"], phi,
                             validate=not args.force, tol=args.tol)
    result = lopsided_check(inst, args.tol)
    if args.steps > 0:
        trace = lln_run(inst, steps=args.steps, seed=args.seed, tol=args.tol)
        print("k,what_f_k,running_avg,what_h_k,norm_h_k")
        for rec in trace.records:
            print(f"{rec.k},{rec.what_f!r},{rec.running_avg!r},"
                  f"{rec.what_h!r},{rec.norm_h!r}")
    print("lhs,rhs,slack,holds")
    print(f"{result.lhs!r},{result.rhs!r},{result.slack!r},{result.holds}")
    return 0 if (result.holds or args.force) else 1


def cmd_selftest(args):
    results = run_all(seed=args.seed)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choqkit",
        description="Choquet extensions of submodular setfunctions: "
                    "evaluation, variation, uncrossing, and checks.")
    parser.add_argument("--tol", type=float, default=1e-9,
                        help="absolute comparison tolerance (default 1e-9)")
    parser.add_argument("--format", choices=("human", "json"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="submodular / increasing / modular verdicts")
    p.add_argument("input", help="setfunction JSON (path or inline)")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("choquet-eval", help="evaluate the Choquet extension")
    p.add_argument("input", help="setfunction JSON (path or inline)")
    p.add_argument("--function", required=True,
                   help="JSON real array of length n (path or inline)")
    p.add_argument("--shift", type=float, default=None,
                   help="explicit shift constant c >= sup|f|")
    p.add_argument("--chain", action="store_true",
                   help="also print the level chain as CSV")
    p.set_defaults(fn=cmd_choquet_eval)

    p = sub.add_parser("variation", help="total variation and a maximizing chain")
    p.add_argument("input")
    p.set_defaults(fn=cmd_variation)

    p = sub.add_parser("decompose", help="canonical mu/nu decomposition as JSON")
    p.add_argument("input")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("uncross", help="run the uncrossing procedure")
    p.add_argument("input", help='{"n": int, "entries": [[mask, mult], ...]}')
    p.add_argument("--phi", default=None, help="optional setfunction JSON")
    p.set_defaults(fn=cmd_uncross)

    p = sub.add_parser("interval-choquet",
                       help="Choquet integral on the interval algebra")
    p.add_argument("input", help='{"phi": {...}, "f": {"breakpoints": [...], '
                                 '"values": [...]}}')
    p.set_defaults(fn=cmd_interval_choquet)

    p = sub.add_parser("fubini", help="lopsided Fubini check and LLN trace")
    p.add_argument("input")
    p.add_argument("--steps", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true",
                   help="skip the submodular/nonnegative hypothesis check")
    p.set_defaults(fn=cmd_fubini)

    p = sub.add_parser("selftest", help="run the full invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return 3
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
