"""Command-line surface: set enumeration, the nested-interval constructor,
coloring generation and export, avoidance scans, least-forcing-length search,
chromatic bounds, subword complexity, the end-to-end pipeline, and the
reproduction suite.

Numeric parameters are exact rational strings ("21/100"), never decimals.
Exit codes: 0 success / assertion held, 1 assertion or claim failed,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import colorings, construct, gapsets, reproduce, search, verify
from .exactnum import Q5, to_rational


class InputError(ValueError):
    pass


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_set_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--set", metavar="FILE", help="JSON set definition file")
    parser.add_argument("--set-json", metavar="JSON", help="inline JSON set definition")


def _load_spec(args) -> gapsets.GapSetSpec:
    if args.set and args.set_json:
        raise InputError("give either --set or --set-json, not both")
    if args.set:
        with open(args.set) as fh:
            obj = json.load(fh)
    elif args.set_json:
        obj = json.loads(args.set_json)
    else:
        raise InputError("a set definition is required (--set FILE or --set-json JSON)")
    return gapsets.GapSetSpec.from_json(obj)


def _parse_number(rational: Optional[str], root5: Optional[str]):
    """An exact number from its rational part and optional sqrt5 coefficient."""
    a = to_rational(rational) if rational is not None else Fraction(0)
    if root5 is not None:
        return Q5(a, to_rational(root5))
    return a


def _load_coloring(args) -> colorings.Coloring:
    source = args.coloring
    if source.startswith("preset:"):
        name = source.split(":", 1)[1]
        if args.n is None:
            raise InputError("presets need a length: -N")
        return colorings.preset_coloring(name, args.n)
    with open(source) as fh:
        return colorings.Coloring.from_json(json.load(fh))


# -- subcommands ------------------------------------------------------------------


def _cmd_set(args) -> int:
    spec = _load_spec(args)
    view = spec.enumerate(args.n)
    _emit(args, {"spec": spec.to_json(), **view.to_json()})
    return 0


def _cmd_alpha(args) -> int:
    spec = _load_spec(args)
    delta = to_rational(args.delta)
    view = spec.enumerate(args.q_bound) if args.q_bound else None
    if view is None:
        # enumerate far enough to reach start + steps elements
        bound = 1
        while True:
            bound *= 16
            view = spec.enumerate(bound)
            if len(view) >= args.start + args.steps or bound > 10**30:
                break
    elements = view.elements
    if len(elements) < args.start + args.steps:
        raise InputError(
            f"set has {len(elements)} enumerated elements; need {args.start + args.steps}"
        )
    q = elements[args.start : args.start + args.steps]
    cert = construct.build_alpha(
        q, args.r, delta, steps=args.steps, first_gap=elements[0]
    )
    _emit(args, cert.to_json())
    return 0


def _cmd_color(args) -> int:
    if args.preset:
        coloring = colorings.preset_coloring(args.preset, args.n)
    elif args.kind == "frac":
        alpha = _parse_number(args.alpha, args.alpha_root5)
        coloring = colorings.frac_coloring(alpha, args.r, args.n)
    elif args.kind == "block":
        coloring = colorings.block_coloring(args.m, args.n)
    elif args.kind == "residue":
        coloring = colorings.residue_coloring(args.m, args.n)
    elif args.kind == "rotation":
        alpha = _parse_number(args.alpha, args.alpha_root5)
        x0 = _parse_number(args.x0, args.x0_root5)
        cut = _parse_number(args.cut, args.cut_root5)
        coloring = colorings.rotation_word(alpha, x0, cut, args.n)
    else:
        raise InputError("choose --preset or --kind {frac,block,residue,rotation}")
    if args.format == "text":
        text = coloring.to_text()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    else:
        _emit(args, coloring.to_json())
    return 0


def _cmd_scan(args) -> int:
    coloring = _load_coloring(args)
    spec = _load_spec(args)
    view = spec.enumerate(coloring.n)
    if args.structure == "diffseq":
        result = verify.longest_mono_diffseq(coloring, view)
    elif args.structure == "ap":
        result = verify.longest_mono_ap(coloring, view)
    else:
        result = verify.chromatically_intersective_check(coloring, view)
    _emit(args, result.to_json())
    if args.max_k is not None and result.length > args.max_k:
        return 1
    return 0


def _cmd_delta(args) -> int:
    spec = _load_spec(args)
    view = spec.enumerate(args.budget)
    result = search.delta(view, args.k, args.r, args.budget, threads=args.threads)
    _emit(args, {"set": spec.to_json(), **result.to_json()})
    if args.emit_witness and result.witness is not None:
        with open(args.emit_witness, "w") as fh:
            json.dump(result.witness.to_json(), fh, indent=2)
            fh.write("\n")
    return 0


def _cmd_chromatic(args) -> int:
    spec = _load_spec(args)
    view = spec.enumerate(args.n)
    result = search.chromatic_number_prefix(view, args.n, exact_limit=args.exact_limit)
    _emit(args, {"set": spec.to_json(), **result.to_json()})
    return 0


def _cmd_complexity(args) -> int:
    coloring = _load_coloring(args)
    if args.max_n is None and args.factor_len is None:
        raise InputError("give a factor length (-n) or a range (--max-n)")
    lengths = range(1, args.max_n + 1) if args.max_n else [args.factor_len]
    counts = {str(n): colorings.complexity(coloring, n) for n in lengths}
    _emit(args, {"n": coloring.n, "complexity": counts})
    return 0


def _cmd_pipeline(args) -> int:
    spec = _load_spec(args)
    delta = to_rational(args.delta)
    factor = construct.growth_factor(args.r, delta)
    view = spec.enumerate(args.n)
    need = args.start + args.steps
    bound = args.n
    while len(view) < need:
        bound *= 16
        if bound > 10**40:
            raise InputError(f"set has too few elements for {need} construction steps")
        view = spec.enumerate(bound)
    elements = view.elements
    growth = gapsets.growth_certificate(
        gapsets.GapSetView(elements[: need], elements[need - 1]), factor, start=args.start
    )
    if not growth.passed:
        pair = growth.counterexample["pair"]
        raise InputError(
            f"growth {factor} not satisfied at index {growth.counterexample['index']}: "
            f"{pair[1]} < {factor} * {pair[0]}"
        )
    q = elements[args.start : need]
    alpha_cert = construct.build_alpha(q, args.r, delta, first_gap=elements[0])
    evidence = search.doa_evidence(
        view if view.bound >= args.n else spec.enumerate(args.n),
        alpha_cert.alpha,
        alpha_cert.eps1,
        args.r,
        args.n,
    )
    payload = {
        "growth": growth.to_json(),
        "alpha": alpha_cert.to_json(),
        "evidence": evidence.to_json(),
    }
    _emit(args, payload)
    return 0 if evidence.passed else 1


def _cmd_reproduce(args) -> int:
    report = reproduce.run_reproduce(args.scale)
    print(report.to_table())
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
            fh.write("\n")
    return 0 if report.overall else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffseq",
        description="exact Ramsey-type computations over gap sets of integers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("set", help="enumerate a gap set up to a bound")
    _add_set_flags(p)
    p.add_argument("-N", dest="n", type=int, required=True, help="enumeration bound")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_set)

    p = sub.add_parser("alpha", help="run the nested-interval constructor over a set")
    _add_set_flags(p)
    p.add_argument("-r", type=int, default=2, help="number of color classes")
    p.add_argument("--delta", required=True, help="growth slack, exact rational")
    p.add_argument("--steps", type=int, required=True, help="construction steps")
    p.add_argument("--start", type=int, default=0, help="0-based index of the first gap used")
    p.add_argument("--q-bound", type=int, help="enumerate the set up to this bound")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("color", help="generate and export a coloring")
    p.add_argument("--preset", help=f"one of: {', '.join(colorings.PRESETS)}")
    p.add_argument("--kind", choices=["frac", "block", "residue", "rotation"])
    p.add_argument("--alpha", help="rational part of the rotation/frac angle")
    p.add_argument("--alpha-root5", help="sqrt5 coefficient of the angle")
    p.add_argument("--x0", help="rotation start point, rational part")
    p.add_argument("--x0-root5", help="rotation start point, sqrt5 coefficient")
    p.add_argument("--cut", help="rotation cut, rational part")
    p.add_argument("--cut-root5", help="rotation cut, sqrt5 coefficient")
    p.add_argument("-r", type=int, default=2)
    p.add_argument("-m", type=int, help="block width / residue modulus")
    p.add_argument("-N", dest="n", type=int, required=True)
    p.add_argument("--format", choices=["rle", "text"], default="rle")
    p.add_argument("--out", help="write output here instead of stdout")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("scan", help="longest monochromatic structure in a coloring")
    p.add_argument("--coloring", required=True, help="preset:NAME or a run-length JSON file")
    p.add_argument("-N", dest="n", type=int, help="length when using a preset")
    _add_set_flags(p)
    p.add_argument(
        "--structure", choices=["diffseq", "ap", "pair"], default="diffseq",
        help="chain with gaps in the set, fixed-gap progression, or 2-term check",
    )
    p.add_argument("--max-k", type=int, help="exit 1 if the longest length exceeds this")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("delta", help="least prefix length forcing a monochromatic chain")
    _add_set_flags(p)
    p.add_argument("-k", type=int, required=True, help="chain length to force")
    p.add_argument("-r", type=int, required=True, help="number of colors")
    p.add_argument("--budget", type=int, required=True, help="largest prefix to search")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--emit-witness", metavar="FILE", help="write the avoider coloring here")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("chromatic", help="chromatic bounds of the prefix distance graph")
    _add_set_flags(p)
    p.add_argument("-N", dest="n", type=int, required=True)
    p.add_argument("--exact-limit", type=int, default=40)
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_chromatic)

    p = sub.add_parser("complexity", help="number of distinct length-n factors")
    p.add_argument("--coloring", required=True, help="preset:NAME or a run-length JSON file")
    p.add_argument("-N", dest="n", type=int, help="length when using a preset")
    p.add_argument("-n", dest="factor_len", type=int, help="factor length")
    p.add_argument("--max-n", type=int, help="report all factor lengths 1..MAX_N")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("pipeline", help="growth check, constructor, window certificate, scan")
    _add_set_flags(p)
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--delta", required=True, help="growth slack, exact rational")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("-N", dest="n", type=int, required=True, help="scan length")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("reproduce", help="run the registered claim suite")
    p.add_argument("--scale", choices=["quick", "full"], default="quick")
    p.add_argument("--json-out", metavar="FILE", help="also write the JSON report here")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
