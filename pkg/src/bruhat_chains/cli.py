"""
Command line front end.

    bruhat-chains covers 132 --stats
    bruhat-chains schubert 132 --padded
    bruhat-chains chains e w0 --weights code --n 4
    bruhat-chains monk 132 --m 1
    bruhat-chains verify all --n 3 --format json

Exit status is 0 when every check passes, 1 when some check fails and 2 on
invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .bruhat import BruhatError, covers_up, verify_symmetries
from .chainsum import chain_count, preset, verify_example_15, verify_theorem
from .operator_verify import verify_lemma
from .permcore import MAX_N, Permutation, identity, longest_element
from .report import Report
from .schubert import (expansion_to_json, format_expansion, monk_product,
                       padded_schubert, principal_specialization, schubert,
                       verify_macdonald, verify_monk, verify_padded_delta)

# target -> (runner, largest n it is run at)
TARGETS = {
    "thm12": (lambda n: verify_theorem("thm12", n), 6),
    "thm13": (lambda n: verify_theorem("thm13", n), 6),
    "thm14": (lambda n: verify_theorem("thm14", n), 6),
    "ex15": (verify_example_15, 6),
    "prop21": (verify_symmetries, 6),
    "prop22": (verify_padded_delta, 5),
    "prop23": (verify_monk, 5),
    "prop24": (verify_macdonald, 5),
    "lem31": (lambda n: verify_lemma("L31", n), 5),
    "lem32": (lambda n: verify_lemma("L32", n), 4),
    "lem33": (lambda n: verify_lemma("L33", n), 4),
    "lem34": (lambda n: verify_lemma("L34", n), 4),
    "lem41": (lambda n: verify_lemma("L41", n), 5),
}
MIN_N = 2


class UsageError(Exception):
    pass


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BRUHAT_THREADS", "1")))
    except ValueError:
        return 1


def parse_perm(text: str, n: int | None) -> Permutation:
    if text in ("e", "id"):
        return identity(n or 3)
    if text == "w0":
        return longest_element(n or 3)
    try:
        w = Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if n is not None and w.n != n:
        raise UsageError(f"{text} has size {w.n} but --n is {n}")
    return w


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_covers(args) -> int:
    w = parse_perm(args.perm, args.n)
    covers = covers_up(w)
    if args.format == "json":
        text = json.dumps([c.to_json() for c in covers], indent=2)
    elif args.format == "tsv":
        rows = ["lower\tupper\ti\tj\ta\tb\tc\td"]
        rows += [f"{c.lower}\t{c.upper}\t{c.i}\t{c.j}\t{c.a}\t{c.b}\t{c.c}\t{c.d}" for c in covers]
        text = "\n".join(rows)
    else:
        lines = []
        for c in covers:
            line = f"{c.lower} -> {c.upper}  t({c.i},{c.j})"
            if args.stats:
                line += f"  a={c.a} b={c.b} c={c.c} d={c.d}"
            lines.append(line)
        text = "\n".join(lines) if lines else f"(no covers above {w})"
    _emit(text, args.out)
    return 0


def _cmd_schubert(args) -> int:
    w = parse_perm(args.perm, args.n)
    if args.spec1:
        value, kind = principal_specialization(w), "spec1"
        poly = None
    else:
        poly = padded_schubert(w) if args.padded else schubert(w)
        value, kind = poly, "padded" if args.padded else "schubert"
    if args.format == "json":
        payload = {"perm": str(w), "kind": kind, "value": str(value)}
        if poly is not None:
            payload["poly"] = poly.to_json()
        text = json.dumps(payload, indent=2)
    elif args.format == "tsv":
        text = f"perm\tkind\tvalue\n{w}\t{kind}\t{value}"
    else:
        text = str(value)
    _emit(text, args.out)
    return 0


def _cmd_chains(args) -> int:
    v = parse_perm(args.lower, args.n)
    w = parse_perm(args.upper, args.n if args.n else v.n)
    if v.n != w.n:
        raise UsageError("endpoints have different sizes")
    try:
        spec = preset(args.weights)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    value = chain_count(spec, v, w)
    if args.format == "json":
        text = json.dumps({"weights": args.weights, "lower": str(v), "upper": str(w),
                           "value": str(value), "poly": value.to_json()}, indent=2)
    elif args.format == "tsv":
        text = f"weights\tlower\tupper\tvalue\n{args.weights}\t{v}\t{w}\t{value}"
    else:
        text = str(value)
    _emit(text, args.out)
    return 0


def _cmd_monk(args) -> int:
    w = parse_perm(args.perm, args.n)
    try:
        expansion = monk_product(w, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = json.dumps(expansion_to_json(expansion), indent=2)
    else:
        text = format_expansion(expansion)
    _emit(text, args.out)
    return 0


def run_verify(target: str, sizes: list[int]) -> list[Report]:
    names = list(TARGETS) if target == "all" else [target]
    jobs = []
    for n in sizes:
        for name in names:
            runner, top = TARGETS[name]
            if n > top:
                if target != "all":
                    raise UsageError(f"{name} runs only for n <= {top}")
                continue
            jobs.append((name, n, runner))
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        reports = list(pool.map(lambda job: job[2](job[1]), jobs))
    for (name, _, _), rep in zip(jobs, reports):
        rep.name = name
    return reports


def _cmd_verify(args) -> int:
    start = args.n or 3
    stop = args.max_n or start
    if not MIN_N <= start <= stop <= MAX_N:
        raise UsageError(f"need {MIN_N} <= n <= max-n <= {MAX_N}")
    reports = run_verify(args.target, list(range(start, stop + 1)))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = json.dumps({"target": args.target, "pass": ok,
                           "reports": [r.to_dict() for r in reports]}, indent=2)
    elif args.format == "tsv":
        rows = ["report\tn\tid\tpass\tdetail"]
        for r in reports:
            rows.extend(r.to_tsv().splitlines()[1:])
        text = "\n".join(rows)
    else:
        text = "\n".join(r.to_text() for r in reports)
        text += f"\n{'ALL PASS' if ok else 'FAILURES'}: {sum(len(r.cases) for r in reports)} checks"
    _emit(text, args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="size of the symmetric group (default 3 for e/w0)")
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--out", default=None, help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="bruhat-chains", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("covers", parents=[common], help="covers of a permutation")
    p.add_argument("perm")
    p.add_argument("--stats", action="store_true", help="show the a, b, c, d statistics")
    p.set_defaults(func=_cmd_covers)

    p = sub.add_parser("schubert", parents=[common], help="Schubert polynomial of a permutation")
    p.add_argument("perm")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--padded", action="store_true")
    mode.add_argument("--spec1", action="store_true", help="value at x = (1, ..., 1)")
    p.set_defaults(func=_cmd_schubert)

    p = sub.add_parser("chains", parents=[common], help="weighted count of saturated chains")
    p.add_argument("lower")
    p.add_argument("upper")
    p.add_argument("--weights", default="code",
                   help="code | chevalley | thm13 | thm14 | thm12:XY[:flip]")
    p.set_defaults(func=_cmd_chains)

    p = sub.add_parser("monk", parents=[common], help="(x_1 + ... + x_m) S_w in the Schubert basis")
    p.add_argument("perm")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_monk)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("target", choices=sorted(TARGETS) + ["all"])
    p.add_argument("--max-n", type=int, default=None, help="sweep n from --n (default 3) up to this value")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and not MIN_N - 1 <= args.n <= MAX_N:
        parser.error(f"--n must lie in 1..{MAX_N}")
    try:
        return args.func(args)
    except (UsageError, BruhatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
