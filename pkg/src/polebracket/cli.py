"""Command line front end.

One computation per invocation: surface report, state dump, bracket values,
move rewriting, random diagram generation, or the verification battery.
Input codes come from --input as a file path, "-" for stdin, or inline .tgc
text (";" separates components inline).  Output is byte-deterministic for
fixed inputs, seed, and worker count.

Exit codes: 0 success, 1 usage, 2 input parse/validation, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .brackets import double_bracket, normalized, surface_pole_bracket
from .codes import CodeError, parse_code, random_diagram, serialize
from .moves import MoveError, MoveSpec, apply_move
from .states import enumerate_states, state_report
from .surfaces import build_ribbon, cap_boundaries
from .verify import run_battery

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3

_STATE_GUARD = 24  # default refusal bound for 2^c state sums


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here reserves 2 for
    # input parsing, so usage problems exit 1 instead
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p: _Parser) -> None:
    p.add_argument("--input", "-i", help=".tgc path, '-' for stdin, or inline code")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument(
        "--max-crossings",
        type=int,
        default=_STATE_GUARD,
        help=f"refuse state sums beyond this many crossings (default {_STATE_GUARD})",
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--dump", action="store_true", help="full per-curve detail in state dumps")


def build_parser() -> _Parser:
    top = _Parser(prog="polebracket", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)
    for name, blurb in (
        ("info", "closed-surface report of the code's realization"),
        ("states", "dump all splice states with curve classifications"),
        ("bracket", "surface pole bracket, one coefficient per curve class"),
        ("dbracket", "double bracket in A, M, d_i"),
        ("invariant", "normalized invariant R = (-A)^(-3w) * double bracket"),
        ("move", "apply one extended Reidemeister move and print the code"),
        ("check", "run the verification battery (corpus properties)"),
        ("random", "emit seeded random diagrams"),
    ):
        p = sub.add_parser(name, help=blurb)
        _add_common(p)
        if name == "move":
            p.add_argument("--kind", required=True, choices=["R1+", "R1-", "R2", "R3", "T1", "T2", "T3"])
            p.add_argument("--dir", required=True, choices=["insert", "delete", "rewrite"])
            p.add_argument("--site", default="", help="comma-separated integers")
            p.add_argument("--variant", type=int, default=0)
    return top


def _read_code(args, err):
    if not args.input:
        err(EXIT_USAGE, "an input code is required (--input)")
    src = args.input
    if src == "-":
        text = sys.stdin.read()
    elif os.path.exists(src):
        with open(src, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = src.replace(";", "\n")
    try:
        return parse_code(text)
    except CodeError as e:
        err(EXIT_PARSE, str(e))


def _guard(code, args, err):
    c = len(code.crossing_ids)
    if c > args.max_crossings:
        err(
            EXIT_USAGE,
            f"{c} crossings means 2^{c} states; raise --max-crossings to force this",
        )


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _poly_out(value, as_json: bool) -> None:
    if as_json:
        _emit_json(value.to_json_terms())
    else:
        print(value.to_text())


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    def err(code_num, message):
        print(f"polebracket: {message}", file=sys.stderr)
        raise SystemExit(code_num)

    cmd = args.command

    if cmd == "random":
        rng = random.Random(args.seed)
        chunks = []
        for i in range(args.count):
            c = rng.randrange(0, min(8, args.max_crossings) + 1)
            b = rng.randrange(0, 5)
            k = 2 if rng.randrange(4) == 0 and 2 * c + b >= 2 else 1
            chunks.append(serialize(random_diagram(args.seed * 100003 + i, c, b, components=k)))
        print("\n".join(chunks), end="")
        return 0

    if cmd == "check":
        results = run_battery(args.seed, args.count)
        failed = False
        for label, checked, bad in results:
            ok = not bad
            failed = failed or not ok
            print(f"{'PASS' if ok else 'FAIL'}  {label} ({checked} checked, {len(bad)} failures)")
        if failed:
            return EXIT_VERIFY
        print("all checks passed")
        return 0

    code = _read_code(args, err)

    if cmd == "move":
        try:
            site = tuple(int(x) for x in args.site.split(",")) if args.site else ()
        except ValueError:
            err(EXIT_USAGE, f"bad --site {args.site!r}")
        try:
            moved = apply_move(code, MoveSpec(args.kind, args.dir, site, args.variant))
        except MoveError as e:
            err(EXIT_PARSE, f"move rejected: {e}")
        print(serialize(moved), end="")
        return 0

    if cmd == "info":
        F = cap_boundaries(build_ribbon(code))
        rep = F.report()
        if args.json:
            _emit_json(rep)
        else:
            print(f"euler {rep['euler']}")
            print(f"orientable {str(rep['orientable']).lower()}")
            print(f"h1_rank {rep['h1_rank']}")
            for p in rep["pieces"]:
                kind = f"genus {p['genus']}" if p["orientable"] else f"crosscaps {p['crosscaps']}"
                print(f"piece orientable={str(p['orientable']).lower()} {kind}")
        return 0

    _guard(code, args, err)

    if cmd == "states":
        F = cap_boundaries(build_ribbon(code))
        reports = [state_report(F, s) for s in enumerate_states(code, F)]
        if args.json:
            _emit_json(reports)
        else:
            for r in reports:
                curves = r["curves"]
                if args.dump:
                    detail = " ".join(
                        f"[poles={c['poles']} idx={c['index']} iness={int(c['inessential'])}"
                        f" sep={int(c['separating'])} mob={int(c['mobius'])}"
                        f" hom={''.join(map(str, c['hom']))}]"
                        for c in curves
                    )
                else:
                    detail = (
                        f"curves={len(curves)}"
                        f" iness={sum(1 for c in curves if c['inessential'])}"
                        f" idx={sorted(c['index'] for c in curves)}"
                    )
                print(f"state {r['mask']:>4} natural {r['natural']:>3} {detail}")
        return 0

    if cmd == "bracket":
        value = surface_pole_bracket(code, workers=args.workers)
        if args.json:
            _emit_json(value.to_json())
        else:
            print(value.to_text())
        return 0

    if cmd == "dbracket":
        _poly_out(double_bracket(code, workers=args.workers), args.json)
        return 0

    if cmd == "invariant":
        _poly_out(normalized(code, workers=args.workers), args.json)
        return 0

    raise AssertionError(f"unhandled command {cmd}")


if __name__ == "__main__":
    sys.exit(main())
