"""Command-line front end: ``ktcodes <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .analysis import check_balanced, is_coset_of_alternating
from .bounds import ball_size, bound_report, cube_vs_ball
from .claims import CLAIMS, UnknownClaim, run_claims
from .code import CodeFormatError, read_code, write_code
from .perm import DegreeMismatch, Permutation, distance, weight
from .puncture import PunctureSet, puncture
from .search import BudgetExhausted, SearchBudget, classify_2_balanced, greedy_gv, max_code, refute_t_balanced

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"4"``, ``"2-6"`` or ``"2,3,7"`` (pieces may be mixed)."""
    out: list[int] = []
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if not piece:
                continue
            lo, sep, hi = piece.partition("-")
            if sep:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(piece))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds, deterministic_seed=args.seed)


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines)


def cmd_distance(args) -> int:
    a, b = _perm(args.a), _perm(args.b)
    try:
        d = distance(a, b)
    except DegreeMismatch as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"a": str(a), "b": str(b), "distance": d}, str(d))
    return EXIT_OK


def cmd_weight(args) -> int:
    a = _perm(args.a)
    w = weight(a)
    _emit(args, {"a": str(a), "weight": w, "parity": "odd" if w % 2 else "even"}, str(w))
    return EXIT_OK


def cmd_puncture(args) -> int:
    a = _perm(args.a)
    try:
        s = PunctureSet.parse(args.set, a.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = puncture(a, s)
    _emit(args, {"a": str(a), "set": str(s), "punctured": str(out)}, str(out))
    return EXIT_OK


def cmd_ball_size(args) -> int:
    if args.n < 1 or args.r < 0:
        raise UsageError("need n >= 1 and r >= 0")
    b = ball_size(args.n, args.r)
    _emit(args, {"n": args.n, "r": args.r, "ball_size": str(b)}, str(b))
    return EXIT_OK


def cmd_bounds(args) -> int:
    if (args.d is None) == (args.t is None):
        raise UsageError("give exactly one of --d or --t")
    rows = []
    cubes = []
    for n in parse_range(args.n):
        for x in parse_range(args.d if args.d is not None else args.t):
            if args.t is not None and 2 <= x <= n:
                cubes.append(cube_vs_ball(n, x))
            try:
                rep = bound_report(n, d=x) if args.d is not None else bound_report(n, t=x)
            except ValueError as exc:
                print(f"skipping n={n}, {'d' if args.d is not None else 't'}={x}: {exc}", file=sys.stderr)
                continue
            rows.append(rep)
    if not rows and not cubes:
        raise UsageError("no valid (n, d) / (n, t) points in the requested ranges")
    if args.format == "json":
        payload = {"rows": [r.to_dict() for r in rows]}
        if args.t is not None:
            payload["cube_vs_ball"] = [c.to_dict() for c in cubes]
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    header = ["n", "d", "t", "sphere_packing", "gv", "averaging", "singleton_case"]
    print(_table(header, [[str(r.n), str(r.d), str(r.t), str(r.sphere_packing), str(r.gilbert_varshamov),
                           str(r.averaging), r.singleton] for r in rows]))
    if cubes:
        print()
        print(_table(["n", "t", "cube", "radius", "ball", "ball(ceil radius)", "larger"],
                     [[str(c.n), str(c.t), str(c.cube), str(c.radius), str(c.ball), str(c.ball_ceil), c.larger]
                      for c in cubes]))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        code = read_code(args.file)
    except (OSError, CodeFormatError) as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    n = code.degree
    ts = [args.t] if args.t is not None else list(range(1, n + 1))
    if any(not 1 <= t <= n for t in ts):
        raise UsageError(f"t must lie in 1..{n}")
    verdicts = [check_balanced(code, t) for t in ts]
    payload = {
        "n": n,
        "size": len(code),
        "min_distance": code.min_distance(),
        "verdicts": [v.to_dict() for v in verdicts],
        "balanced_for": [v.t for v in verdicts if v.is_balanced],
    }
    if len(code) == math.factorial(n) // 2:
        w = is_coset_of_alternating(code)
        payload["alternating_coset_witness"] = None if w is None else str(w)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"n={n} size={len(code)} min_distance={payload['min_distance']}")
        for v in verdicts:
            print(f"t={v.t}: {'balanced' if v.is_balanced else 'not balanced'}"
                  f" (cardinality_ok={v.cardinality_ok}, distance_ok={v.distance_ok})")
        if "alternating_coset_witness" in payload:
            print(f"coset of A_{n}: {payload['alternating_coset_witness']}")
    return EXIT_OK


def _write_out(args, code, comment: str) -> None:
    if getattr(args, "out", None) and code is not None:
        write_code(code, args.out, comment)


def cmd_search(args) -> int:
    if args.kind == "gv":
        try:
            code = greedy_gv(args.n, args.d)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        payload = {"n": args.n, "d": args.d, "size": len(code), "min_distance": code.min_distance(),
                   "words": [str(w) for w in code]}
        _write_out(args, code, f"greedy GV code, n={args.n}, d>={args.d}")
        _emit(args, payload, "\n".join([f"size={len(code)} min_distance={code.min_distance()}"]
                                       + [str(w) for w in code]))
        return EXIT_OK
    try:
        out = max_code(args.n, args.d, _budget(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write_out(args, out.code, f"max_code n={args.n} d>={args.d} status={out.status}")
    _emit(args, out.to_dict(), "\n".join([f"status={out.status} size={out.size} nodes={out.nodes}"]
                                         + [str(w) for w in out.words]))
    return EXIT_OK if out.exact else EXIT_BUDGET


def cmd_classify(args) -> int:
    try:
        codes = classify_2_balanced(args.n, _budget(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except BudgetExhausted:
        print(f"classification of S_{args.n} stopped: search budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    entries = []
    for k, c in enumerate(codes):
        w = is_coset_of_alternating(c)
        entries.append({"size": len(c), "coset_witness": None if w is None else str(w),
                        "words": [str(x) for x in c]})
        if args.out_dir:
            Path(args.out_dir).mkdir(parents=True, exist_ok=True)
            write_code(c, Path(args.out_dir) / f"two_balanced_n{args.n}_{k}.code",
                       f"2-balanced code in S_{args.n}, coset witness {w}")
    payload = {"n": args.n, "count": len(codes), "codes": entries}
    _emit(args, payload, "\n".join([f"{len(codes)} two-balanced codes in S_{args.n}"]
                                   + [f"  coset of A_{args.n} by {e['coset_witness']}" for e in entries]))
    return EXIT_OK


def cmd_refute(args) -> int:
    try:
        out = refute_t_balanced(args.n, args.t, _budget(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, out.to_dict(), f"status={out.status} certificate={out.certificate}")
    if not out.exact:
        return EXIT_BUDGET
    return EXIT_OK if out.certificate else EXIT_CLAIM_FAILED


def cmd_reproduce(args) -> int:
    if args.list:
        for c in CLAIMS.values():
            print(f"{c.id}\t{c.anchor}")
        return EXIT_OK

    def progress(r) -> None:
        print(f"{r.id}: {r.status} ({r.elapsed:.2f}s)", file=sys.stderr)

    try:
        report = run_claims(args.claims, _budget(args), on_result=progress)
    except UnknownClaim as exc:
        raise UsageError(f"unknown claim id(s): {exc.args[0]}") from None
    text = "\n".join(f"{r.status.upper():7s} {r.id}: {r.detail}" for r in report.results)
    _emit(args, report.to_dict(), text)
    return report.exit_status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget-nodes", type=int, default=10**8)
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--strict-determinism", action=argparse.BooleanOptionalAction, default=True,
                        help="searches run sequentially, so output is always deterministic")

    p = argparse.ArgumentParser(prog="ktcodes", description="Permutation codes under the Kendall-tau metric.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("distance", parents=[common], help="Kendall-tau distance of two permutations")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("weight", parents=[common], help="number of inversions")
    s.add_argument("a")
    s.set_defaults(func=cmd_weight)

    s = sub.add_parser("puncture", parents=[common], help="restrict a permutation to a set of positions")
    s.add_argument("a")
    s.add_argument("set", help="comma-separated 1-based positions, e.g. 3,5,6")
    s.set_defaults(func=cmd_puncture)

    s = sub.add_parser("ball-size", parents=[common], help="size of a Kendall-tau ball")
    s.add_argument("n", type=int)
    s.add_argument("r", type=int)
    s.set_defaults(func=cmd_ball_size)

    s = sub.add_parser("bounds", parents=[common], help="cardinality bounds over parameter ranges")
    s.add_argument("--n", required=True, help="e.g. 4 or 3-8")
    s.add_argument("--d", help="minimum distance range")
    s.add_argument("--t", help="balance parameter range (d = C(t,2)+1)")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", parents=[common], help="check a code file for t-balancedness")
    s.add_argument("file")
    s.add_argument("--t", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="construct codes")
    ssub = s.add_subparsers(dest="kind", required=True)
    for kind, hlp in (("gv", "greedy Gilbert-Varshamov code"), ("max-code", "exact maximum code")):
        k = ssub.add_parser(kind, parents=[common], help=hlp)
        k.add_argument("--n", type=int, required=True)
        k.add_argument("--d", type=int, required=True)
        k.add_argument("--out", help="write the code to this file")
        k.set_defaults(func=cmd_search)

    s = sub.add_parser("classify", parents=[common], help="enumerate all 2-balanced codes (n = 3, 4)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("refute", parents=[common], help="exhaustively search for a t-balanced code")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_refute)

    s = sub.add_parser("reproduce", parents=[common], help="run the claim checks")
    s.add_argument("claims", nargs="*", help="claim ids (default: all)")
    s.add_argument("--list", action="store_true", help="list claim ids and exit")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ktcodes {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
