"""Command line entry point: ``footrule <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from footrule.bijections import Parity, segment_map, verify_theorem
from footrule.config import DEFAULT_CAPS
from footrule.dumont import DumontKind, enumerate_dumont, genocchi_label, genocchi_value
from footrule.errors import FootruleError, SizeTooLarge
from footrule.metric import Backend, count_segment, distance, enumerate_segment
from footrule.perm import format_perm, make_wn, parse
from footrule.search import max_segment_search

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line.rstrip())


def _sequence_label(n: int) -> str:
    m, odd = divmod(n, 2)
    kind = DumontKind.FIRST if odd else DumontKind.SECOND
    return genocchi_label(kind, 2 * m + 2)


def cmd_dist(args) -> int:
    u, v = parse(args.u), parse(args.v)
    d = distance(u, v)
    _emit(args, {"command": "dist", "u": list(u.word), "v": list(v.word), "distance": d}, [str(d)])
    return EXIT_OK


def cmd_segment(args) -> int:
    u = parse(args.u)
    if args.list:
        perms = enumerate_segment(u, cap=args.max_n or DEFAULT_CAPS.enumeration)
        payload = {
            "command": "segment",
            "u": list(u.word),
            "count": len(perms),
            "permutations": [list(p.word) for p in perms],
        }
        _emit(args, payload, [format_perm(p) for p in perms])
    else:
        res = count_segment(u, args.backend, cap=args.max_n)
        payload = {"command": "segment", "u": list(u.word), "backend": res.backend.value, "count": res.count}
        _emit(args, payload, [str(res.count)])
    return EXIT_OK


def cmd_sequence(args) -> int:
    cap = args.max_n or DEFAULT_CAPS.bitmask_dp
    if args.n_max > cap:
        raise SizeTooLarge(f"sequence is capped at n={cap}, got {args.n_max}")
    rows = []
    for n in range(1, args.n_max + 1):
        wn = make_wn(n)
        rows.append(
            {"n": n, "w_n": list(wn.word), "count": count_segment(wn, cap=cap).count, "genocchi": _sequence_label(n)}
        )
    lines = [f"{r['n']}\t{' '.join(map(str, r['w_n']))}\t{r['count']}\t{r['genocchi']}" for r in rows]
    _emit(args, {"command": "sequence", "rows": rows}, lines)
    return EXIT_OK


def cmd_dumont(args) -> int:
    kind = DumontKind(args.kind)
    cap = args.max_n or DEFAULT_CAPS.dumont
    payload = {
        "command": "dumont",
        "kind": kind.value,
        "size": args.size,
        "genocchi": genocchi_label(kind, args.size) if args.size > 0 else "",
    }
    if args.list:
        perms = enumerate_dumont(kind, args.size, cap=cap)
        payload.update(count=len(perms), permutations=[list(p.word) for p in perms])
        _emit(args, payload, [format_perm(p) for p in perms])
    else:
        count = genocchi_value(kind, args.size, cap=cap)
        payload["count"] = count
        _emit(args, payload, [str(count)])
    return EXIT_OK


def cmd_map(args) -> int:
    u = parse(args.u)
    image = segment_map(u)
    payload = {"command": "map", "u": list(u.word), "map": "g" if u.n % 2 else "h", "image": list(image.word)}
    _emit(args, payload, [format_perm(image)])
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_theorem(args.parity, args.m, budget=args.budget, jobs=args.jobs)
    d = report.to_dict()
    d.pop("elapsed")
    d["command"] = "verify"
    cls = f"{'C' if report.parity == 'even' else 'B'}_{2 * report.m + 2}"
    lines = [
        f"{'PASS' if report.passed else 'FAIL'} {report.parity} m={report.m} n={report.n}",
        f"checked {report.checked} permutations",
        f"segment [id, w_{report.n}] has {report.segment_size} elements",
        f"image of segment {'equals' if report.image_equals_class else 'differs from'} {cls} "
        f"({report.class_size} elements)",
        f"equivalence {'holds' if report.equivalence_holds else 'fails'}, "
        f"map is {'injective' if report.injective else 'not injective'}",
    ]
    lines += [f"counterexample u={c.u} in_segment={c.in_segment} image={c.image} in_class={c.in_class}"
              for c in report.counterexamples]
    _emit(args, d, lines)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_search(args) -> int:
    report = max_segment_search(
        args.n, cap=args.max_n or DEFAULT_CAPS.search, allow_large=args.allow_large, jobs=args.jobs
    )
    d = report.to_dict()
    d.pop("elapsed")
    d["command"] = "search"
    lines = [
        f"n={report.n} max={report.max_cardinality} argmax={len(report.argmax)} "
        f"wn_is_argmax={str(report.wn_is_argmax).lower()}"
    ] + [format_perm(p) for p in report.argmax]
    _emit(args, d, lines)
    return EXIT_OK if report.wn_is_argmax else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    parser = argparse.ArgumentParser(prog="footrule", description="l1 segments of permutations and Genocchi numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[common], help="l1 distance between two permutations")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("segment", parents=[common], help="count or list [id, u]")
    p.add_argument("u")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the cardinality (default)")
    mode.add_argument("--list", action="store_true", help="print every member, lexicographically")
    p.add_argument("--backend", choices=["dp", "bt"], default="dp")
    p.add_argument("--max-n", type=int, default=None, help="override the size cap")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("sequence", parents=[common], help="#[id, w_n] for n = 1..N")
    p.add_argument("n_max", type=int)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("dumont", parents=[common], help="Dumont permutations of the first or second kind")
    p.add_argument("kind", choices=["first", "second"])
    p.add_argument("size", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_dumont)

    p = sub.add_parser("map", parents=[common], help="apply g (odd n) or h (even n)")
    p.add_argument("u")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", parents=[common], help="check a bijection over all of S_n")
    p.add_argument("parity", choices=[x.value for x in Parity])
    p.add_argument("m", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_CAPS.verify_budget, help="maximum n! to enumerate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="exhaustive maximal-segment search over S_n")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--allow-large", action="store_true", help=f"permit n up to {DEFAULT_CAPS.search_override}")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeTooLarge as exc:
        print(f"footrule: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FootruleError as exc:
        print(f"footrule: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
