"""Command-line interface.

Exit codes: 0 success, 1 a theorem check failed, 2 bad input, 3 size guard
refused, 4 input outside the regime of the two-column results.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .jumps import (
    JumpError,
    JumpPartition,
    OutOfRegimeError,
    apply,
    decompose_two_column,
    enumerate_jumps,
    is_valid,
)
from .layered import all_minimal, is_minimal, min_inversions, minimal_from_composition
from .oracle import (
    SUITES,
    GuardError,
    check_guard,
    default_cache_dir,
    load_or_sweep,
    restricted_sweep,
    run_suite,
)
from .partitions import parse_shape, shape_key
from .permutations import as_permutation, inversions
from .tableaux import rs

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_GUARD, EXIT_REGIME = 0, 1, 2, 3, 4

SHAPE_HELP = """\
shape grammar:
  shape := item { ("," | " ") item }      e.g. 4,3,1   "4 3 1"   (4,3,1)
  item  := part [ "^" multiplicity ]      e.g. 2^6     3^3,1
"""


class UsageError(ValueError):
    pass


def parse_permutation(text: str | Sequence[str]) -> tuple[int, ...]:
    raw = text if isinstance(text, str) else " ".join(text)
    raw = raw.strip().strip("[]()")
    values = []
    for tok in raw.replace(",", " ").split():
        try:
            values.append(int(tok))
        except ValueError:
            raise UsageError(f"bad permutation token {tok!r}") from None
    try:
        return as_permutation(values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_components(text: str) -> tuple[tuple[int, ...], ...]:
    """``"1,1;2,1;"`` -> ``((1, 1), (2, 1), ())``; components are separated by ``;``."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip().strip("()")
        try:
            out.append(tuple(int(x) for x in chunk.replace(",", " ").split()))
        except ValueError:
            raise UsageError(f"bad jump component {chunk!r}") from None
    return tuple(out)


def _shape(text: str):
    try:
        return parse_shape(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args: argparse.Namespace, payload: dict, text: str, csv_text: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    elif args.format == "csv" and csv_text is not None:
        print(csv_text, end="")
    else:
        print(text)


def _rows(t) -> str:
    return " / ".join(" ".join(map(str, row)) for row in t)


def cmd_rs(args: argparse.Namespace) -> int:
    perm = parse_permutation(args.permutation)
    pair = rs(perm)
    sh = pair.shape
    inv = inversions(perm)
    blocks = is_minimal(perm)
    payload = {
        "permutation": list(perm),
        "P": [list(r) for r in pair.insertion],
        "Q": [list(r) for r in pair.recording],
        "shape": list(sh),
        "inversions": inv,
        "delta": inv - min_inversions(sh),
        "layered_blocks": list(blocks) if blocks else None,
    }
    text = "\n".join([
        f"P: {_rows(pair.insertion)}",
        f"Q: {_rows(pair.recording)}",
        f"shape: ({shape_key(sh).replace('.', ',')})",
        f"inversions: {inv}",
        f"delta: {payload['delta']}",
        f"layered blocks: {'(' + ','.join(map(str, blocks)) + ')' if blocks else '-'}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_minimal(args: argparse.Namespace) -> int:
    sh = _shape(args.shape)
    if not sh:
        raise UsageError("shape must be non-empty")
    items = all_minimal(sh)
    payload = {"shape": list(sh), "min_inversions": min_inversions(sh),
               "minimal": [{"composition": list(c), "permutation": list(p)} for c, p in items]}
    lines = [f"{len(items)} minimal permutations, {min_inversions(sh)} inversions each"]
    lines += [f"c=({','.join(map(str, c))})  {' '.join(map(str, p))}" for c, p in items]
    csv_text = "composition,permutation\n" + "".join(
        f"{'.'.join(map(str, c))},{' '.join(map(str, p))}\n" for c, p in items)
    _emit(args, payload, "\n".join(lines), csv_text)
    return EXIT_OK


def cmd_jumps(args: argparse.Namespace) -> int:
    sh = _shape(args.shape)
    if not sh:
        raise UsageError("shape must be non-empty")
    if args.delta is None and args.delta_max is None:
        raise UsageError("jumps needs --delta or --delta-max")
    deltas = [args.delta] if args.delta is not None else list(range(args.delta_max + 1))
    entries = []
    for d in deltas:
        for c, pi in all_minimal(sh):
            for jp in enumerate_jumps(c, d):
                sigma = apply(jp, pi)
                entries.append({"delta": d, "minimal": list(pi), "jump": jp.to_json(),
                                "result": list(sigma), "valid": is_valid(jp, pi)})
    payload = {"shape": list(sh), "jumps": entries}
    lines = [f"{len(entries)} jump partitions"]
    for e in entries:
        jp = JumpPartition.from_json(e["jump"])
        lines.append(f"delta={e['delta']} c=({','.join(map(str, jp.composition))}) {jp} -> "
                     f"{' '.join(map(str, e['result']))}{'' if e['valid'] else '  [shape changes]'}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_apply(args: argparse.Namespace) -> int:
    if args.jump:
        try:
            jp = JumpPartition.from_json(json.loads(args.jump))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad jump JSON: {exc}") from None
    else:
        if not args.composition:
            raise UsageError("apply needs --jump JSON or --composition with --inner/--outer")
        comp = tuple(int(x) for x in args.composition.replace(",", " ").split())
        k = len(comp) - 1
        inner = parse_components(args.inner) if args.inner else ((),) * k
        outer = parse_components(args.outer) if args.outer else ((),) * k
        jp = JumpPartition(comp, inner, outer)
    pi = minimal_from_composition(jp.composition)
    sigma = apply(jp, pi)
    payload = {"minimal": list(pi), "jump": jp.to_json(), "size": jp.size, "result": list(sigma),
               "valid": is_valid(jp, pi)}
    text = "\n".join([f"minimal: {' '.join(map(str, pi))}", f"jump: {jp} (size {jp.size})",
                      f"result: {' '.join(map(str, sigma))}", f"shape preserved: {payload['valid']}"])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    sigma = parse_permutation(args.permutation)
    try:
        pi, jp = decompose_two_column(sigma)
    except OutOfRegimeError as exc:
        print(f"shapeinv: {exc}", file=sys.stderr)
        return EXIT_REGIME
    payload = {"permutation": list(sigma), "minimal": list(pi), "jump": jp.to_json(), "delta": jp.size}
    text = "\n".join([f"minimal: {' '.join(map(str, pi))}", f"jump: {jp}", f"delta: {jp.size}"])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    n = _require_n(args)
    check_guard(n, allow_large=args.allow_large_n)
    table = load_or_sweep(n, args.cache_dir, workers=args.workers, allow_large=args.allow_large_n)
    lines = [f"{shape_key(sh)}\t{d}\t{c}" for sh, d, c in table.rows()]
    _emit(args, table.to_json(), "\n".join(["shape\tdelta\tcount", *lines]), table.to_csv())
    return EXIT_OK


def cmd_class(args: argparse.Namespace) -> int:
    sh = _shape(args.shape)
    hist = restricted_sweep(sh, mode=args.mode)
    if args.delta_max is not None:
        hist = {d: c for d, c in hist.items() if d <= args.delta_max}
    payload = {"shape": list(sh), "counts": [{"delta": d, "count": str(c)} for d, c in hist.items()]}
    csv_text = "delta,count\n" + "".join(f"{d},{c}\n" for d, c in hist.items())
    _emit(args, payload, "\n".join(f"delta={d}\t{c}" for d, c in hist.items()), csv_text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    n = _require_n(args)
    args.suite = args.suite or args.suite_pos or "all"
    check_guard(n, allow_large=args.allow_large_n)
    table = None
    if args.suite != "structure":
        table = load_or_sweep(n, args.cache_dir, workers=args.workers, allow_large=args.allow_large_n)
    reports = run_suite(args.suite, n, table=table, allow_large=args.allow_large_n)
    ok = all(r.ok for r in reports)
    payload = {"n": n, "suite": args.suite, "ok": ok, "reports": [r.to_json() for r in reports]}
    cache = Path(args.cache_dir)
    cache.mkdir(parents=True, exist_ok=True)
    out = cache / f"report_n{n}_{args.suite}.json"
    out.write_text(json.dumps(payload, indent=1) + "\n")
    text = "\n".join([r.to_text() for r in reports] + [f"report: {out}", "PASS" if ok else "FAIL"])
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_VIOLATION


def _require_n(args: argparse.Namespace) -> int:
    n = args.n if args.n is not None else args.n_pos
    if n is None:
        raise UsageError("--n is required")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help="where tables and reports live (default: $SHAPEINV_CACHE_DIR or ~/.cache/shapeinv)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--allow-large-n", action="store_true", help="lift the default n <= 11 sweep guard")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="shapeinv", description=__doc__.splitlines()[0],
                                     epilog=SHAPE_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, epilog=SHAPE_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=func)
        return p

    p = add("rs", cmd_rs, "RS tableaux, shape, inversions and excess of a permutation")
    p.add_argument("permutation", nargs="+", help='one-line notation, e.g. "3 1 2"')

    p = add("minimal", cmd_minimal, "all minimal (layered) permutations of a shape")
    p.add_argument("--shape", required=True)

    p = add("jumps", cmd_jumps, "jump partitions of a given size and their action on each minimal permutation")
    p.add_argument("--shape", required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--delta-max", type=int)

    p = add("apply", cmd_apply, "apply a jump partition to the minimal permutation of a composition")
    p.add_argument("--jump", help='JSON {"composition": [...], "inner": [[...],...], "outer": [[...],...]}')
    p.add_argument("--composition", help="block lengths, e.g. 3,4,3")
    p.add_argument("--inner", help='components separated by ";", rows by ",", e.g. ";1,1"')
    p.add_argument("--outer", help='same syntax as --inner, e.g. "2;"')

    p = add("decompose", cmd_decompose, "split a two-column permutation into minimal permutation and jump partition")
    p.add_argument("permutation", nargs="+")

    p = add("sweep", cmd_sweep, "tabulate S_n by shape and excess (cached)")
    p.add_argument("n_pos", nargs="?", type=int, metavar="N")
    p.add_argument("--n", type=int)

    p = add("class", cmd_class, "excess distribution of one shape class without a full sweep")
    p.add_argument("--shape", required=True)
    p.add_argument("--mode", choices=("closure", "filter"), default="closure")
    p.add_argument("--delta-max", type=int)

    p = add("verify", cmd_verify, "check the counting results against an exhaustive sweep")
    p.add_argument("n_pos", nargs="?", type=int, metavar="N")
    p.add_argument("--n", type=int)
    p.add_argument("suite_pos", nargs="?", choices=(*SUITES, "all"), metavar="SUITE")
    p.add_argument("--suite", choices=(*SUITES, "all"))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.cache_dir is None:
        args.cache_dir = default_cache_dir()
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"shapeinv: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, JumpError, ValueError) as exc:
        print(f"shapeinv: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
