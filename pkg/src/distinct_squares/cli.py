"""Command-line front end: ``distinct-squares COMMAND [INPUT] [options]``.

Every command reads raw bytes from a file (or standard input when INPUT is
omitted or ``-``) and writes tab-separated records with 1-based positions.
``--json`` switches to JSON; ``decorate`` and ``mast`` also accept ``--dot``.
Exit status is 0 on success, 1 when ``verify`` finds a mismatch and 2 for
usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from collections import defaultdict
from typing import Sequence

from .mast import MastScan, apply_splits
from .pipeline import Analysis, analyze
from .squares import brute_force_distinct_squares, build_position_lists
from .suffix import lcp_values
from .sufftree import decorate_with_squares
from .text import SentinelError, Text, prepare_text

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

LETTERS = "abcdefghijklmnopqrstuvwxyz"
STAGES = ("suffix_array", "plcp", "lce", "lce_backward", "suffix_tree", "lpf", "lz", "squares")


class InputError(Exception):
    pass


def read_input(path: str, raw: bool) -> Text:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if not raw:
        # one trailing line terminator is almost always an editor artefact
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    try:
        return prepare_text(data)
    except SentinelError as exc:
        raise InputError(str(exc)) from exc


def _tsv(rows) -> str:
    return "".join("\t".join(str(x) for x in row) + "\n" for row in rows)


def _json(obj) -> str:
    return json.dumps(obj) + "\n"


def _pairs(rows, keys: Sequence[str]):
    return [dict(zip(keys, row)) for row in rows]


# -- commands ---------------------------------------------------------------

def cmd_sa(args, a: Analysis) -> str:
    values = a.sa.to_list()
    return _json(values) if args.json else _tsv((v,) for v in values)


def cmd_lcp(args, a: Analysis) -> str:
    values = lcp_values(a.plcp, a.sa).tolist()
    return _json(values) if args.json else _tsv((v,) for v in values)


def cmd_lpf(args, a: Analysis) -> str:
    values = a.lpf.to_list()
    return _json(values) if args.json else _tsv((v,) for v in values)


def cmd_lz(args, a: Analysis) -> str:
    rows = list(zip(a.lz.starts, a.lz.lengths()))
    return _json(_pairs(rows, ("start", "length"))) if args.json else _tsv(rows)


def cmd_squares(args, a: Analysis) -> str:
    rows = [tuple(sq) for sq in a.squares]
    return _json(_pairs(rows, ("start", "length"))) if args.json else _tsv(rows)


def _decorations(a: Analysis):
    return decorate_with_squares(a.tree, build_position_lists(a.squares, a.text.n))


def cmd_decorate(args, a: Analysis) -> str:
    entries = _decorations(a)
    if args.dot:
        notes = defaultdict(list)
        for e in entries:
            notes[e.node].append(str(e.length))
        return a.tree.to_dot({v: "sq " + ",".join(ls) for v, ls in notes.items()})
    rows = [(e.node, a.tree.depth[e.node], e.length) for e in entries]
    return _json(_pairs(rows, ("node", "depth", "length"))) if args.json else _tsv(rows)


def cmd_mast(args, a: Analysis) -> str:
    splits = MastScan(a.tree).run(_decorations(a))
    if args.dot:
        grown = apply_splits(a.tree, splits)
        fresh = range(len(a.tree), len(grown))
        return grown.to_dot({v: "new" for v in fresh})
    rows = [(s.node, a.tree.depth[s.node] - s.suffix_len) for s in splits]
    return _json(_pairs(rows, ("node", "depth"))) if args.json else _tsv(rows)


def stats_report(a: Analysis) -> dict:
    lcp = lcp_values(a.plcp, a.sa)
    lengths = a.lz.lengths()
    adjacent = [x + y for x, y in zip(lengths, lengths[1:])]
    return {
        "n": a.text.n,
        "sigma": a.text.sigma,
        "max_lcp": int(lcp.max()),
        "avg_lcp": round(float(lcp.mean()), 4),
        "z": a.lz.z,
        "max_factor_len": max(lengths),
        "max_adjacent_factor_len": max(adjacent, default=lengths[0]),
        "occ": len(a.squares),
        "elapsed_ms": round(sum(a.timings.values()), 3),
    }


def cmd_stats(args, a: Analysis) -> str:
    report = stats_report(a)
    if args.no_timing:
        del report["elapsed_ms"]
    if args.figure:
        from .plotting import lpf_figure

        lpf_figure(a.lpf.to_list(), a.lz.starts, [tuple(s) for s in a.squares], args.figure)
    return _json(report) if args.json else _tsv(report.items())


def random_text(rng: random.Random, sigma: int, length: int) -> str:
    return "".join(rng.choice(LETTERS[:sigma]) for _ in range(length))


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    sizes = [int(s) for s in args.alphabets.split(",")]
    if any(not 1 <= s <= len(LETTERS) for s in sizes):
        raise InputError(f"alphabet sizes must lie in 1..{len(LETTERS)}")
    mismatches = 0
    for case in range(args.count):
        sigma = sizes[case % len(sizes)]
        body = random_text(rng, sigma, rng.randint(1, args.max_len))
        t = prepare_text(body)
        got = analyze(t).squares
        want = brute_force_distinct_squares(t)
        if got != want:
            mismatches += 1
            if mismatches == 1:
                print(f"mismatch on case {case} (sigma={sigma}, n={t.n}): {body}", file=sys.stderr)
    rows = [("cases", args.count), ("mismatches", mismatches)]
    sys.stdout.write(_json(dict(rows)) if args.json else _tsv(rows))
    return EXIT_MISMATCH if mismatches else EXIT_OK


def bench_text(family: str, n: int, rng: random.Random) -> str:
    if family == "a":
        return "a" * n
    if family == "ab":
        return "ab" * (n // 2)
    if family == "random":
        return random_text(rng, 2, n)
    raise InputError(f"unknown family {family!r}")


def run_bench(families: Sequence[str], exponents: Sequence[int], repeat: int, seed: int) -> list[dict]:
    """Time the full pipeline on doubling inputs; keep the fastest of ``repeat`` runs."""
    rows = []
    for family in families:
        for e in exponents:
            body = bench_text(family, 1 << e, random.Random(seed + e))
            t = prepare_text(body)
            best = None
            for _ in range(repeat):
                start = time.perf_counter()
                a = analyze(t)
                total = (time.perf_counter() - start) * 1000.0
                if best is None or total < best[0]:
                    best = (total, a.timings, a.finder.probes, len(a.squares))
                del a
            total, timings, probes, occ = best
            row = {"family": family, "n": 1 << e, "occ": occ, "probes": probes}
            row.update({k: round(timings[k], 3) for k in STAGES})
            row["total_ms"] = round(total, 3)
            rows.append(row)
    return rows


def cmd_bench(args) -> int:
    families = args.families.split(",")
    exponents = range(args.min_exp, args.max_exp + 1)
    if not len(exponents):
        raise InputError("--min-exp must not exceed --max-exp")
    rows = run_bench(families, exponents, args.repeat, args.seed)
    if args.figure:
        from .plotting import scaling_figure

        scaling_figure(rows, args.figure)
    if args.json:
        sys.stdout.write(_json(rows))
    else:
        header = list(rows[0])
        sys.stdout.write(_tsv([header] + [[r[k] for k in header] for r in rows]))
    return EXIT_OK


PIPELINE_COMMANDS = {
    "sa": (cmd_sa, "suffix array"),
    "lcp": (cmd_lcp, "LCP array in suffix-array order"),
    "lpf": (cmd_lpf, "longest previous factor array"),
    "lz": (cmd_lz, "Lempel-Ziv factors as start and length"),
    "squares": (cmd_squares, "leftmost occurrence of every distinct square"),
    "decorate": (cmd_decorate, "suffix-tree nodes decorated with square lengths"),
    "mast": (cmd_mast, "edge splits that turn the suffix tree into the MAST topology"),
    "stats": (cmd_stats, "summary statistics of the text and the scan"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distinct-squares",
        description="Distinct squares, LPF, LZ factorization and MAST topology of a text.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?", default="-", help="input file (default: standard input)")
    source.add_argument("--raw", action="store_true", help="keep a trailing newline as part of the text")

    for name, (_, summary) in PIPELINE_COMMANDS.items():
        p = sub.add_parser(name, parents=[source], help=summary, description=summary)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="emit JSON")
        if name in ("decorate", "mast"):
            fmt.add_argument("--dot", action="store_true", help="emit the tree in DOT format")
        if name == "stats":
            p.add_argument("--figure", metavar="PNG", help="also draw the LPF profile")
            p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms")

    p = sub.add_parser("verify", help="compare against the brute-force oracle on random texts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-len", type=int, default=2000)
    p.add_argument("--alphabets", default="2,4,26", help="comma-separated alphabet sizes, cycled")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bench", help="time the pipeline on doubling input sizes")
    p.add_argument("--families", default="a,ab,random", help="comma-separated subset of a, ab, random")
    p.add_argument("--min-exp", type=int, default=10)
    p.add_argument("--max-exp", type=int, default=14)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--figure", metavar="PNG", help="also draw the scaling plot")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            if args.count < 0 or args.max_len < 1:
                raise InputError("--count must be >= 0 and --max-len >= 1")
            return cmd_verify(args)
        if args.command == "bench":
            if args.repeat < 1:
                raise InputError("--repeat must be >= 1")
            return cmd_bench(args)
        t = read_input(args.input, args.raw)
        handler, _ = PIPELINE_COMMANDS[args.command]
        sys.stdout.write(handler(args, analyze(t)))
    except InputError as exc:
        print(f"distinct-squares: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"distinct-squares: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
