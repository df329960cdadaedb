"""Command-line front end: one subcommand per problem, debug dumps, and
a scaling benchmark.

Exit codes: 0 success, 2 usage errors (argument parsing), 1 input
validation errors.  Results go to stdout in JSON (default, compact,
fixed key order) or TSV (arrays one value per line, scalar results as
"length<TAB>witness").
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import oracle
from .palindromes import lpalcf, maximal_palindromes
from .periodic import LpcfQuery, lpcf_nearest_good_ancestor, lpcf_weighted_ancestor
from .repetitions import compute_runs
from .squarefree import build_sqms_index, sqms_query
from .text import InputError, Text, load_text


def _read_input(value: str, ns) -> Text:
    if ns.literal:
        return load_text(value)
    with open(value, "rb") as fh:
        raw = fh.read()
    if not ns.keep_newline and raw.endswith(b"\n"):
        raw = raw[:-1]
    return load_text(raw)


def _dump(payload) -> list[str]:
    return [json.dumps(payload, separators=(",", ":"))]


def _cmd_sqms(ns) -> list[str]:
    x = _read_input(ns.text, ns)
    y = _read_input(ns.query, ns)
    if ns.oracle:
        best = oracle.brute_longest_common_squarefree(x, y)
        if ns.format == "json":
            return _dump({"values": None, "best_length": best, "witness": None})
        return [str(best)]
    res = sqms_query(build_sqms_index(x), y)
    if ns.format == "json":
        wit = None
        if res.witness is not None:
            wit = {"x_pos": res.witness.x_pos, "y_pos": res.witness.y_pos,
                   "length": res.witness.length}
        return _dump({"values": [int(v) for v in res.values],
                      "best_length": res.best_length, "witness": wit})
    lines = [str(int(v)) for v in res.values]
    if res.witness is not None:
        w = res.witness
        lines.append(f"{res.best_length}\t{y.factor(w.y_pos, w.y_pos + w.length).to_str()}")
    else:
        lines.append("0")
    return lines


def _cmd_lpcf(ns) -> list[str]:
    texts = [_read_input(f, ns) for f in ns.files]
    if ns.oracle:
        length = oracle.brute_lpcf(texts, ns.k_prime)
        if ns.format == "json":
            return _dump({"length": length, "period": None, "witness": None})
        return [str(length)]
    q = LpcfQuery(texts, ns.k_prime)
    res = lpcf_weighted_ancestor(q) if ns.algorithm == "wa" else lpcf_nearest_good_ancestor(q)
    if ns.format == "json":
        wit = None
        if res.witness is not None:
            wit = {"string": res.witness.string, "start": res.witness.start}
        return _dump({"length": res.length, "period": res.period, "witness": wit})
    if res.witness is None:
        return ["0"]
    w = res.witness
    factor = texts[w.string].factor(w.start, w.start + res.length)
    return [f"{res.length}\t{factor.to_str()}"]


def _cmd_lpalcf(ns) -> list[str]:
    x = _read_input(ns.files[0], ns)
    y = _read_input(ns.files[1], ns)
    if ns.oracle:
        length = oracle.brute_lpalcf(x, y)
        if ns.format == "json":
            return _dump({"length": length, "witness": None})
        return [str(length)]
    res = lpalcf(x, y)
    if ns.format == "json":
        wit = None
        if res.factor is not None:
            wit = {"x_start": res.x_start, "y_start": res.y_start,
                   "factor": res.factor.to_str()}
        return _dump({"length": res.length, "witness": wit})
    if res.factor is None:
        return ["0"]
    return [f"{res.length}\t{res.factor.to_str()}"]


def _cmd_runs(ns) -> list[str]:
    t = _read_input(ns.file, ns)
    rows = oracle.brute_runs(t) if ns.oracle else compute_runs(t).as_tuples()
    if ns.format == "json":
        return _dump({"runs": [[int(a), int(b), int(p)] for a, b, p in rows]})
    return [f"{a}\t{b}\t{p}" for a, b, p in rows]


def _cmd_palindromes(ns) -> list[str]:
    t = _read_input(ns.file, ns)
    pals = maximal_palindromes(t)
    if ns.format == "json":
        return _dump({"palindromes": [[p.center2, p.radius2, p.start, p.end]
                                      for p in pals]})
    return [f"{p.center2}\t{p.radius2}\t{p.start}\t{p.end}" for p in pals]


def _gen(rng, kind: str, n: int) -> Text:
    if kind == "random":
        return load_text(rng.integers(1, 4, size=n, dtype=np.int64))
    block = rng.integers(1, 4, size=6, dtype=np.int64)
    arr = np.tile(block, n // 6 + 1)[:n]
    noise = rng.random(n) < 1 / 64
    arr[noise] = rng.integers(1, 4, size=int(noise.sum()), dtype=np.int64)
    return load_text(arr)


def _bench_once(problem: str, rng, kind: str, n: int) -> float:
    if problem == "sqms":
        x = _gen(rng, kind, n)
        y = _gen(rng, kind, n)
        t0 = time.perf_counter()
        sqms_query(build_sqms_index(x), y)
        return time.perf_counter() - t0
    if problem in ("lpcf-wa", "lpcf-nga"):
        q = LpcfQuery([_gen(rng, kind, n // 2), _gen(rng, kind, n - n // 2)], 2)
        t0 = time.perf_counter()
        if problem == "lpcf-wa":
            lpcf_weighted_ancestor(q)
        else:
            lpcf_nearest_good_ancestor(q)
        return time.perf_counter() - t0
    if problem == "lpalcf":
        x = _gen(rng, kind, n // 2)
        y = _gen(rng, kind, n - n // 2)
        t0 = time.perf_counter()
        lpalcf(x, y)
        return time.perf_counter() - t0
    x = _gen(rng, kind, n)
    t0 = time.perf_counter()
    compute_runs(x)
    return time.perf_counter() - t0


def _cmd_bench(ns) -> list[str]:
    if ns.size < 4:
        raise InputError("bench size must be at least 4")
    seed = int(os.environ.get("PROPFACTOR_SEED", "0"))
    rng = np.random.default_rng(seed)
    sizes = [ns.size, 2 * ns.size]
    rows = []
    ratios = {}
    for kind in ("random", "periodic"):
        secs = []
        for n in sizes:
            secs.append(_bench_once(ns.problem, rng, kind, n))
            rows.append({"kind": kind, "size": n, "seconds": round(secs[-1], 6)})
        ratios[kind] = round(secs[1] / max(secs[0], 1e-9), 3)
    if ns.format == "json":
        return _dump({"problem": ns.problem, "rows": rows, "ratios": ratios})
    lines = [f"{r['kind']}\t{r['size']}\t{r['seconds']}" for r in rows]
    lines += [f"ratio\t{kind}\t{ratios[kind]}" for kind in ("random", "periodic")]
    return lines


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json",
                        help="output format (default json)")
    common.add_argument("--literal", action="store_true",
                        help="treat inputs as inline strings, not file paths")
    common.add_argument("--keep-newline", action="store_true",
                        help="do not strip one trailing newline from file inputs")
    common.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="propfactor",
        description="Longest common factors preserved under square-freeness, "
                    "periodicity, or palindromicity.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sqms", parents=[common],
                       help="longest common square-free factor, per query position")
    p.add_argument("--text", required=True, help="indexed text")
    p.add_argument("--query", required=True, help="query string")
    p.set_defaults(func=_cmd_sqms)

    p = sub.add_parser("lpcf", parents=[common],
                       help="longest periodic common factor of k strings")
    p.add_argument("--k-prime", dest="k_prime", type=int, required=True,
                   help="how many strings must share the factor")
    p.add_argument("--algorithm", choices=("wa", "nga"), default="wa",
                   help="augmented-tree (wa) or nearest-good-ancestor (nga) route")
    p.add_argument("files", nargs="+", help="input strings")
    p.set_defaults(func=_cmd_lpcf)

    p = sub.add_parser("lpalcf", parents=[common],
                       help="longest palindromic common factor of two strings")
    p.add_argument("files", nargs=2, help="the two input strings")
    p.set_defaults(func=_cmd_lpalcf)

    p = sub.add_parser("runs", parents=[common],
                       help="maximal periodic factors of one string")
    p.add_argument("file", help="input string")
    p.set_defaults(func=_cmd_runs)

    p = sub.add_parser("palindromes", parents=[common],
                       help="maximal palindromes of one string")
    p.add_argument("file", help="input string")
    p.set_defaults(func=_cmd_palindromes)

    p = sub.add_parser("bench", parents=[common],
                       help="scaling benchmark at sizes N and 2N")
    p.add_argument("--problem", required=True,
                   choices=("sqms", "lpcf-wa", "lpcf-nga", "lpalcf", "runs"))
    p.add_argument("--size", type=int, required=True, help="base input size N")
    p.set_defaults(func=_cmd_bench)
    return parser


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        lines = ns.func(ns)
    except (InputError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    for line in lines:
        print(line)
    return 0


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
