"""Command-line front end.

Exit codes: 0 success, 1 ``match`` found no CT-match, 2 input error,
3 input longer than the algorithm's size cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import re
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import binary, general, oracle
from .cartesian import build_cartesian_tree, ct_match, parent_distance
from .errors import CapExceededError, CtLcsError
from .lcs_index import index_memory_estimate
from .witness import CtLcsWitness

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

_BINARY_TEXT = re.compile(r"[01]+")
_TOKEN = re.compile(r"[+-]?\d+")


class InputError(CtLcsError):
    pass


def parse_sequence(text: str, ints: bool = False) -> tuple[int, ...]:
    """Parse ``"12,5,3"``, ``"12 5 3"`` or binary text like ``"0101"``.

    A token made only of 0/1 characters with no separators is read as a binary
    string unless ``ints`` is set.
    """
    text = text.strip()
    if not text:
        return ()
    if not ints and _BINARY_TEXT.fullmatch(text):
        return tuple(int(c) for c in text)
    tokens = [tok for tok in re.split(r"[,\s]+", text) if tok]
    bad = [tok for tok in tokens if not _TOKEN.fullmatch(tok)]
    if bad:
        raise InputError(f"malformed sequence token {bad[0]!r}")
    return tuple(int(tok) for tok in tokens)


@dataclass
class RunReport:
    algorithm: str
    n: int
    m: int
    length: int
    witness: Optional[CtLcsWitness]
    elapsed_ms: float
    memory_bytes: int

    def __post_init__(self):
        if self.witness is not None and self.witness.length != self.length:
            raise ValueError("report length disagrees with witness length")

    def to_dict(self) -> dict:
        w = self.witness
        return {
            "length": self.length,
            "s_indices": list(w.s_indices) if w else None,
            "t_indices": list(w.t_indices) if w else None,
            "pattern": list(w.pattern) if w else None,
            "algorithm": self.algorithm,
            "elapsed_ms": self.elapsed_ms,
        }


def _general_cap(max_n: Optional[int]) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get("CTLCS_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"CTLCS_MAX_N is not an integer: {env!r}") from None
    return general.DEFAULT_MAX_N


def run_lcs(s: Sequence[int], t: Sequence[int], algo: str = "auto",
            max_n: Optional[int] = None, witness: bool = True) -> RunReport:
    """Dispatch one CT-LCS computation and time it."""
    if algo == "auto":
        algo = "binary" if binary.is_binary(s) and binary.is_binary(t) else "general"
    start = time.perf_counter()
    if algo == "general":
        w, tables = general.ct_lcs_general(s, t, max_n=_general_cap(max_n))
        length, memory = w.length, tables.nbytes
    elif algo == "binary":
        if max_n is not None and max(len(s), len(t)) > max_n:
            raise CapExceededError("ct_lcs_binary", max(len(s), len(t)), max_n)
        result = binary.ct_lcs_binary(s, t, witness=witness)
        w, length = result.witness, result.length
        memory = index_memory_estimate(len(s), len(t)) if s and t else 0
    elif algo == "brute":
        w = oracle.brute_force_ct_lcs(s, t, cap=max_n or oracle.BRUTE_CAP)
        length, memory = w.length, 0
    else:
        raise InputError(f"unknown algorithm {algo!r}")
    elapsed = (time.perf_counter() - start) * 1000.0
    return RunReport(algo, len(s), len(t), length, w if witness else None, elapsed, memory)


def _read_pair(args) -> tuple[str, str]:
    if args.file:
        if args.sequences:
            raise InputError("give either --file or two sequences, not both")
        if args.file == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.file) as fh:
                lines = fh.read().splitlines()
        lines += [""] * (2 - len(lines))
        if len(lines) > 2 and any(x.strip() for x in lines[2:]):
            raise InputError("--file must contain exactly two lines")
        return lines[0], lines[1]
    if len(args.sequences) != 2:
        raise InputError("expected two sequences")
    return args.sequences[0], args.sequences[1]


def cmd_lcs(args) -> int:
    a, b = _read_pair(args)
    s, t = parse_sequence(a, args.ints), parse_sequence(b, args.ints)
    if args.algo == "binary" and not (binary.is_binary(s) and binary.is_binary(t)):
        raise InputError("binary algorithm requires 0/1 input")
    report = run_lcs(s, t, args.algo, args.max_n, witness=args.witness or args.json)
    if args.json:
        print(json.dumps(report.to_dict()))
        return EXIT_OK
    print(f"length: {report.length}")
    if args.witness and report.witness is not None:
        w = report.witness
        print("s_indices:", " ".join(map(str, w.s_indices)))
        print("t_indices:", " ".join(map(str, w.t_indices)))
        print("pattern:", " ".join(map(str, w.pattern)))
    return EXIT_OK


def cmd_match(args) -> int:
    if len(args.sequences) != 2:
        raise InputError("expected two sequences")
    s, t = (parse_sequence(x, args.ints) for x in args.sequences)
    ok = ct_match(s, t)
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_pd(args) -> int:
    print(" ".join(map(str, parent_distance(parse_sequence(args.sequence, args.ints)))))
    return EXIT_OK


def cmd_tree(args) -> int:
    tree = build_cartesian_tree(parse_sequence(args.sequence, args.ints))
    if args.format == "dot":
        sys.stdout.write(tree.to_dot())
    else:
        print(tree.to_json())
    return EXIT_OK


def _parse_n_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad --n-list {text!r}") from None
    if not values or any(v < 0 for v in values):
        raise InputError(f"bad --n-list {text!r}")
    return values


def _bench_one(algo: str, s, t, max_n: Optional[int]) -> tuple[float, int]:
    start = time.perf_counter()
    if algo == "general":
        general.compute_tables(s, t, max_n=_general_cap(max_n))
        memory = general.table_memory_estimate(len(s), len(t))
    elif algo == "binary":
        binary.ct_lcs_binary(s, t, witness=False)
        memory = index_memory_estimate(len(s), len(t))
    else:
        oracle.brute_force_ct_lcs(s, t, cap=max_n or oracle.BRUTE_CAP)
        memory = 0
    return (time.perf_counter() - start) * 1000.0, memory


def run_bench(algo: str, n_list: Sequence[int], alphabet: Optional[int] = None, seed: int = 0,
              trials: int = 3, max_n: Optional[int] = None) -> list[dict]:
    """Median wall time per n over ``trials`` random pairs of length n."""
    if alphabet is None:
        alphabet = 2 if algo == "binary" else 10
    if alphabet < 1 or (algo == "binary" and alphabet != 2):
        raise InputError("binary bench requires --alphabet 2")
    if trials < 0:
        raise InputError("--trials must be non-negative")
    if trials == 0:
        return []
    cap = {"general": _general_cap(max_n), "brute": max_n or oracle.BRUTE_CAP}.get(algo, max_n)
    if cap is not None and max(n_list) > cap:
        raise CapExceededError(f"bench {algo}", max(n_list), cap)
    _bench_one(algo, (0, 1), (1, 0), max_n)  # load compiled kernels before timing
    rows = []
    for n in n_list:
        rng = random.Random(f"{seed}:{n}")
        times, memory = [], 0
        for _ in range(trials):
            s = [rng.randrange(alphabet) for _ in range(n)]
            t = [rng.randrange(alphabet) for _ in range(n)]
            ms, memory = _bench_one(algo, s, t, max_n)
            times.append(ms)
        rows.append({"algorithm": algo, "n": n, "trials": trials,
                     "median_ms": statistics.median(times), "memory_bytes": memory})
    return rows


def cmd_bench(args) -> int:
    rows = run_bench(args.algo, _parse_n_list(args.n_list), args.alphabet, args.seed,
                     args.trials, args.max_n)
    if args.json:
        for row in rows:
            print(json.dumps(row))
    elif rows:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctlcs", description="Longest common subsequence under Cartesian-tree matching.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ints(p):
        p.add_argument("--ints", action="store_true",
                       help="read 0/1-only text as a single integer, not a binary string")

    p = sub.add_parser("lcs", help="compute a CT-LCS")
    p.add_argument("sequences", nargs="*")
    p.add_argument("--file", help="file with two lines, or - for stdin")
    p.add_argument("--algo", choices=["general", "binary", "brute", "auto"], default="auto")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-n", type=int, dest="max_n")
    add_ints(p)
    p.set_defaults(func=cmd_lcs)

    p = sub.add_parser("match", help="test two sequences for CT-match")
    p.add_argument("sequences", nargs="*")
    add_ints(p)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("pd", help="print the parent-distance representation")
    p.add_argument("sequence")
    add_ints(p)
    p.set_defaults(func=cmd_pd)

    p = sub.add_parser("tree", help="print the Cartesian tree")
    p.add_argument("sequence")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    add_ints(p)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("bench", help="time an algorithm on random inputs")
    p.add_argument("--algo", choices=["general", "binary", "brute"], default="binary")
    p.add_argument("--n-list", dest="n_list", default="8,16")
    p.add_argument("--alphabet", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CtLcsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
