"""Batch command line: gen-code, encode, corrupt, decode, check-condition,
audit, roundtrip, bench.

Exit status: 0 success, 2 bad parameters/files/usage, 3 inconsistent received
word, 4 unrecognized received word, 1 roundtrip failures or a violated
injectivity condition.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
from dataclasses import dataclass
from time import perf_counter

from . import channel, code, decoder, verify
from .errors import (
    BudgetExceededError,
    InconsistentReceivedWordError,
    ParameterError,
    RSDelError,
    UnrecognizedReceivedWordError,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3
EXIT_UNRECOGNIZED = 4


def _parse_int_list(text: str):
    try:
        return [int(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise ParameterError(f"expected comma-separated integers, got {text!r}") from None


def _parse_coords(text: str):
    vals = _parse_int_list(text)
    if len(vals) != 3:
        raise ParameterError(f"expected three comma-separated ints, got {text!r}")
    return tuple(vals)


def cmd_gen_code(args) -> int:
    delta = _parse_int_list(args.delta) if args.delta else None
    spec = code.build_code(args.p, args.n, delta)
    code.save_spec(spec, args.out)
    g = spec.g
    print(f"wrote spec p={spec.p} n={spec.n} g=({g.g0},{g.g1},{g.g2}) to {args.out}")
    return EXIT_OK


def cmd_encode(args) -> int:
    spec = code.load_spec(args.spec)
    if args.random:
        rng = random.Random(args.seed)
        m = code.random_message(spec, rng)
    else:
        if args.m1 is None or args.m2 is None:
            raise ParameterError("encode needs --m1 and --m2, or --random")
        m = code.Message(spec.ext.from_coords(_parse_coords(args.m1)),
                         spec.ext.from_coords(_parse_coords(args.m2)))
    cw = code.encode(spec, m)
    code.save_symbols(args.out, cw)
    print(f"m1 {m.m1.c0},{m.m1.c1},{m.m1.c2}")
    print(f"m2 {m.m2.c0},{m.m2.c1},{m.m2.c2}")
    print(f"wrote {spec.n} symbols to {args.out}")
    return EXIT_OK


def cmd_corrupt(args) -> int:
    spec = code.load_spec(args.spec)
    word = code.load_codeword(args.infile, spec)
    if args.keep:
        pattern = channel.DeletionPattern(tuple(_parse_int_list(args.keep)))
    elif args.deletions is not None:
        survivors = len(word) - args.deletions
        if survivors < 0:
            raise ParameterError(
                f"cannot delete {args.deletions} symbols from {len(word)}")
        pattern = channel.random_pattern(len(word), survivors, args.seed)
    else:
        raise ParameterError("corrupt needs --keep or --deletions")
    received = channel.apply_deletions(word, pattern)
    code.save_symbols(args.out, received)
    print("kept " + ",".join(str(i) for i in pattern.kept))
    print(f"wrote {len(received)} symbols to {args.out}")
    return EXIT_OK


def cmd_decode(args) -> int:
    spec = code.load_spec(args.spec)
    symbols = code.load_symbols(args.received, spec)
    y = decoder.ReceivedTriple.from_symbols(symbols, truncate=args.truncate)
    decode = decoder.decode_linear if args.algo == "linear" else decoder.decode_cubic
    outcome = decode(spec, y)
    code.save_symbols(args.out, outcome.codeword)
    m = outcome.message
    print(f"path {outcome.path}")
    print(f"m1 {m.m1.c0},{m.m1.c1},{m.m1.c2}")
    print(f"m2 {m.m2.c0},{m.m2.c1},{m.m2.c2}")
    if args.emit_kappa:
        if outcome.kappa.kept:
            print("kappa " + " ".join(str(i) for i in outcome.kappa.kept))
        else:
            print("kappa -")
    print(f"wrote {spec.n} symbols to {args.out}")
    return EXIT_OK


def cmd_check_condition(args) -> int:
    spec = code.load_spec(args.spec)
    witness = verify.check_injectivity(spec, budget=args.budget)
    if witness is None:
        total = channel.triple_count(spec.n)
        print(f"pass: {total} triples, all ratio values distinct")
        return EXIT_OK
    v = witness.value
    print(f"condition violated: triples {witness.triple_a} and {witness.triple_b} "
          f"share ratio value ({v.c0},{v.c1},{v.c2})")
    return EXIT_FAILURE


def cmd_audit(args) -> int:
    spec = code.load_spec(args.spec)
    pairs = verify.sample_message_pairs(spec, args.pairs, args.seed)
    result = verify.audit_code(spec, pairs)
    print(f"pairs {result.pairs_checked}")
    print(f"max-lcs {result.max_lcs}")
    if result.max_lcs >= 3:
        ma, mb = result.witness
        print(f"witness m1={ma.m1.coords},{ma.m2.coords} m2={mb.m1.coords},{mb.m2.coords}")
        print("audit FAILED: some pair shares a length-3 subsequence")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    spec = code.load_spec(args.spec)
    rng = random.Random(args.seed)
    algos = ("cubic", "linear") if args.algo == "both" else (args.algo,)
    failures = 0
    successes = 0
    fallbacks = 0
    trials = 0
    for _ in range(args.trials):
        m = code.random_message(spec, rng)
        cw = code.encode(spec, m)
        if args.exhaustive:
            patterns = channel.enumerate_triples(spec.n)
        else:
            patterns = [channel.random_pattern(spec.n, 3, rng.randrange(1 << 30))]
        for pattern in patterns:
            y = decoder.ReceivedTriple.from_symbols(channel.apply_deletions(cw, pattern))
            outcomes = []
            trials += 1
            ok = True
            for algo in algos:
                fn = decoder.decode_linear if algo == "linear" else decoder.decode_cubic
                try:
                    out = fn(spec, y)
                except RSDelError:
                    ok = False
                    break
                outcomes.append(out)
                if out.path == decoder.PATH_FALLBACK and algo == "linear":
                    fallbacks += 1
                # constant words claim no pattern; any claimed one must match
                if out.codeword != cw or out.message != m:
                    ok = False
                elif out.kappa.kept and tuple(out.kappa.kept) != pattern.kept:
                    ok = False
            if ok and len(outcomes) == 2:
                a, b = outcomes
                if (a.message != b.message or a.codeword != b.codeword
                        or a.kappa != b.kappa):
                    ok = False
            if ok:
                successes += 1
            else:
                failures += 1
    print(f"trials {trials}")
    print(f"successes {successes}")
    print(f"failures {failures}")
    print(f"fallbacks {fallbacks}")
    return EXIT_OK if failures == 0 else EXIT_FAILURE


@dataclass
class BenchRecord:
    p: int
    n: int
    algo: str
    trials: int
    search_time: float
    total_time: float
    field_ops: int


def run_bench(p_values, n_values, trials: int, seed: int = 0,
              budget_seconds=None):
    """Worst-case decode benchmarks; one record per (n, algo).

    The kept triple is the lexicographically last one (n-2, n-1, n), which
    maximizes the cubic scan.  Returns (records, truncated).
    """
    if len(p_values) == 1:
        p_values = list(p_values) * len(n_values)
    if len(p_values) != len(n_values):
        raise ParameterError("need one p, or exactly one p per n")
    records = []
    started = perf_counter()
    for p, n in zip(p_values, n_values):
        spec = code.build_code(p, n)
        rng = random.Random(seed)
        m = code.random_message(spec, rng)
        cw = code.encode(spec, m)
        kept = channel.DeletionPattern((n - 2, n - 1, n))
        y = decoder.ReceivedTriple.from_symbols(channel.apply_deletions(cw, kept))
        for algo in ("cubic", "linear"):
            if budget_seconds is not None and perf_counter() - started > budget_seconds:
                return records, True
            fn = decoder.decode_cubic if algo == "cubic" else decoder.decode_linear
            search = 0.0
            total = 0.0
            ops = 0
            for _ in range(trials):
                inst = decoder.DecodeInstrumentation()
                t0 = perf_counter()
                out = fn(spec, y, inst)
                total += perf_counter() - t0
                search += inst.search_seconds
                ops = inst.total_ops
                if out.codeword != cw:
                    raise AssertionError("benchmark decode returned a wrong codeword")
            rec = BenchRecord(p=p, n=n, algo=algo, trials=trials,
                              search_time=search / trials,
                              total_time=total / trials,
                              field_ops=ops)
            assert rec.search_time <= rec.total_time and rec.field_ops > 0
            records.append(rec)
    return records, False


def write_bench_csv(path, records, truncated: bool) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["p", "n", "algo", "trials",
                         "search_time", "total_time", "field_ops"])
        for r in records:
            writer.writerow([r.p, r.n, r.algo, r.trials,
                             f"{r.search_time:.9f}", f"{r.total_time:.9f}",
                             r.field_ops])
        if truncated:
            fh.write("# truncated: time budget exceeded\n")


def cmd_bench(args) -> int:
    p_values = _parse_int_list(args.p)
    n_values = _parse_int_list(args.n)
    records, truncated = run_bench(p_values, n_values, args.trials,
                                   seed=args.seed,
                                   budget_seconds=args.budget_seconds)
    write_bench_csv(args.out, records, truncated)
    note = " (truncated)" if truncated else ""
    print(f"wrote {len(records)} records to {args.out}{note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsdel",
        description="Deletion-correcting two-dimensional Reed-Solomon codes")
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("gen-code", help="construct a code and write its spec file")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--delta", help="comma-separated override, default 1..n")
    q.add_argument("--out", required=True)
    q.set_defaults(fn=cmd_gen_code)

    q = sub.add_parser("encode", help="encode a message to a codeword file")
    q.add_argument("--spec", required=True)
    q.add_argument("--m1", help="c0,c1,c2")
    q.add_argument("--m2", help="c0,c1,c2")
    q.add_argument("--random", action="store_true")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out", required=True)
    q.set_defaults(fn=cmd_encode)

    q = sub.add_parser("corrupt", help="apply a deletion pattern to a codeword")
    q.add_argument("--spec", required=True)
    q.add_argument("--in", dest="infile", required=True)
    q.add_argument("--keep", help="kept positions i,j,k (1-based)")
    q.add_argument("--deletions", type=int, help="number of random deletions")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out", required=True)
    q.set_defaults(fn=cmd_corrupt)

    q = sub.add_parser("decode", help="decode a received word")
    q.add_argument("--spec", required=True)
    q.add_argument("--received", required=True)
    q.add_argument("--algo", choices=("cubic", "linear"), required=True)
    q.add_argument("--emit-kappa", action="store_true")
    q.add_argument("--truncate", action="store_true",
                   help="allow a longer received word; decode its first three symbols")
    q.add_argument("--out", required=True)
    q.set_defaults(fn=cmd_decode)

    q = sub.add_parser("check-condition",
                       help="exhaustively certify ratio-map injectivity")
    q.add_argument("--spec", required=True)
    q.add_argument("--budget", type=int, default=10_000_000)
    q.set_defaults(fn=cmd_check_condition)

    q = sub.add_parser("audit", help="max pairwise codeword LCS over sampled messages")
    q.add_argument("--spec", required=True)
    q.add_argument("--pairs", type=int, default=500)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(fn=cmd_audit)

    q = sub.add_parser("roundtrip", help="encode/corrupt/decode self-test")
    q.add_argument("--spec", required=True)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--algo", choices=("cubic", "linear", "both"), default="both")
    q.add_argument("--exhaustive", action="store_true",
                   help="all C(n,3) kept triples per message instead of one random")
    q.set_defaults(fn=cmd_roundtrip)

    q = sub.add_parser("bench", help="worst-case decode timings and op counts")
    q.add_argument("--p", required=True, help="one modulus, or one per n")
    q.add_argument("--n", required=True, help="comma-separated blocklength grid")
    q.add_argument("--trials", type=int, default=3)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--budget-seconds", type=float, default=None)
    q.add_argument("--out", required=True)
    q.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InconsistentReceivedWordError as exc:
        print(f"inconsistent received word: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except UnrecognizedReceivedWordError as exc:
        print(f"unrecognized received word: {exc}", file=sys.stderr)
        return EXIT_UNRECOGNIZED
    except BudgetExceededError as exc:
        print(f"refusing: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, RSDelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
