"""Compare the two support-counting kernels on synthetic bitset rows.

The miner spends nearly all of its time asking "how many transaction rows
contain all bits of this candidate row?", so this is the loop worth timing.
Run it once with defaults, or sweep sizes:

    python3 benchmarks/bench_support.py
    python3 benchmarks/bench_support.py --txns 2000 --cands 20000 --bits 256
    python3 benchmarks/bench_support.py --threads 4
"""

import argparse
import statistics
import time

import numpy as np

from maxpat import _kernels


def make_rows(rng, n_txn, n_cand, n_bits):
    # transactions carry a decent fraction of the universe, candidates are
    # small --- roughly the shape a levelwise climb produces
    txns = [rng.choice(n_bits, size=rng.integers(n_bits // 4, n_bits // 2 + 1),
                       replace=False)
            for _ in range(n_txn)]
    cands = [rng.choice(n_bits, size=rng.integers(1, 6), replace=False)
             for _ in range(n_cand)]
    return (_kernels.pack_rows(txns, n_bits), _kernels.pack_rows(cands, n_bits))


def bench(fn, txn_words, cand_words, warmup, repeats):
    for _ in range(warmup):
        fn(txn_words, cand_words)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(txn_words, cand_words)
        times.append(time.perf_counter() - t0)
    return times


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--txns", type=int, default=1000)
    ap.add_argument("--cands", type=int, default=10000)
    ap.add_argument("--bits", type=int, default=128)
    ap.add_argument("--warmup", type=int, default=2,
                    help="untimed runs first (lets the JIT compile)")
    ap.add_argument("--repeats", type=int, default=7)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    txn_words, cand_words = make_rows(rng, args.txns, args.cands, args.bits)
    threads = _kernels.set_threads(args.threads)
    print(f"rows: {args.txns} txns x {args.cands} candidates, "
          f"{args.bits} bits, threads={threads}")

    runs = [("numpy", _kernels.count_supports_numpy)]
    if _kernels.HAS_NUMBA:
        runs.append(("numba", _kernels.count_supports_numba))
    else:
        print("numba: not importable, skipping")

    baseline = None
    results = {}
    for name, fn in runs:
        out = fn(txn_words, cand_words)
        if baseline is None:
            baseline = out
        elif not np.array_equal(out, baseline):
            raise SystemExit(f"kernel outputs disagree ({name})")
        times = bench(fn, txn_words, cand_words, args.warmup, args.repeats)
        results[name] = times
        mean = statistics.mean(times)
        std = statistics.stdev(times) if len(times) > 1 else 0.0
        print(f"{name:>6}: {mean * 1e3:8.2f} ms +- {std * 1e3:.2f} "
              f"(best {min(times) * 1e3:.2f})")

    if len(results) == 2:
        speedup = statistics.mean(results["numpy"]) / statistics.mean(results["numba"])
        print(f"numba speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
