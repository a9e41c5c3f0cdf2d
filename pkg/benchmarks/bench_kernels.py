"""Compiled vs pure-Python kernel timings.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import timeit
from array import array

from burstcodes import _kernels_py as py

try:
    from burstcodes import _kernels as compiled
except ImportError:
    compiled = None


def cases(mod):
    n = 10
    two = [(2, 1)] * 2
    sums = array("q")
    for x in range(1 << 8):
        sums.extend(py.power_sums(x, 8, 7))
    rng = random.Random(0)
    h = array("q", rng.sample(range(1, 10 ** 12), 2000))
    nb = array("q", range(1, 2000))
    return {
        "burst_outputs n=10 (2,1)x2 all x": lambda: [mod.burst_outputs(x, n, two, py.DI) for x in range(1 << n)],
        "preimages n=10 (1,1)x2 DS all x": lambda: [mod.preimages(x, n, [(1, 1)] * 2, py.DS) for x in range(1 << n)],
        "neighbourhood n=10 (2,1)x2 64 x": lambda: [mod.neighbourhood(x, n, [two], py.DI) for x in range(64)],
        "power_sums n=12 K=4 all x": lambda: [mod.power_sums(x, 12, 4) for x in range(1 << 12)],
        "pair_order n=8 all pairs of 0": lambda: mod.pair_order(sums, 8, 0, array("q", range(1, 256))),
        "packed_modulus 2000 values": lambda: mod.packed_modulus(h, 0, nb),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    pure = cases(py)
    fast = cases(compiled) if compiled else {}
    print(f"{'kernel':40s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, fn in pure.items():
        tp = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        if name in fast:
            tc = min(timeit.repeat(fast[name], number=1, repeat=args.repeat))
            print(f"{name:40s} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")
        else:
            print(f"{name:40s} {tp:10.4f} {'n/a':>11s}")


if __name__ == "__main__":
    main()
