#!/usr/bin/env python3
"""Benchmark the GF(2) elimination kernel: compiled extension vs pure Python.

Times full reduced row echelonization of dense random matrices for every
available backend, then one end-to-end case (the 100x100 product operator of
the Petersen graph against itself).

Usage: python benchmarks/bench_gf2.py [--sizes 256,512,1024] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

from lightsout import BACKEND, formulas, game
from lightsout._gf2kernel import available_backends


def random_rows(n: int, rng: random.Random) -> list[int]:
    return [rng.getrandbits(n) for _ in range(n)]


def time_backend(fn, rows, n, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(list(rows), n, True)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="128,256,512,1024")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s]

    backends = available_backends()
    print(f"active backend: {BACKEND}; timing: {', '.join(backends)}")
    header = f"{'n':>6}" + "".join(f"{name:>14}" for name in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    rng = random.Random(20240917)
    for n in sizes:
        rows = random_rows(n, rng)
        times = {name: time_backend(fn, rows, n, args.repeat) for name, fn in backends.items()}
        line = f"{n:>6}" + "".join(f"{times[name]*1e3:>12.2f}ms" for name in backends)
        if "compiled" in times and "pure" in times:
            line += f"{times['pure'] / times['compiled']:>9.1f}x"
        print(line)

    pet = game.switching_matrix(game.petersen_graph())
    t0 = time.perf_counter()
    nullity = formulas.oracle_nullity(pet, pet)
    dt = time.perf_counter() - t0
    print(f"\npetersen self-product oracle ({BACKEND}): nullity={nullity} in {dt*1e3:.2f}ms")


if __name__ == "__main__":
    main()
