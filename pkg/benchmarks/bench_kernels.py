#!/usr/bin/env python3
"""Benchmark the compiled kernel extension against the pure-Python fallback.

Both lanes run the same source (src/wirtwidth/_core.py); the compiled lane
is the Cython-built extension if installed.  Workloads: raw oracle
enumeration on small diagrams, branch-and-bound width on mid-size ones,
and the seed heuristic over a slice of the bundled large sample.

Usage: python benchmarks/bench_kernels.py [--large-rows N]
"""

from __future__ import annotations

import argparse
import importlib.util
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import wirtwidth._core as installed_core  # noqa: E402
from wirtwidth import diagram_from_text  # noqa: E402
from wirtwidth.census import read_census_input  # noqa: E402
from wirtwidth.gauss import diagram_arrays  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "wirtwidth" / "data"


def load_pure_lane():
    path = Path(installed_core.__file__).parent / "_core.py"
    spec = importlib.util.spec_from_file_location("wirtwidth._core_purebench", path)
    module = importlib.util.module_from_spec(spec)
    sys.modules["wirtwidth._core_purebench"] = module
    spec.loader.exec_module(module)
    return module


def timed(fn, *args, repeat=1):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--large-rows", type=int, default=200)
    args = parser.parse_args()

    lanes = {"compiled" if installed_core.COMPILED else "pure(installed)": installed_core}
    pure = load_pure_lane()
    if installed_core.COMPILED:
        lanes["pure"] = pure
    elif pure.COMPILED:
        lanes["compiled"] = pure

    corpus = dict(read_census_input(DATA / "codes.txt"))
    large = read_census_input(DATA / "sample_large.tsv")[: args.large_rows]

    workloads = []

    for name in ("torus_2_7", "rnd7mu3"):
        diagram = diagram_from_text(corpus[name])
        arrays = diagram_arrays(diagram)
        workloads.append(
            (f"oracle {name} ({diagram.n_crossings}cr)",
             lambda core, a=arrays: core.oracle_enumerate(core.make_kernel(a)))
        )

    for name in ("rnd9a", "rnd15mu4"):
        diagram = diagram_from_text(corpus[name])
        arrays = diagram_arrays(diagram)

        def bnb(core, a=arrays, n=diagram.n_strands):
            kernel = core.make_kernel(a)
            total, _, _ = core.heuristic_search(kernel, n, 100_000)
            return core.exact_search(kernel, 10_000_000, total)

        workloads.append((f"exact B&B {name} ({diagram.n_crossings}cr)", bnb))

    all_arrays = [diagram_arrays(diagram_from_text(code)) for _, code in large]

    def heuristic_batch(core):
        out = 0
        for arrays in all_arrays:
            kernel = core.make_kernel(arrays)
            total, _, _ = core.heuristic_search(kernel, 4, 5000)
            out += total
        return out

    workloads.append((f"heuristic x{len(all_arrays)} (12-16cr)", heuristic_batch))

    print(f"{'workload':<34}" + "".join(f"{lane:>14}" for lane in lanes) + f"{'speedup':>10}")
    for label, fn in workloads:
        times = {}
        results = {}
        for lane, core in lanes.items():
            times[lane], results[lane] = timed(fn, core)
        values = list(results.values())
        if any(v != values[0] for v in values[1:]):
            print(f"{label:<34} LANES DISAGREE: {results}")
            return 1
        row = f"{label:<34}"
        for lane in lanes:
            row += f"{times[lane] * 1000:>12.1f}ms"
        if len(times) == 2:
            fast, slow = min(times.values()), max(times.values())
            row += f"{slow / fast:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
