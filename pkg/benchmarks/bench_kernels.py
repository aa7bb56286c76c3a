"""Time the compiled and pure-Python subset kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from forcinglab import kernels
from forcinglab.catalog import catalog
from forcinglab.hsearch import random_tournament
from forcinglab.subcount import pattern_table


def cases():
    s15 = catalog("S_15")
    h6 = catalog("H_6^5")
    h5 = catalog("H_5")
    host12 = random_tournament(12, random.Random(0))
    yield "count_matches H_6^5 in S_15", "count_matches", (list(s15.out), 15, 6, pattern_table(h6))
    yield "count_through H_6^5 in S_15 (0,1)", "count_through", (list(s15.out), 15, 6, pattern_table(h6), 0, 1)
    yield "flip_deltas H_5 on 12 vertices", "flip_deltas", (list(host12.out), 12, 5, pattern_table(h5))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    else:
        print("compiled extension not built; timing the Python kernels only")
    print(f"{'kernel':38} " + " ".join(f"{n:>12}" for n, _ in backends) + "  speedup")
    for label, fn, argv in cases():
        times = []
        results = set()
        for _, mod in backends:
            f = getattr(mod, fn)
            results.add(repr(f(*argv)))
            times.append(min(timeit.repeat(lambda: f(*argv), number=1, repeat=args.repeat)))
        assert len(results) == 1, f"backends disagree on {label}"
        speed = f"{times[0] / times[-1]:7.1f}x" if len(times) > 1 else ""
        print(f"{label:38} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
