"""Side-by-side timing of the compiled and pure-Python term kernels.

Times the three kernels on random term maps and the memoized
determinant expansion on staircase supports, once per backend.  The
pure path is exercised directly through _termops_py; the compiled one
through _termops when it built.

Usage: python benchmarks/bench_kernels.py [--sizes 40,160,640] [--repeat 5]
"""

import argparse
import random
import statistics
import sys
import time

from gvand import _termops_py as pure

try:
    from gvand import _termops as compiled
except ImportError:
    compiled = None


def random_terms(rng, n_vars, size):
    out = {}
    while len(out) < size:
        exp = tuple(rng.randint(0, 12) for _ in range(n_vars))
        out[exp] = rng.randint(-999, 999) or 1
    return out


def time_call(fn, repeat):
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return min(samples), statistics.median(samples)


def bench_kernels(backend, label, sizes, repeat, rng_seed=12021):
    rng = random.Random(rng_seed)
    rows = []
    for size in sizes:
        a = random_terms(rng, 4, size)
        b = random_terms(rng, 4, size)
        for name, fn in (
            ("add", lambda: backend.add_terms(a, b, 0)),
            ("mul", lambda: backend.mul_terms(a, b, 0)),
            ("mul mod 5", lambda: backend.mul_terms(a, b, 5)),
        ):
            best, med = time_call(fn, repeat)
            rows.append((label, f"{name} ({size} terms)", best, med))
    return rows


def bench_determinant(label, repeat):
    """Full N=7 staircase determinant through whichever kernels are loaded."""
    from gvand.exponents import Support
    from gvand.rings import ZZ
    from gvand.vandermonde import VandermondeInstance, vandermonde_determinant

    inst = VandermondeInstance(Support(1, tuple((k,) for k in range(7))), ZZ)
    best, med = time_call(lambda: vandermonde_determinant(inst), repeat)
    return [(label, "staircase determinant N=7", best, med)]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="40,160,640")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]

    rows = bench_kernels(pure, "python", sizes, args.repeat)
    if compiled is not None:
        rows += bench_kernels(compiled, "c", sizes, args.repeat)
    else:
        print("compiled extension not built; timing the pure path only", file=sys.stderr)

    from gvand import kernels

    rows += bench_determinant(kernels.BACKEND, args.repeat)

    width = max(len(r[1]) for r in rows)
    print(f"{'case':<{width}}  backend  best       median")
    for label, case, best, med in rows:
        print(f"{case:<{width}}  {label:<7}  {best * 1e3:8.3f}ms {med * 1e3:8.3f}ms")

    if compiled is not None:
        print()
        by_case = {}
        for label, case, best, _ in rows:
            by_case.setdefault(case, {})[label] = best
        for case, pair in by_case.items():
            if len(pair) == 2:
                print(f"speedup {case}: {pair['python'] / pair['c']:.2f}x")


if __name__ == "__main__":
    main()
