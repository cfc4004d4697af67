"""Compare the compiled and pure-Python word kernels.

    python benchmarks/bench_kernels.py [--max-degree 5] [--repeat 3]
"""

import argparse
import itertools
import time

from nijenhuis import kernel
from nijenhuis.enumeration import words_up_to


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(max_degree):
    words = words_up_to(["x"], max_degree)
    pairs = list(itertools.product(words, repeat=2))
    deep = words_up_to(["x", "y"], max_degree + 1)

    def diamonds(mod):
        f = mod.diamond_words
        for a, b in pairs:
            f(a, b)

    def coproducts(mod):
        f = mod.coproduct_word
        for w in deep:
            f(w)

    return [
        (f"diamond_words, {len(pairs)} pairs (deg <= {max_degree})", diamonds),
        (f"coproduct_word, {len(deep)} words (deg <= {max_degree + 1}, 2 letters)", coproducts),
    ]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    backends = kernel.available_backends()
    print("backends:", ", ".join(backends))
    for label, work in workloads(args.max_degree):
        times = {b: _time(lambda: work(kernel.get_backend_module(b)), args.repeat) for b in backends}
        row = "  ".join(f"{b}={t * 1e3:9.1f} ms" for b, t in times.items())
        if "cython" in times:
            row += f"  speedup x{times['python'] / times['cython']:.2f}"
        print(f"{label:55s} {row}")


if __name__ == "__main__":
    main()
