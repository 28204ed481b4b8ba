"""Time the modular charpoly kernel: numba against the numpy fallback.

    python3 benchmarks/bench_charpoly.py [--dims 16 32 64] [--repeat 3]

Inputs are Hermite trace forms of seeded gap systems plus random integer
matrices. Both backends must return identical coefficients.
"""

from __future__ import annotations

import argparse
import random
import time

from monorank._kernels import numba_enabled
from monorank.generators import random_gap_system
from monorank.hermite import QuotientAlgebra
from monorank.linalg import integer_charpoly


def trace_form_of_dim(dim, seed):
    rng = random.Random(seed)
    while True:
        alg = QuotientAlgebra(random_gap_system(rng, max_n=3, max_a=3, min_a0=2))
        if alg.dim >= dim:
            b = alg.trace_form()
            return [[int(v) for v in row[:dim]] for row in b[:dim]]


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", type=int, nargs="+", default=[16, 32, 64])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not numba_enabled():
        raise SystemExit("numba is unavailable or disabled; nothing to compare")
    integer_charpoly([[1, 2], [3, 4]], "numba")  # JIT warm-up
    print(f"{'input':<14}{'dim':>5}{'numpy s':>11}{'numba s':>11}{'speedup':>9}")
    for dim in args.dims:
        rng = random.Random(dim)
        cases = [
            ("trace form", trace_form_of_dim(dim, dim)),
            ("random int", [[rng.randint(-10**9, 10**9) for _ in range(dim)] for _ in range(dim)]),
        ]
        for label, m in cases:
            t_np, r_np = best_time(lambda: integer_charpoly(m, "numpy"), args.repeat)
            t_nb, r_nb = best_time(lambda: integer_charpoly(m, "numba"), args.repeat)
            assert r_np == r_nb, "backends disagree"
            print(f"{label:<14}{dim:>5}{t_np:>11.4f}{t_nb:>11.4f}{t_np / t_nb:>9.1f}")


if __name__ == "__main__":
    main()
