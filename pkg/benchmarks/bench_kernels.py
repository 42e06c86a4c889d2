"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
from __future__ import annotations

import argparse
import timeit

from polyzeta import _fallback

try:
    from polyzeta import _kernels
except ImportError:
    _kernels = None

CASES = [
    ("nested_harmonic_partial(4, 3, 200000)", "nested_harmonic_partial", (4, 3, 200_000)),
    ("mc_polytope T gamma_T, 1e6 draws", "mc_polytope", (1, 2, 1, 1_000_000, 7, 0)),
    ("mc_polytope W(4) one, 1e6 draws", "mc_polytope", (4, 4, 0, 1_000_000, 7, 0)),
    ("mc_polytope S xy, 1e6 draws", "mc_polytope", (0, 2, 3, 1_000_000, 7, 0)),
]


def agree(a, b) -> bool:
    a, b = (a[0], b[0]) if isinstance(a, tuple) else (a, b)
    return abs(a - b) <= 1e-9 * abs(a)


def best_of(fn, args, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    opts = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; run `pip install --no-build-isolation -e .` first")
        return
    print(f"{'case':<40} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for label, name, args in CASES:
        slow = best_of(getattr(_fallback, name), args, opts.repeat)
        fast = best_of(getattr(_kernels, name), args, opts.repeat)
        same = agree(getattr(_fallback, name)(*args), getattr(_kernels, name)(*args))
        print(f"{label:<40} {slow:>11.4f} {fast:>11.4f} {slow / fast:>7.1f}x" + ("" if same else "  MISMATCH"))


if __name__ == "__main__":
    main()
