"""Benchmark the compiled series kernels against the pure-Python fallback.

Both kernel modules expose the same three functions (mul, inv, sqrt) over
tuples of Fractions, so they can be timed head to head in one process no
matter which one the package itself imported.  Run as

    python benchmarks/bench_kernels.py [--order N] [--repeats R] [--end-to-end]

The default workload inverts and multiplies series of the shapes the
package actually produces: integer polynomial denominators and
fraction-valued meander quotients.  --end-to-end additionally times a
full generating-function computation in a subprocess per backend, since
the backend is fixed at import time.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time
from fractions import Fraction

from fibpaths import _kernels_py

try:
    from fibpaths import _kernels
except ImportError:
    _kernels = None


def integer_input(order):
    """Denominator-style input: 1 - 4z - z^2 padded with zeros."""
    coeffs = [Fraction(1), Fraction(-4), Fraction(-1)]
    coeffs += [Fraction(0)] * (order - 2)
    return tuple(coeffs)


def dyadic_input(order):
    """Sqrt-style input: denominators are powers of two, the shape the
    radical evaluators actually produce.  Cheap to put over a common
    denominator."""
    return tuple(Fraction(2 * i * i + 1, 1 << min(i, 48))
                 for i in range(order + 1))


def mixed_input(order):
    """Adversarial input with unrelated denominators; their lcm explodes,
    which is the worst case for the compiled scaled-integer kernels."""
    return tuple(Fraction(i * i + 1, i + 3) if i else Fraction(1)
                 for i in range(order + 1))


def time_call(fn, *args, repeats=5):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_kernels(order, repeats):
    m = order + 1
    ints_in = integer_input(order)
    dyadic = dyadic_input(order)
    mixed = mixed_input(order)
    sqrt_in = (Fraction(1),) + dyadic[1:]
    inv_int = _kernels_py.inv(ints_in, m)

    cases = [
        ("inv, integer coefficients", "inv", (ints_in, m)),
        ("inv, dyadic denominators", "inv", (dyadic, m)),
        ("mul, dyadic x integer", "mul", (dyadic, inv_int, m)),
        ("sqrt, dyadic denominators", "sqrt", (sqrt_in, m)),
        ("inv, mixed denominators", "inv", (mixed, m)),
    ]

    print("order %d, best of %d runs" % (order, repeats))
    header = "%-30s %12s %12s %9s" % ("kernel", "pure (s)", "compiled (s)", "speedup")
    print(header)
    print("-" * len(header))
    for label, name, args in cases:
        t_py = time_call(getattr(_kernels_py, name), *args, repeats=repeats)
        if _kernels is None:
            print("%-30s %12.4f %12s %9s" % (label, t_py, "n/a", "n/a"))
            continue
        t_c = time_call(getattr(_kernels, name), *args, repeats=repeats)
        out_py = getattr(_kernels_py, name)(*args)
        out_c = getattr(_kernels, name)(*args)
        if tuple(out_py) != tuple(out_c):
            raise SystemExit("backend mismatch on %r" % label)
        print("%-30s %12.4f %12.4f %8.1fx" % (label, t_py, t_c, t_py / t_c))
    if _kernels is not None:
        print("speedups below 1.0x mean the pure kernel won; unrelated")
        print("denominators defeat the compiled common-denominator scaling")


END_TO_END = (
    "import time, fibpaths; t0 = time.perf_counter(); "
    "fibpaths.gf('grand-prefix', 4, %d); "
    "print('%%s %%.4f' %% (fibpaths.BACKEND, time.perf_counter() - t0))"
)


def bench_end_to_end(order):
    print()
    print("end to end: gf('grand-prefix', 4, order=%d)" % order)
    for backend in ("c", "py"):
        env = dict(os.environ, FIBPATH_KERNEL=backend)
        proc = subprocess.run(
            [sys.executable, "-c", END_TO_END % order],
            env=env, capture_output=True, text=True,
        )
        if proc.returncode:
            print("  FIBPATH_KERNEL=%-3s failed: %s" % (backend, proc.stderr.strip()))
        else:
            print("  FIBPATH_KERNEL=%-3s %s" % (backend, proc.stdout.strip()))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order", type=int, default=256,
                        help="series truncation order (default 256)")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--end-to-end", action="store_true",
                        help="also time a full GF computation per backend")
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; timing the pure kernels only")
    bench_kernels(args.order, args.repeats)
    if args.end_to_end:
        bench_end_to_end(args.order)
    return 0


if __name__ == "__main__":
    sys.exit(main())
