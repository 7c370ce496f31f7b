"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 1]

Both modules are imported directly, so TTMIN_PURE has no effect here.
Each kernel runs on identical inputs and the outputs are compared.
"""

import argparse
import random
import sys
import timeit

from ttmin import _kernels_py as pure

try:
    from ttmin import _ckernels as compiled
except ImportError:
    compiled = None


def dt_case(rng, n):
    bits = bytes(rng.getrandbits(1) for _ in range(1 << n))
    return (bits, n, list(range(n)))


def delta_case(rng, m, terms):
    polys = [[rng.getrandbits(m) for _ in range(terms)] for _ in range(4)]
    return (*polys, m)


def cases(rng):
    for n in (6, 8, 10):
        yield f"dt_cube_table n={n}", "dt_cube_table", dt_case(rng, n)
    for m, terms in ((6, 16), (10, 64), (14, 256)):
        yield f"delta_vanishes m={m} terms={terms}", "delta_vanishes", delta_case(rng, m, terms)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1
    rng = random.Random(args.seed)
    print(f"{'kernel':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, name, inp in cases(rng):
        fp, fc = getattr(pure, name), getattr(compiled, name)
        a, b = fp(*inp), fc(*inp)
        if name == "dt_cube_table":
            a, b = (list(a[0]), list(a[1])), (list(b[0]), list(b[1]))
        if a != b:
            print(f"{label}: outputs differ")
            return 1
        tp = min(timeit.repeat(lambda: fp(*inp), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fc(*inp), number=1, repeat=args.repeat))
        print(f"{label:34} {tp:10.4f} {tc:10.4f} {tp / max(tc, 1e-9):7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
