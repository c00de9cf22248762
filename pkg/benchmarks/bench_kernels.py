"""Compare the compiled and pure-Python integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sweep 12]

Times raw convolution and fraction-free elimination on oracle-sized inputs,
then an oracle exponent sweep run once per backend in a subprocess (the
backend is chosen at import, so each sweep needs a fresh interpreter).
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from multiarr import _pykernels

try:
    from multiarr import _ckernels
except ImportError:
    _ckernels = None

SWEEP = """
import time
from multiarr.arrangement import B2
from multiarr.kernels import BACKEND
from multiarr.oracle import exponents
from multiarr.verify import b2_multiplicities
t = time.perf_counter()
for m in b2_multiplicities({n}):
    exponents(B2, m)
print(BACKEND, time.perf_counter() - t)
"""


def inputs(seed: int = 0):
    rng = random.Random(seed)
    conv = [([rng.randint(-99, 99) for _ in range(30)], [rng.randint(-99, 99) for _ in range(30)])
            for _ in range(200)]
    mats = []
    for _ in range(40):
        rows = rng.randint(8, 20)
        cols = rng.randint(10, 30)
        mats.append(([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)], cols))
    return conv, mats


def bench(mod, conv, mats, repeat):
    tc = min(timeit.repeat(lambda: [mod.convolve(a, b) for a, b in conv], number=1, repeat=repeat))
    tg = min(timeit.repeat(lambda: [mod.ff_gauss_jordan(r, n) for r, n in mats], number=1, repeat=repeat))
    return tc, tg


def sweep(n: int, pure: bool) -> str:
    env = dict(os.environ, MULTIARR_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", SWEEP.format(n=n)], env=env,
                         capture_output=True, text=True, check=True)
    backend, secs = out.stdout.split()
    return f"{backend:8s} {float(secs):8.3f} s"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sweep", type=int, default=12, help="max |m| for the exponent sweep")
    args = ap.parse_args()

    conv, mats = inputs()
    py = bench(_pykernels, conv, mats, args.repeat)
    print(f"{'kernel':18s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown")
        c = (float("nan"),) * 2
    else:
        c = bench(_ckernels, conv, mats, args.repeat)
    for name, p, q in zip(("convolve x200", "gauss-jordan x40"), py, c):
        print(f"{name:18s} {p * 1e3:8.2f}ms {q * 1e3:8.2f}ms {p / q:7.1f}x")
    print(f"\nexponent sweep over B2, |m| <= {args.sweep}:")
    print("  " + sweep(args.sweep, pure=True))
    if _ckernels is not None:
        print("  " + sweep(args.sweep, pure=False))


if __name__ == "__main__":
    main()
