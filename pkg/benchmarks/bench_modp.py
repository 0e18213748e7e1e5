"""Compare the compiled and pure-Python F_p elimination kernels.

Usage: python benchmarks/bench_modp.py [--sizes 50,100,200] [--p 1009] [--repeat 3]

The workload is the Taylor-condition matrix of ``l * Delta'`` for the
example parameters of family 2, m = 1, the matrix behind ``hc_exact_test``.
"""

import argparse
import random
import time

from negcurve.families import delta_prime
from negcurve.geometry import lattice_points
from negcurve.laurent import taylor_matrix
from negcurve.linalg import _modp_py
from negcurve.linalg import _rref_modp_compiled
from negcurve.linalg.fields import GF
from negcurve.wps import example_parameters


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def random_case(n, p, rng):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def taylor_case(l, p):
    params = example_parameters(2, 1)
    pts = lattice_points(delta_prime(params).scale(l))
    return taylor_matrix(pts, l * params.d0_mult, GF(p)).rows


def run(rows, p, repeat):
    import numpy as np

    ncols = len(rows[0])
    py = _time(lambda: _modp_py.rref_modp([list(r) for r in rows], ncols, p), repeat)
    if _rref_modp_compiled is None:
        return py, None
    cy = _time(lambda: _rref_modp_compiled(np.array(rows, dtype=np.int64), p), repeat)
    a = np.array(rows, dtype=np.int64)
    piv_c = list(_rref_modp_compiled(a, p))
    b = [list(r) for r in rows]
    piv_p = _modp_py.rref_modp(b, ncols, p)
    assert piv_c == piv_p and a.tolist() == b, "backends disagree"
    return py, cy


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="50,100,200")
    ap.add_argument("--ls", default="4,8,12")
    ap.add_argument("--p", type=int, default=1009)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(0)
    print(f"{'case':<24}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    cases = [(f"random {n}x{n}", random_case(n, args.p, rng)) for n in map(int, args.sizes.split(","))]
    cases += [(f"taylor l={l}", taylor_case(l, args.p)) for l in map(int, args.ls.split(","))]
    for name, rows in cases:
        py, cy = run(rows, args.p, args.repeat)
        if cy is None:
            print(f"{name:<24}{py:>12.4f}{'n/a':>12}{'':>10}")
        else:
            print(f"{name:<24}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
