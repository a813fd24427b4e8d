"""Compare the pure-Python and compiled numeric kernels.

Times the five hot kernels on random complex buffers and prints one row
per (kernel, size, backend) with the per-call median and the speedup of
the compiled backend over the pure one when both are built.

Usage: python3 benchmarks/bench_kernels.py [--repeats 5] [--seed 7]
"""

import argparse
import random
import time
from array import array
from statistics import median

from tlfiber._kernels import available_backends


def rand_cbuf(rng, count: int) -> array:
    out = array("d")
    for _ in range(count):
        out.append(rng.uniform(-1, 1))
        out.append(rng.uniform(-1, 1))
    return out


def rand_hermitian(rng, n: int) -> array:
    a = [[complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
         for _ in range(n)]
    out = array("d")
    for i in range(n):
        for j in range(n):
            z = (a[i][j] + a[j][i].conjugate()) / 2
            out.append(z.real)
            out.append(z.imag)
    return out


def poly_coeffs(rng, deg: int) -> array:
    roots = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
             for _ in range(deg)]
    co = [complex(1.0)]
    for r in roots:
        co = [co[0]] + [co[i + 1] - r * co[i]
                        for i in range(len(co) - 1)] + [-r * co[-1]]
    out = array("d")
    for z in co:
        out.append(z.real)
        out.append(z.imag)
    return out


def cases(rng):
    # name, size label, callable factory taking the backend module
    for n in (8, 16, 32):
        a, b = rand_cbuf(rng, n * n), rand_cbuf(rng, n * n)
        yield ("matmul", "%dx%d" % (n, n),
               lambda impl, a=a, b=b, n=n: impl.matmul(a, b, n, n, n))
    for nn, left, right, cols in ((2, 4, 4, 16), (3, 9, 9, 27)):
        src = rand_cbuf(rng, left * nn * nn * right * cols)
        e = rand_cbuf(rng, nn * nn)
        yield ("cap_apply", "N=%d %dx%d" % (nn, left * nn * nn * right, cols),
               lambda impl, s=src, e=e, c=cols, nn=nn, l=left, r=right:
               impl.cap_apply(s, c, nn, l, r, e))
        flat = rand_cbuf(rng, left * right * cols)
        yield ("cup_apply", "N=%d %dx%d" % (nn, left * right, cols),
               lambda impl, s=flat, e=e, c=cols, nn=nn, l=left, r=right:
               impl.cup_apply(s, c, nn, l, r, e))
    for n in (6, 12):
        h = rand_hermitian(rng, n)
        yield ("jacobi_eigh", "%dx%d" % (n, n),
               lambda impl, h=h, n=n: impl.jacobi_eigh(h, n, 1e-13, 60))
    for deg in (4, 8):
        co = poly_coeffs(rng, deg)
        yield ("roots", "deg %d" % deg,
               lambda impl, co=co: impl.roots_simultaneous(co, 400, 1e-13))


def time_call(fn, repeats: int) -> float:
    # inflate tiny kernels to a measurable batch
    fn()
    batch = 1
    start = time.perf_counter()
    fn()
    once = time.perf_counter() - start
    if once < 1e-3:
        batch = max(1, int(1e-3 / max(once, 1e-9)))
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(batch):
            fn()
        samples.append((time.perf_counter() - start) / batch)
    return median(samples)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print("backends built: %s" % ", ".join(names))
    header = "%-12s %-14s" % ("kernel", "size")
    for name in names:
        header += " %12s" % name
    if len(names) == 2:
        header += " %9s" % "speedup"
    print(header)
    for kernel, size, factory in cases(random.Random(args.seed)):
        row = "%-12s %-14s" % (kernel, size)
        timings = {}
        for name in names:
            timings[name] = time_call(lambda impl=backends[name]:
                                      factory(impl), args.repeats)
            row += " %10.1fus" % (timings[name] * 1e6)
        if len(names) == 2:
            row += " %8.1fx" % (timings["pure"] / timings["compiled"])
        print(row)


if __name__ == "__main__":
    main()
