"""Compare the compiled and pure-Python R-length kernels.

    python3 benchmarks/bench_rlength.py [--max-n 4] [--repeat 3]
"""

import argparse
import random
import time

from knotdelta import bounds, v_n
from knotdelta import _kernel, _rlength_py
from knotdelta.group import GroupElement


def _time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def _cases(max_n, seed):
    for n in range(1, max_n + 1):
        yield f"v_{n}", v_n(n), 2 * n + 2
    rng = random.Random(seed)
    for i in range(5):
        terms = [((rng.choice("XY"), rng.randint(-2, 2)), rng.randint(-2, 2)) for _ in range(4)]
        v = GroupElement(terms)
        if v:
            yield f"random{i}", v, 8


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sweep", type=int, default=2000)
    args = p.parse_args()
    compiled = _kernel.BACKEND == "compiled"
    print(f"backend: {_kernel.BACKEND}")
    print(f"{'case':10s} {'len':>4s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, v, limit in _cases(args.max_n, args.seed):
        dense = bounds._dense(v, limit)[:5]
        tp, lp = _time(_rlength_py.rlength, (*dense, limit), args.repeat)
        if compiled:
            tc, lc = _time(_kernel.rlength, (*dense, limit), args.repeat)
            assert lc == lp, (name, lc, lp)
            print(f"{name:10s} {lp:4d} {tp:10.4f} {tc:11.5f} {tp / tc:7.1f}x")
        else:
            print(f"{name:10s} {lp:4d} {tp:10.4f} {'n/a':>11s}")
    sweep = _sweep(args.seed, args.sweep)
    tp, rp = _time(_run_all, (_rlength_py.rlength, sweep), 1)
    line = f"sweep of {len(sweep)} box elements, limit 6: python {tp:.2f}s"
    if compiled:
        tc, rc = _time(_run_all, (_kernel.rlength, sweep), 1)
        assert rp == rc
        line += f", compiled {tc:.2f}s ({tp / tc:.1f}x)"
    print(line)


def _sweep(seed, count):
    """Random elements with support in [-2, 2] and coefficients in [-2, 2]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        terms = [((l, i), rng.randint(-2, 2)) for l in "XY" for i in range(-2, 3)
                 if rng.random() < 0.3]
        v = GroupElement(terms)
        if v:
            out.append(bounds._dense(v, 6)[:5])
    return out


def _run_all(fn, sweep):
    return [fn(*dense, 6) for dense in sweep]


if __name__ == "__main__":
    main()
