"""Time the diagonal-only product against the dense triple loop.

    python scripts/structured_vs_dense.py --k 4 --sizes 20 40 80 160
"""
import argparse
import random
import time
from dataclasses import dataclass, field

from multidiag import sampling
from multidiag.algebra import mul
from multidiag.field import FLOAT_FIELD
from multidiag.mdmatrix import to_dense
from multidiag.oracle import dense_mul


@dataclass
class Config:
    k: int = 4
    sizes: list = field(default_factory=lambda: [20, 40, 80, 160])
    bandwidth: int = 2  # populated offsets -b..b, in units of k
    repeats: int = 3
    seed: int = 0


def timed(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    print(f"{'n':>6} {'s':>4} {'structured [ms]':>16} {'dense [ms]':>12} {'max |diff|':>11}")
    for n in cfg.sizes:
        b = min(cfg.bandwidth, n // cfg.k)
        offs = range(-b, b + 1)
        V = sampling.random_md(rng, n, cfg.k, FLOAT_FIELD, offsets=offs)
        W = sampling.random_md(rng, n, cfg.k, FLOAT_FIELD, offsets=offs)
        ts, Z = timed(lambda: mul(V, W), cfg.repeats)
        DV, DW = to_dense(V), to_dense(W)
        td, D = timed(lambda: dense_mul(DV, DW), 1)
        diff = max(abs(x - y) for rz, rd in zip(to_dense(Z), D) for x, y in zip(rz, rd))
        print(f"{n:>6} {n // cfg.k:>4} {ts * 1e3:>16.2f} {td * 1e3:>12.1f} {diff:>11.1e}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--sizes", type=int, nargs="+", default=Config().sizes)
    p.add_argument("--bandwidth", type=int, default=Config.bandwidth)
    p.add_argument("--seed", type=int, default=Config.seed)
    args = p.parse_args()
    run(Config(k=args.k, sizes=args.sizes, bandwidth=args.bandwidth, seed=args.seed))


if __name__ == "__main__":
    main()
