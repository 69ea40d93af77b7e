"""Walk one k-tridiagonal matrix through powers and inverses.

Prints which offsets are populated at each step: powers and inverses fill
in more diagonals but never leave the multiples of k, and when
n + 1 <= 2k the inverse stays k-tridiagonal.
"""
import argparse
import random
from dataclasses import dataclass

from multidiag import sampling
from multidiag.algebra import power
from multidiag.inverse import inv_cayley_hamilton, inv_general, inv_thm2, pow_signed
from multidiag.mdmatrix import lattice_violations, to_dense


@dataclass
class Config:
    n: int = 9
    k: int = 3
    seed: int = 1


def describe(label, M):
    off_lattice = len(lattice_violations(to_dense(M), M.k))
    print(f"{label:<22} offsets {list(M.offsets)!s:<28} off-lattice nonzeros: {off_lattice}")


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    A = sampling.random_nonsingular(rng, cfg.n, cfg.k, ktri=True)
    print(f"n={cfg.n}, k={cfg.k}, s={cfg.n // cfg.k}")
    describe("A", A)
    for m in (2, 3):
        describe(f"A^{m}", power(A, m))
    X = inv_general(A)
    describe("A^-1 (residue blocks)", X)
    describe("A^-1 (Cayley-Hamilton)", inv_cayley_hamilton(A))
    print("routes agree:", X == inv_cayley_hamilton(A))
    describe("A^-2", pow_signed(A, -2))
    if cfg.n + 1 <= 2 * cfg.k:
        describe("A^-1 (closed form)", inv_thm2(A))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    run(Config(a.n, a.k, a.seed))


if __name__ == "__main__":
    main()
