"""Stress the Birkhoff decomposer: term counts against the (n-1)^2 + 1 bound
and worst reconstruction error, per matrix size."""
import argparse
import time

import numpy as np

from ctxprob import birkhoff_decompose


def random_doubly_stochastic(n, rng):
    k = int(rng.integers(1, n * n + 1))
    m = np.zeros((n, n))
    for w in rng.dirichlet(np.ones(k)):
        m[np.arange(n), rng.permutation(n)] += w
    return m


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'n':>3} {'bound':>6} {'max terms':>10} {'mean terms':>11} {'max err':>10} {'sec':>6}")
    for n in range(1, args.max_n + 1):
        terms, errs = [], []
        t0 = time.perf_counter()
        for _ in range(args.trials):
            m = random_doubly_stochastic(n, rng)
            d = birkhoff_decompose(m)
            terms.append(len(d))
            errs.append(np.max(np.abs(np.array(d.reconstruct()) - m)))
        dt = time.perf_counter() - t0
        print(f"{n:>3} {(n - 1) ** 2 + 1:>6} {max(terms):>10} {np.mean(terms):>11.2f} "
              f"{max(errs):>10.2e} {dt:>6.2f}")


if __name__ == "__main__":
    main()
