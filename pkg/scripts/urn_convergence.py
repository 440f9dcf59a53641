"""Maximum deviation of simulated urn frequencies from the exact firefly
matrix as the number of draws grows, next to the 5/sqrt(N) envelope."""
import argparse

import numpy as np

from ctxprob import (Measure, Undefined, UrnSpec, canonical_partition_labels,
                     classical_cond_prob_matrix, enumerate_two_valued_states, parse_logic,
                     simulate_cond_prob)
from ctxprob.cli import read_input, load_measure


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--logic", default="firefly.json")
    p.add_argument("--measure", default="uniform5.json")
    p.add_argument("--rows", default="C1")
    p.add_argument("--cols", default="C2")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    labels = canonical_partition_labels(enumerate_two_valued_states(
        parse_logic(read_input(args.logic))))
    measure: Measure = load_measure(args.measure)
    exact = classical_cond_prob_matrix(labels, measure, args.rows, args.cols)
    spec = UrnSpec(labels, measure, args.seed)
    for exp in range(2, 8):
        n = 10**exp
        emp = simulate_cond_prob(spec, args.rows, args.cols, n)
        dev = max((abs(e - float(x)) for er, xr in zip(emp.estimates, exact.entries)
                   for e, x in zip(er, xr) if e is not Undefined and x is not Undefined),
                  default=0.0)
        print(f"N = 1e{exp}:  max deviation {dev:.5f}   envelope {5 / np.sqrt(n):.5f}")


if __name__ == "__main__":
    main()
