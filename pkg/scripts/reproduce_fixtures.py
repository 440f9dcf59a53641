"""Print the worked examples: state counts, labels and the conditional
matrices for the square, firefly and pentagon logics."""
from importlib import resources

import numpy as np

from ctxprob import (BasisContext, Measure, born_cond_prob_matrix,
                     canonical_partition_labels, classical_cond_prob_matrix,
                     classify_stochastic, enumerate_two_valued_states,
                     exotic_cond_prob_matrix, exotic_half_state, parse_logic)
from ctxprob.cli import table


def load(name):
    return parse_logic((resources.files("ctxprob") / "data" / f"{name}.json").read_text())


def show(title, m):
    print(f"\n{title}")
    print(table(m.row_atoms, m.col_atoms, m.entries))
    v = classify_stochastic(m)
    print(f"row stochastic: {v.row_stochastic}  doubly stochastic: {v.doubly_stochastic}"
          f"  partial: {v.partial}")


def main():
    for name in ("square", "firefly", "pentagon"):
        logic = load(name)
        labels = canonical_partition_labels(enumerate_two_valued_states(logic))
        print(f"== {name}: {labels.size} two-valued states")
        for a, lab in labels.to_dict()["labels"].items():
            print(f"  {a:>3}  {{{','.join(map(str, lab))}}}")

    ff = canonical_partition_labels(enumerate_two_valued_states(load("firefly")))
    show("firefly, uniform weights", classical_cond_prob_matrix(ff, Measure.uniform(5), "C1", "C2"))
    show("firefly, all weight on state 1",
         classical_cond_prob_matrix(ff, Measure.point(5, 1), "C2", "C1"))

    s = 1 / np.sqrt(2)
    born = born_cond_prob_matrix(BasisContext(np.eye(3)),
                                 BasisContext([[s, s, 0], [s, -s, 0], [0, 0, 1]]))
    print("\nfirefly quantum double (Born rule)")
    print(np.round(born, 12))

    pent = load("pentagon")
    pl = canonical_partition_labels(enumerate_two_valued_states(pent))
    show("pentagon, uniform weights", classical_cond_prob_matrix(pl, Measure.uniform(11), "C5", "C2"))
    show("pentagon, half state", exotic_cond_prob_matrix(exotic_half_state(pent), "C1", "C3"))


if __name__ == "__main__":
    main()
