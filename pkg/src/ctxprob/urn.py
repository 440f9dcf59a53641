"""Monte Carlo simulation of the generalized urn model.

Ball types are the two-valued states, colours are contexts, and the symbol a
ball shows in a colour is the atom whose label contains the ball's type.
Sampling uses numpy's PCG64; shard ``k`` draws from ``SeedSequence(seed,
spawn_key=(k,))``, so counts depend only on ``(seed, N, shards)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import numpy as np

from .classical import Measure, Undefined
from .logic import Context, LogicError
from .partition import PartitionLabeling

GENERATOR = "numpy.random.PCG64"
_RESOLUTION = 53


@dataclass(frozen=True)
class UrnSpec:
    labeling: PartitionLabeling
    measure: Measure
    seed: int = 0

    def __post_init__(self):
        if len(self.measure) != self.labeling.size:
            raise ValueError(f"measure has {len(self.measure)} weights but the urn has "
                             f"{self.labeling.size} ball types")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class EmpiricalMatrix:
    row_context: str
    col_context: str
    row_atoms: tuple[str, ...]
    col_atoms: tuple[str, ...]
    counts: np.ndarray
    draws: int
    seed: int
    shards: int

    @property
    def row_counts(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def estimates(self) -> tuple[tuple, ...]:
        out = []
        for r, total in zip(self.counts, self.row_counts):
            out.append((Undefined,) * len(r) if total == 0
                       else tuple(float(c) / float(total) for c in r))
        return tuple(out)

    def to_dict(self) -> dict:
        return {"rows": self.row_context, "cols": self.col_context,
                "row_atoms": list(self.row_atoms), "col_atoms": list(self.col_atoms),
                "draws": self.draws, "seed": self.seed, "shards": self.shards,
                "generator": GENERATOR,
                "counts": self.counts.tolist(),
                "estimates": [[str(x) if x is Undefined else x for x in r]
                              for r in self.estimates]}


def _thresholds(measure: Measure) -> np.ndarray:
    """Cumulative weights scaled to 53-bit integers, rounded up.

    A draw k uniform on [0, 2^53) selects type i iff k < ceil(cum_i * 2^53),
    which is the exact comparison of k / 2^53 against cum_i.
    """
    scale = 1 << _RESOLUTION
    cum = Fraction(0)
    out = []
    for w in measure.weights:
        cum += w
        out.append(ceil(cum * scale))
    return np.array(out, dtype=np.int64)


def sample_ball_types(measure: Measure, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw ``n`` 0-based ball types i.i.d. from ``measure``."""
    k = rng.integers(0, 1 << _RESOLUTION, size=n, dtype=np.int64)
    return np.searchsorted(_thresholds(measure), k, side="right")


def _symbol_map(labeling: PartitionLabeling, context: Context) -> np.ndarray:
    """0-based ball type -> index of the atom it shows in this colour."""
    out = np.full(labeling.size, -1, dtype=np.int64)
    for k, a in enumerate(context.atoms):
        for i in labeling[a]:
            out[i - 1] = k
    if (out < 0).any():
        raise ValueError(f"context {context.name!r} does not partition the ball types")
    return out


def simulate_cond_prob(spec: UrnSpec, rows: str, cols: str, n: int,
                       shards: int = 1) -> EmpiricalMatrix:
    if n < 1:
        raise ValueError("number of draws must be positive")
    if shards < 1:
        raise ValueError("shards must be positive")
    logic = spec.labeling.logic
    c1, c2 = logic.context(rows), logic.context(cols)
    pre, post = _symbol_map(spec.labeling, c1), _symbol_map(spec.labeling, c2)
    counts = np.zeros((len(c1), len(c2)), dtype=np.int64)
    sizes = [n // shards + (k < n % shards) for k in range(shards)]
    for k, size in enumerate(sizes):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(spec.seed, spawn_key=(k,))))
        balls = sample_ball_types(spec.measure, size, rng)
        flat = pre[balls] * len(c2) + post[balls]
        counts += np.bincount(flat, minlength=counts.size).reshape(counts.shape)
    return EmpiricalMatrix(c1.name, c2.name, c1.atoms, c2.atoms, counts, n, spec.seed, shards)


def intrinsic_prepare(spec: UrnSpec, context: str, atom: str) -> Measure:
    """Condition the urn on seeing ``atom`` through the glasses of ``context``.

    The observer cannot tell apart ball types sharing that symbol, so the
    result is the renormalised mixture over the atom's label.
    """
    c = spec.labeling.logic.context(context)
    if atom not in c.atoms:
        raise LogicError(f"atom {atom!r} is not in context {c.name!r}")
    label = spec.labeling[atom]
    mass = spec.measure.mass(label)
    if mass == 0:
        raise ValueError(f"atom {atom!r} has probability zero; nothing to prepare")
    return Measure(tuple(w / mass if i in label else Fraction(0)
                         for i, w in enumerate(spec.measure.weights, start=1)))
