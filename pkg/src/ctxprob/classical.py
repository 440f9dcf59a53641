"""Classical conditional probabilities on partition logics, in exact rationals."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .logic import Context, LogicError
from .partition import PartitionLabeling
from .states import DispersionlessState


class _Undefined:
    """The 0/0 entry of a conditional-probability matrix."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undefined"

    def __str__(self):
        return "0/0"

    def __reduce__(self):
        return (_Undefined, ())


Undefined = _Undefined()


def to_fraction(x) -> Fraction:
    """Parse an int, a ``"p/q"`` string, or a Fraction. Floats are rejected."""
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"expected an exact rational, got {x!r}")
    return Fraction(x)


def format_fraction(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class Measure:
    """Convex weights over a state family, index 1 first."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(to_fraction(x) for x in self.weights)
        if any(x < 0 for x in w):
            raise ValueError("measure weights must be nonnegative")
        if sum(w) != 1:
            raise ValueError(f"measure weights sum to {sum(w)}, not 1")
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.weights)

    def mass(self, indices) -> Fraction:
        return sum((self.weights[i - 1] for i in indices), Fraction(0))

    @classmethod
    def uniform(cls, k: int) -> "Measure":
        return cls((Fraction(1, k),) * k)

    @classmethod
    def point(cls, k: int, i: int) -> "Measure":
        return cls(tuple(Fraction(int(j == i)) for j in range(1, k + 1)))

    def to_dict(self) -> dict:
        return {"weights": [format_fraction(x) for x in self.weights]}


def _check_aligned(labeling: PartitionLabeling, measure: Measure) -> None:
    if len(measure) != labeling.size:
        raise ValueError(f"measure has {len(measure)} weights but the state family has "
                         f"{labeling.size} states")


def atom_probability(labeling: PartitionLabeling, measure: Measure, atom: str) -> Fraction:
    _check_aligned(labeling, measure)
    if atom not in labeling.labels:
        raise LogicError(f"unknown atom {atom!r}")
    return measure.mass(labeling[atom])


@dataclass(frozen=True)
class CondProbMatrix:
    """entries[i][j] = P(col atom j | row atom i); an entry is a Fraction or Undefined."""

    row_context: str
    col_context: str
    row_atoms: tuple[str, ...]
    col_atoms: tuple[str, ...]
    entries: tuple[tuple, ...]
    rule: str = "classical"
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_atoms), len(self.col_atoms)

    def row_defined(self, i: int) -> bool:
        return all(x is not Undefined for x in self.entries[i])

    @property
    def partial(self) -> bool:
        return any(x is Undefined for row in self.entries for x in row)

    def to_dict(self) -> dict:
        d = {"rows": self.row_context, "cols": self.col_context,
             "row_atoms": list(self.row_atoms), "col_atoms": list(self.col_atoms),
             "entries": [[str(x) if x is Undefined else format_fraction(x) for x in row]
                         for row in self.entries],
             "rule": self.rule}
        d.update(self.meta)
        return d


def _resolve(labeling: PartitionLabeling, context: Context | str) -> Context:
    if isinstance(context, Context):
        return labeling.logic.context(context.name)
    return labeling.logic.context(context)


def classical_cond_prob_matrix(labeling: PartitionLabeling, measure: Measure,
                               rows: Context | str, cols: Context | str) -> CondProbMatrix:
    """P(f_j | e_i) = lambda(label f_j & label e_i) / lambda(label e_i).

    A row whose conditioning atom has probability zero is Undefined, unless
    the row takes the same value under every strictly positive measure (its
    label lies inside a single outcome label); then that indicator row is
    reported, as in the printed firefly matrices.
    """
    _check_aligned(labeling, measure)
    c1, c2 = _resolve(labeling, rows), _resolve(labeling, cols)
    entries = []
    for e in c1.atoms:
        le = labeling[e]
        denom = measure.mass(le)
        if denom > 0:
            entries.append(tuple(measure.mass(le & labeling[f]) / denom for f in c2.atoms))
        elif le and any(le <= labeling[f] for f in c2.atoms):
            entries.append(tuple(Fraction(int(le <= labeling[f])) for f in c2.atoms))
        else:
            entries.append((Undefined,) * len(c2))
    return CondProbMatrix(c1.name, c2.name, c1.atoms, c2.atoms, tuple(entries))


EXOTIC_RULE = "paper-fixture rule"


def exotic_cond_prob_matrix(state: DispersionlessState, rows: Context | str,
                            cols: Context | str) -> CondProbMatrix:
    """Matrix 2*s(e)*s(f) for the half-valued odd-cycle state.

    Rows conditioning on a 0-valued atom come out all zero, not Undefined.
    """
    half = Fraction(1, 2)
    bad = {a: v for a, v in state.values.items() if v not in (0, half)}
    if bad:
        a, v = next(iter(bad.items()))
        raise ValueError(f"state value {v} on atom {a!r} outside {{0, 1/2}}")
    logic = state.logic
    c1 = logic.context(rows.name if isinstance(rows, Context) else rows)
    c2 = logic.context(cols.name if isinstance(cols, Context) else cols)
    entries = tuple(tuple(2 * state[e] * state[f] for f in c2.atoms) for e in c1.atoms)
    return CondProbMatrix(c1.name, c2.name, c1.atoms, c2.atoms, entries, rule=EXOTIC_RULE)


def column_probabilities(labeling: PartitionLabeling, measure: Measure,
                         context: Context | str) -> tuple[Fraction, ...]:
    c = _resolve(labeling, context)
    return tuple(measure.mass(labeling[a]) for a in c.atoms)


def parse_weights(values: Sequence) -> Measure:
    return Measure(tuple(to_fraction(v) for v in values))
