"""Two-valued states, the separating property, and the odd-cycle half state."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .logic import Logic, LogicError, intertwines


@dataclass(frozen=True)
class TwoValuedState:
    """A {0,1} assignment, stored as a bit tuple over the logic's atom order."""

    atom_ids: tuple[str, ...]
    bits: tuple[int, ...]

    def __getitem__(self, atom_id: str) -> int:
        return self.bits[self.atom_ids.index(atom_id)]

    @property
    def values(self) -> dict[str, int]:
        return dict(zip(self.atom_ids, self.bits))


@dataclass(frozen=True)
class StateFamily:
    """All two-valued states of a logic; ``family[i]`` is 1-based."""

    logic: Logic
    states: tuple[TwoValuedState, ...]

    def __len__(self):
        return len(self.states)

    def __iter__(self) -> Iterator[TwoValuedState]:
        return iter(self.states)

    def __getitem__(self, i: int) -> TwoValuedState:
        if not 1 <= i <= len(self.states):
            raise IndexError(f"state index {i} out of range 1..{len(self.states)}")
        return self.states[i - 1]

    def to_dict(self) -> dict:
        return {"states": [s.values for s in self.states]}


def _check_enumerable(logic: Logic) -> None:
    orphans = [a for a, n in logic.membership().items() if n == 0]
    if orphans:
        raise LogicError(f"orphan atom {orphans[0]!r}")


def _backtrack(logic: Logic) -> list[tuple[int, ...]]:
    n = len(logic.atoms)
    ctx_idx = [[logic.atom_index(a) for a in c.atoms] for c in logic.contexts]
    # atom -> indices of all atoms sharing a context with it
    neighbours = [set() for _ in range(n)]
    for members in ctx_idx:
        for a in members:
            neighbours[a].update(b for b in members if b != a)

    values: list[int | None] = [None] * n
    found = []

    def place(k: int) -> None:
        if k == len(ctx_idx):
            found.append(tuple(values))
            return
        members = ctx_idx[k]
        if any(values[a] == 1 for a in members):
            # context already satisfied through an intertwine; the 0s were
            # propagated when that atom was set
            place(k + 1)
            return
        for a in members:
            if values[a] is not None:
                continue
            if any(values[b] == 1 for b in neighbours[a]):
                continue
            changed = [a]
            values[a] = 1
            for b in neighbours[a]:
                if values[b] is None:
                    values[b] = 0
                    changed.append(b)
            place(k + 1)
            for b in changed:
                values[b] = None

    place(0)
    return found


def enumerate_two_valued_states(logic: Logic) -> StateFamily:
    """Enumerate every two-valued state by backtracking over contexts.

    Contexts are visited in logic order and the 1-valued atom is chosen in
    atom order.  The result is sorted in descending lexicographic order of the
    0/1 vectors, so the states valuing the first atom 1 come first.
    """
    _check_enumerable(logic)
    found = _backtrack(logic)
    found.sort(reverse=True)
    ids = logic.atom_ids
    return StateFamily(logic, tuple(TwoValuedState(ids, bits) for bits in found))


def brute_force_two_valued_states(logic: Logic) -> StateFamily:
    """Reference enumeration over all 2^n assignments."""
    _check_enumerable(logic)
    ids = logic.atom_ids
    ctx_idx = [[logic.atom_index(a) for a in c.atoms] for c in logic.contexts]
    found = [bits for bits in itertools.product((0, 1), repeat=len(ids))
             if all(sum(bits[a] for a in members) == 1 for members in ctx_idx)]
    found.sort(reverse=True)
    return StateFamily(logic, tuple(TwoValuedState(ids, bits) for bits in found))


@dataclass(frozen=True)
class SeparationReport:
    separating: bool
    non_separated: tuple[tuple[str, str], ...]


def is_separating(family: StateFamily) -> SeparationReport:
    ids = family.logic.atom_ids
    bad = []
    for i, j in itertools.combinations(range(len(ids)), 2):
        if not any(s.bits[i] != s.bits[j] for s in family.states):
            bad.append((ids[i], ids[j]))
    return SeparationReport(not bad, tuple(bad))


@dataclass(frozen=True)
class DispersionlessState:
    logic: Logic
    values: Mapping[str, Fraction]

    def __post_init__(self):
        vals = {a: Fraction(self.values[a]) for a in self.logic.atom_ids}
        for a, v in vals.items():
            if not 0 <= v <= 1:
                raise ValueError(f"state value {v} for atom {a!r} outside [0, 1]")
        for c in self.logic.contexts:
            total = sum(vals[a] for a in c.atoms)
            if total != 1:
                raise ValueError(f"state values on context {c.name!r} sum to {total}, not 1")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, atom_id: str) -> Fraction:
        return self.values[atom_id]


def check_odd_cycle(logic: Logic) -> None:
    """Raise unless the contexts form one odd cycle glued at single intertwines."""
    shared = intertwines(logic)
    k = len(logic.contexts)
    if k < 3 or k % 2 == 0:
        raise LogicError(f"not an odd cyclic pasting: {k} contexts")
    membership = logic.membership()
    for a in shared:
        if membership[a] != 2:
            raise LogicError(f"intertwine {a!r} lies in {membership[a]} contexts, expected 2")
    for c in logic.contexts:
        n = sum(a in shared for a in c.atoms)
        if n != 2:
            raise LogicError(f"context {c.name!r} has {n} intertwines, expected 2")
    # every context has degree 2 in the context graph; check it is one cycle
    adj = {c.name: [d.name for a in c.atoms if a in shared
                    for d in logic.contexts_of(a) if d.name != c.name]
           for c in logic.contexts}
    seen, stack = set(), [logic.contexts[0].name]
    while stack:
        name = stack.pop()
        if name not in seen:
            seen.add(name)
            stack.extend(adj[name])
    if len(seen) != k:
        raise LogicError("contexts do not form a single cycle")


def exotic_half_state(logic: Logic) -> DispersionlessState:
    """The dispersionless state that is 1/2 on every intertwine and 0 elsewhere."""
    check_odd_cycle(logic)
    shared = intertwines(logic)
    half = Fraction(1, 2)
    return DispersionlessState(logic, {a: half if a in shared else Fraction(0)
                                       for a in logic.atom_ids})
