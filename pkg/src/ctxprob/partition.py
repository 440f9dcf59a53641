"""Canonical partition logic: label each atom by the states valuing it 1."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .logic import Logic
from .states import StateFamily


@dataclass(frozen=True)
class PartitionLabeling:
    logic: Logic
    size: int
    labels: Mapping[str, frozenset[int]]

    def __post_init__(self):
        object.__setattr__(self, "labels",
                           {a: frozenset(self.labels[a]) for a in self.logic.atom_ids})

    def __getitem__(self, atom_id: str) -> frozenset[int]:
        return self.labels[atom_id]

    @property
    def ground_set(self) -> frozenset[int]:
        return frozenset(range(1, self.size + 1))

    def partition_violations(self) -> list[str]:
        """Contexts whose labels fail to partition {1..K}."""
        out = []
        for c in self.logic.contexts:
            seen: set[int] = set()
            for a in c.atoms:
                if seen & self.labels[a]:
                    out.append(f"context {c.name!r}: labels overlap at {sorted(seen & self.labels[a])}")
                seen |= self.labels[a]
            if seen != self.ground_set:
                out.append(f"context {c.name!r}: labels miss {sorted(self.ground_set - seen)}")
        return out

    def to_dict(self) -> dict:
        return {"labels": {a: sorted(self.labels[a]) for a in self.logic.atom_ids}}


def canonical_partition_labels(family: StateFamily) -> PartitionLabeling:
    if len(family) == 0:
        raise ValueError("empty state family: no ground set to partition")
    labels = {a: frozenset(i for i, s in enumerate(family.states, start=1) if s.bits[k] == 1)
              for k, a in enumerate(family.logic.atom_ids)}
    return PartitionLabeling(family.logic, len(family), labels)


def verify_partition_labels(family: StateFamily, labeling: PartitionLabeling
                            | Mapping[str, frozenset[int]]) -> bool:
    labels = labeling.labels if isinstance(labeling, PartitionLabeling) else labeling
    canonical = canonical_partition_labels(family).labels
    return set(labels) == set(canonical) and all(
        frozenset(labels[a]) == canonical[a] for a in canonical)


def match_labels(ours: Mapping[str, frozenset[int]],
                 theirs: Mapping[str, frozenset[int]]) -> dict[int, int] | None:
    """Find a permutation of state indices carrying ``ours`` onto ``theirs``.

    Each state index is characterised by the set of atoms whose label holds
    it; two labelings agree up to renumbering iff these per-index atom sets
    coincide as multisets.  Returns ``{our_index: their_index}`` or ``None``.
    """
    if set(ours) != set(theirs):
        return None

    def signatures(labels):
        sig: dict[int, set[str]] = {}
        for a, lab in labels.items():
            for i in lab:
                sig.setdefault(i, set()).add(a)
        return {i: frozenset(s) for i, s in sig.items()}

    s_ours, s_theirs = signatures(ours), signatures(theirs)
    if len(s_ours) != len(s_theirs):
        return None
    by_sig: dict[frozenset[str], list[int]] = {}
    for j, s in sorted(s_theirs.items()):
        by_sig.setdefault(s, []).append(j)
    perm = {}
    for i, s in sorted(s_ours.items()):
        pool = by_sig.get(s)
        if not pool:
            return None
        perm[i] = pool.pop(0)
    # a state index absent from every label would be invisible above
    if any(frozenset(perm[i] for i in ours[a]) != frozenset(theirs[a]) for a in ours):
        return None
    return perm
