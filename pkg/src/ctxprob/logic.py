"""Atoms, contexts and logics (pastings of contexts), plus orthogonal representations.

A logic is stored in canonical order: atoms in first-appearance order (or the
order of an explicit ``"atoms"`` list), contexts in file order.  Every matrix
produced downstream inherits this order.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np


class LogicError(ValueError):
    """Raised for structurally invalid logics or malformed logic files."""


@dataclass(frozen=True)
class Atom:
    id: str
    index: int


@dataclass(frozen=True)
class Context:
    name: str
    atoms: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        dup = [a for a, c in Counter(self.atoms).items() if c > 1]
        if dup:
            raise LogicError(f"duplicate atom in context {self.name!r}: {dup[0]!r}")

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        return {"ok": self.ok, "errors": list(self.errors), "warnings": list(self.warnings)}


@dataclass(frozen=True)
class Logic:
    """A finite pasting of contexts over shared atoms (a Greechie diagram).

    Construction only resolves names; structural rules (no singleton contexts,
    pairwise overlap of at most one atom, no orphan atoms) are checked by
    :func:`validate_logic`.
    """

    atoms: tuple[Atom, ...]
    contexts: tuple[Context, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)
    _ctx_index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ids = [a.id for a in self.atoms]
        if len(set(ids)) != len(ids):
            raise LogicError("duplicate atom ids")
        if any(not isinstance(a, str) or not a for a in ids):
            raise LogicError("atom ids must be non-empty strings")
        index = {a: i for i, a in enumerate(ids)}
        for c in self.contexts:
            for a in c.atoms:
                if a not in index:
                    raise LogicError(f"context {c.name!r} references undeclared atom {a!r}")
        names = [c.name for c in self.contexts]
        if len(set(names)) != len(names):
            dup = next(n for n, k in Counter(names).items() if k > 1)
            raise LogicError(f"duplicate context name {dup!r}")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_ctx_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def from_contexts(cls, contexts: Iterable[tuple[str, Sequence[str]]],
                      atoms: Sequence[str] | None = None) -> "Logic":
        ctxs = tuple(Context(name, tuple(members)) for name, members in contexts)
        if atoms is None:
            atoms = list(dict.fromkeys(a for c in ctxs for a in c.atoms))
        return cls(tuple(Atom(a, i) for i, a in enumerate(atoms)), ctxs)

    @property
    def atom_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.atoms)

    def atom_index(self, atom_id: str) -> int:
        try:
            return self._index[atom_id]
        except KeyError:
            raise LogicError(f"unknown atom {atom_id!r}") from None

    def context(self, name: str) -> Context:
        try:
            return self.contexts[self._ctx_index[name]]
        except KeyError:
            raise LogicError(f"unknown context {name!r}") from None

    def membership(self) -> Counter:
        counts = Counter({a: 0 for a in self.atom_ids})
        for c in self.contexts:
            counts.update(c.atoms)
        return counts

    def contexts_of(self, atom_id: str) -> tuple[Context, ...]:
        return tuple(c for c in self.contexts if atom_id in c.atoms)


def intertwines(logic: Logic) -> frozenset[str]:
    """Atoms that belong to two or more contexts."""
    return frozenset(a for a, n in logic.membership().items() if n >= 2)


def validate_logic(logic: Logic) -> ValidationReport:
    errors = []
    for c in logic.contexts:
        if len(c) == 0:
            errors.append(f"empty context {c.name!r}")
        elif len(c) == 1:
            errors.append(f"singleton context {c.name!r}")
    for c1, c2 in itertools.combinations(logic.contexts, 2):
        shared = set(c1.atoms) & set(c2.atoms)
        if len(shared) > 1:
            errors.append(f"overlap>1: contexts {c1.name!r} and {c2.name!r} share "
                          f"{sorted(shared)}")
    for a, n in logic.membership().items():
        if n == 0:
            errors.append(f"orphan atom {a!r}")
    return ValidationReport(tuple(errors))


def parse_logic(text: str, strict: bool = True) -> Logic:
    """Parse the JSON logic format.

    With ``strict`` (the default) the result must pass :func:`validate_logic`;
    the ``validate`` command parses non-strictly to report every violation.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise LogicError(f"syntax error at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise LogicError("logic file must contain a JSON object")
    unknown = set(doc) - {"atoms", "contexts"}
    if unknown:
        raise LogicError(f"unknown field {sorted(unknown)[0]!r}")
    if "contexts" not in doc or not isinstance(doc["contexts"], list):
        raise LogicError("missing 'contexts' list")
    contexts = []
    for k, c in enumerate(doc["contexts"]):
        if not isinstance(c, dict):
            raise LogicError(f"context #{k} must be an object")
        extra = set(c) - {"name", "atoms"}
        if extra:
            raise LogicError(f"unknown field {sorted(extra)[0]!r} in context #{k}")
        name = c.get("name", f"C{k + 1}")
        members = c.get("atoms")
        if not isinstance(name, str) or not isinstance(members, list) \
                or not all(isinstance(a, str) for a in members):
            raise LogicError(f"context #{k} needs a string name and a list of atom ids")
        contexts.append((name, members))
    atoms = doc.get("atoms")
    if atoms is not None and (not isinstance(atoms, list)
                              or not all(isinstance(a, str) for a in atoms)):
        raise LogicError("'atoms' must be a list of strings")
    logic = Logic.from_contexts(contexts, atoms)
    if strict:
        report = validate_logic(logic)
        if not report.ok:
            raise LogicError("; ".join(report.errors))
    return logic


def logic_to_dict(logic: Logic) -> dict:
    return {"atoms": list(logic.atom_ids),
            "contexts": [{"name": c.name, "atoms": list(c.atoms)} for c in logic.contexts]}


def serialize_logic(logic: Logic) -> str:
    return json.dumps(logic_to_dict(logic), indent=2)


# -- orthogonal representations -------------------------------------------

@dataclass(frozen=True)
class OrthogonalRep:
    dimension: int
    vectors: Mapping[str, np.ndarray]

    def __post_init__(self):
        if not isinstance(self.dimension, int) or self.dimension < 1:
            raise LogicError("dimension must be a positive integer")
        vecs = {}
        for a, v in self.vectors.items():
            v = np.asarray(v, dtype=complex)
            if v.shape != (self.dimension,):
                raise LogicError(f"dimension mismatch for atom {a!r}: expected "
                                 f"{self.dimension}, got {v.shape}")
            v.setflags(write=False)
            vecs[a] = v
        object.__setattr__(self, "vectors", vecs)

    def __getitem__(self, atom_id: str) -> np.ndarray:
        return self.vectors[atom_id]


def parse_rep(text: str) -> OrthogonalRep:
    """Parse ``{"dimension": d, "vectors": {"a": [[re, im], ...]}}``.

    Plain real numbers are accepted in place of ``[re, im]`` pairs.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise LogicError(f"syntax error at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict) or set(doc) != {"dimension", "vectors"}:
        raise LogicError("representation file needs exactly 'dimension' and 'vectors'")
    vectors = {}
    for a, comps in doc["vectors"].items():
        vec = []
        for z in comps:
            if isinstance(z, (int, float)):
                vec.append(complex(z))
            elif isinstance(z, list) and len(z) == 2:
                vec.append(complex(z[0], z[1]))
            else:
                raise LogicError(f"bad component {z!r} for atom {a!r}")
        vectors[a] = vec
    return OrthogonalRep(doc["dimension"], vectors)


def rep_to_dict(rep: OrthogonalRep) -> dict:
    return {"dimension": rep.dimension,
            "vectors": {a: [[z.real, z.imag] for z in v] for a, v in rep.vectors.items()}}


def check_orthogonal_rep(logic: Logic, rep: OrthogonalRep, tol: float = 1e-10) -> ValidationReport:
    """Check unit norms, in-context orthogonality and faithfulness.

    Atoms that share no context but are orthogonal anyway only produce a
    warning; distinct atoms mapped onto the same ray are an error.
    """
    missing = [a for a in logic.atom_ids if a not in rep.vectors]
    if missing:
        raise LogicError(f"missing vector for atom {missing[0]!r}")
    errors, warnings = [], []
    for a in logic.atom_ids:
        norm = np.linalg.norm(rep[a])
        if abs(norm - 1.0) > tol:
            errors.append(f"norm: atom {a!r} has norm {norm!r}")
    cocontextual = set()
    for c in logic.contexts:
        for a, b in itertools.combinations(c.atoms, 2):
            cocontextual.add(frozenset((a, b)))
            ip = abs(np.vdot(rep[a], rep[b]))
            if ip > tol:
                errors.append(f"orthogonality: atoms {a!r} and {b!r} in context "
                              f"{c.name!r} have |<u,v>| = {ip!r}")
    for a, b in itertools.combinations(logic.atom_ids, 2):
        ip = abs(np.vdot(rep[a], rep[b]))
        na, nb = np.linalg.norm(rep[a]), np.linalg.norm(rep[b])
        if na > 0 and nb > 0 and abs(ip - na * nb) <= tol:
            errors.append(f"faithfulness: atoms {a!r} and {b!r} share the same vector")
        elif frozenset((a, b)) not in cocontextual and ip <= tol:
            warnings.append(f"faithfulness: atoms {a!r} and {b!r} share no context "
                            f"but are orthogonal")
    return ValidationReport(tuple(errors), tuple(warnings))
