import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ctxprob import (Logic, LogicError, brute_force_two_valued_states,
                     enumerate_two_valued_states, exotic_half_state, is_separating,
                     parse_logic)
from ctxprob.states import StateFamily, TwoValuedState

from conftest import CORPUS, load


@pytest.mark.parametrize("name, count", [("square", 4), ("firefly", 5),
                                         ("pentagon", 11), ("triangle", 4)])
def test_state_counts(name, count):
    assert len(enumerate_two_valued_states(load(name))) == count


def test_every_state_has_one_true_atom_per_context(corpus_logic):
    for s in enumerate_two_valued_states(corpus_logic):
        for c in corpus_logic.contexts:
            assert sum(s[a] for a in c.atoms) == 1


def test_firefly_order_is_descending_lexicographic(firefly):
    fam = enumerate_two_valued_states(firefly)
    bits = [s.bits for s in fam]
    assert bits == sorted(bits, reverse=True)
    assert fam[1].values == {"e1": 1, "e2": 0, "h": 0, "f1": 1, "f2": 0}
    assert fam[5].values == {"e1": 0, "e2": 0, "h": 1, "f1": 0, "f2": 0}
    with pytest.raises(IndexError):
        fam[0]


@pytest.mark.parametrize("name", CORPUS)
def test_backtracking_matches_brute_force(name):
    logic = load(name)
    assert enumerate_two_valued_states(logic) == brute_force_two_valued_states(logic)


@st.composite
def small_logics(draw):
    pool = [f"x{i}" for i in range(draw(st.integers(2, 10)))]
    contexts, seen = [], []
    for k in range(draw(st.integers(1, 5))):
        members = draw(st.lists(st.sampled_from(pool), min_size=2, max_size=4, unique=True))
        if any(len(set(members) & set(m)) > 1 for m in seen):
            continue
        seen.append(members)
        contexts.append((f"K{k}", members))
    return Logic.from_contexts(contexts)


@settings(max_examples=200, deadline=None)
@given(small_logics())
def test_backtracking_matches_brute_force_random(logic):
    fast = enumerate_two_valued_states(logic)
    assert fast == brute_force_two_valued_states(logic)
    assert len(set(fast.states)) == len(fast)


def test_zero_state_logic_gives_empty_family():
    # odd cycle of two-atom contexts admits no two-valued state
    logic = Logic.from_contexts([("A", ["x", "y"]), ("B", ["y", "z"]), ("C", ["z", "x"])])
    fam = enumerate_two_valued_states(logic)
    assert len(fam) == 0
    report = is_separating(fam)
    assert not report.separating
    assert len(report.non_separated) == 3


def test_separating(firefly, pentagon):
    assert is_separating(enumerate_two_valued_states(firefly)).separating
    fam = enumerate_two_valued_states(pentagon)
    report = is_separating(fam)
    assert report.separating and report.non_separated == ()
    # brute force over the 45 atom pairs
    ids = pentagon.atom_ids
    pairs = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]]
    assert len(pairs) == 45
    assert all(any(s[a] != s[b] for s in fam) for a, b in pairs)


def test_single_state_family_separates_its_pair():
    logic = Logic.from_contexts([("C", ["a", "b"])])
    fam = StateFamily(logic, (TwoValuedState(("a", "b"), (1, 0)),))
    assert is_separating(fam).separating


def test_half_state_pentagon(pentagon):
    s = exotic_half_state(pentagon)
    half = Fraction(1, 2)
    for k in range(1, 6):
        assert s[f"c{k}"] == half and s[f"m{k}"] == 0
    for c in pentagon.contexts:
        assert sum(s[a] for a in c.atoms) == 1


def test_half_state_triangle(triangle):
    s = exotic_half_state(triangle)
    for c in triangle.contexts:
        assert sum(s[a] for a in c.atoms) == 1
        assert [s[a] for a in c.atoms] == [Fraction(1, 2), 0, Fraction(1, 2)]


def test_half_state_rejects_other_shapes(square, firefly):
    for logic in (square, firefly):
        with pytest.raises(LogicError):
            exotic_half_state(logic)
    square4 = parse_logic(json.dumps({"contexts": [
        {"name": f"C{k}", "atoms": [f"c{k}", f"m{k}", f"c{k % 4 + 1}"]} for k in range(1, 5)]}))
    with pytest.raises(LogicError, match="odd"):
        exotic_half_state(square4)
    # two disjoint triangles: 6 contexts is even, so use 3 + 3 + 3 = 9 with three cycles
    ctxs = []
    for t in range(3):
        for k in range(3):
            ctxs.append((f"T{t}{k}", [f"c{t}{k}", f"m{t}{k}", f"c{t}{(k + 1) % 3}"]))
    with pytest.raises(LogicError, match="single cycle"):
        exotic_half_state(Logic.from_contexts(ctxs))
