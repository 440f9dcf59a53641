"""CLI golden files and CLI/library agreement.

Set ``UPDATE_GOLDEN=1`` to rewrite the expected outputs.
"""
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from ctxprob import (Measure, canonical_partition_labels, classical_cond_prob_matrix,
                     enumerate_two_valued_states, exotic_cond_prob_matrix,
                     exotic_half_state, birkhoff_decompose)
from ctxprob.cli import load_matrix, main

from conftest import load

GOLDEN = Path(__file__).parent / "golden"
INPUTS = GOLDEN / "inputs"

CASES = {
    "validate_pentagon": ["validate", "--logic", "pentagon.json"],
    "states_firefly": ["states", "--logic", "firefly.json"],
    "states_square_table": ["states", "--logic", "square.json", "--format", "table"],
    "labels_pentagon": ["labels", "--logic", "pentagon.json"],
    "classical_firefly_singular": ["condprob", "classical", "--logic", "firefly.json",
                                   "--measure", "singular1.json", "--rows", "C2", "--cols", "C1"],
    "classical_firefly_singular_table": ["condprob", "classical", "--logic", "firefly.json",
                                         "--measure", "singular1.json", "--rows", "C2",
                                         "--cols", "C1", "--format", "table"],
    "classical_pentagon_uniform": ["condprob", "classical", "--logic", "pentagon.json",
                                   "--measure", "uniform11.json", "--rows", "C5", "--cols", "C2"],
    "exotic_pentagon": ["condprob", "exotic", "--logic", "pentagon.json",
                        "--rows", "C1", "--cols", "C3"],
    "quantum_firefly_table": ["condprob", "quantum", "--logic", "firefly.json", "--rep",
                              "firefly_rep.json", "--rows", "C1", "--cols", "C2",
                              "--psi", "[1, 0, 0]", "--format", "table"],
    "check_firefly": ["check", "--logic", "firefly.json", "--rep", "firefly_rep.json"],
    "classify_eq7": ["classify", "--matrix", str(INPUTS / "eq7_partial.json")],
    "birkhoff_firefly": ["birkhoff", "--matrix", str(INPUTS / "firefly_uniform_matrix.json")],
    "birkhoff_float": ["birkhoff", "--matrix", str(INPUTS / "float_ds.json")],
    "rowdecomp_notdouble": ["rowdecomp", "--matrix", str(INPUTS / "notdouble.json")],
    "simulate_firefly": ["simulate", "--logic", "firefly.json", "--measure", "uniform5.json",
                         "--row-context", "C1", "--col-context", "C2", "-N", "1000",
                         "--seed", "42"],
    "simulate_prepared": ["simulate", "--logic", "firefly.json", "--measure", "uniform5.json",
                          "--row-context", "C1", "--col-context", "C2", "-N", "1000",
                          "--seed", "42", "--prepare", "e1", "--prepare-context", "C1"],
}


def run(argv, capsys):
    status = main(argv)
    out = capsys.readouterr()
    return status, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    status, out, err = run(CASES[name], capsys)
    assert status == 0, err
    path = GOLDEN / f"{name}.txt"
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()


def test_json_is_stable(capsys):
    outs = {run(CASES["classical_pentagon_uniform"], capsys)[1] for _ in range(3)}
    assert len(outs) == 1


def test_cli_matches_library(capsys):
    labels = canonical_partition_labels(enumerate_two_valued_states(load("firefly")))
    m = classical_cond_prob_matrix(labels, Measure.point(5, 1), "C2", "C1")
    assert json.loads(run(CASES["classical_firefly_singular"], capsys)[1]) == m.to_dict()

    m = exotic_cond_prob_matrix(exotic_half_state(load("pentagon")), "C1", "C3")
    assert json.loads(run(CASES["exotic_pentagon"], capsys)[1]) == m.to_dict()

    d = birkhoff_decompose(load_matrix(str(INPUTS / "firefly_uniform_matrix.json")))
    assert json.loads(run(CASES["birkhoff_firefly"], capsys)[1]) == d.to_dict()

    fam = enumerate_two_valued_states(load("firefly"))
    doc = json.loads(run(CASES["states_firefly"], capsys)[1])
    assert doc["states"] == fam.to_dict()["states"] and len(doc["states"]) == 5


def test_singular_table_shows_undefined(capsys):
    status, out, _ = run(CASES["classical_firefly_singular_table"], capsys)
    assert status == 0 and "0/0" in out


@pytest.mark.parametrize("argv, message", [
    (["birkhoff", "--matrix", str(INPUTS / "notdouble.json")], "error: not doubly stochastic"),
    (["states", "--logic", "nowhere.json"], "error: file not found"),
    (["validate", "--logic", str(INPUTS / "overlap.json")], "error: invalid logic"),
    (["states", "--logic", str(INPUTS / "overlap.json")], "error: overlap>1"),
    (["condprob", "exotic", "--logic", "square.json", "--rows", "C1", "--cols", "C2"],
     "error: not an odd cyclic pasting"),
    (["condprob", "classical", "--logic", "firefly.json", "--measure", "uniform4.json",
      "--rows", "C1", "--cols", "C2"], "error: measure has 4 weights"),
    (["condprob", "classical", "--logic", "firefly.json", "--measure", "uniform5.json",
      "--rows", "C1", "--cols", "C7"], "error: unknown context"),
    (["rowdecomp", "--matrix", str(INPUTS / "eq7_partial.json")], "error: undefined entries"),
    (["simulate", "--logic", "firefly.json", "--measure", "singular1.json", "--row-context",
      "C1", "--col-context", "C2", "--prepare", "e2", "--prepare-context", "C1"],
     "error: atom 'e2' has probability zero"),
])
def test_domain_errors(argv, message, capsys):
    status, _, err = run(argv, capsys)
    assert status == 1
    assert err.startswith(message)
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["states"],
                                  ["states", "--logic", "firefly.json", "--bogus"]])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "ctxprob.cli", "states", "--logic",
                           "pentagon.json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["states"]) == 11
