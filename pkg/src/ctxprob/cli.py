"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (``error: ...`` on stderr),
2 on a usage error.  All results go to stdout.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np

from .classical import (Measure, Undefined, classical_cond_prob_matrix,
                        exotic_cond_prob_matrix, format_fraction, parse_weights)
from .logic import (LogicError, check_orthogonal_rep, intertwines, parse_logic,
                    parse_rep, validate_logic)
from .partition import canonical_partition_labels
from .quantum import (PureState, basis_from_rep, born_cond_prob_matrix,
                      state_probability_vector)
from .states import enumerate_two_valued_states, exotic_half_state, is_separating
from .stochastic import (birkhoff_decompose, classify_stochastic,
                         row_polytope_decompose)
from .urn import UrnSpec, intrinsic_prepare, simulate_cond_prob


@dataclass(frozen=True)
class CommandConfig:
    command: str
    fmt: str
    args: argparse.Namespace


# -- input ----------------------------------------------------------------

def read_input(name: str) -> str:
    """Read a file, falling back to the bundled example of the same name."""
    path = Path(name)
    if path.exists():
        return path.read_text()
    bundled = resources.files("ctxprob") / "data" / path.name
    if bundled.is_file():
        return bundled.read_text()
    raise FileNotFoundError(f"file not found: {name}")


def load_logic(name: str, strict: bool = True):
    return parse_logic(read_input(name), strict=strict)


def load_measure(name: str) -> Measure:
    doc = _json(name)
    if not isinstance(doc, dict) or set(doc) != {"weights"}:
        raise ValueError(f"{name}: measure file needs exactly a 'weights' list")
    return parse_weights(doc["weights"])


def _json(name: str):
    try:
        return json.loads(read_input(name))
    except json.JSONDecodeError as e:
        raise ValueError(f"{name}: syntax error at line {e.lineno}, column {e.colno}: "
                         f"{e.msg}") from None


def _entry(x):
    if isinstance(x, str):
        return Undefined if x.strip() == "0/0" else Fraction(x)
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ValueError(f"bad matrix entry {x!r}")
    return Fraction(x) if isinstance(x, int) else x


def load_matrix(name: str) -> list[list]:
    doc = _json(name)
    if isinstance(doc, dict):
        doc = doc.get("entries")
    if not isinstance(doc, list) or not doc or not all(isinstance(r, list) for r in doc):
        raise ValueError(f"{name}: expected a list of rows or {{\"entries\": [...]}}")
    rows = [[_entry(x) for x in r] for r in doc]
    if any(isinstance(x, float) for r in rows for x in r):
        rows = [[x if x is Undefined else float(x) for x in r] for r in rows]
    return rows


# -- output ---------------------------------------------------------------

def _cell(x) -> str:
    if x is Undefined:
        return "0/0"
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def table(row_labels, col_labels, cells) -> str:
    grid = [[""] + [str(c) for c in col_labels]]
    grid += [[str(r)] + [_cell(x) for x in row] for r, row in zip(row_labels, cells)]
    widths = [max(len(g[k]) for g in grid) for k in range(len(grid[0]))]
    return "\n".join("  ".join(s.rjust(w) for s, w in zip(g, widths)) for g in grid)


def _emit(cfg: CommandConfig, doc: dict, text: str) -> None:
    if cfg.fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# -- commands -------------------------------------------------------------

def cmd_validate(cfg):
    logic = load_logic(cfg.args.logic, strict=False)
    report = validate_logic(logic)
    doc = report.to_dict()
    doc.update({"atoms": len(logic.atoms), "contexts": len(logic.contexts),
                "intertwines": sorted(intertwines(logic))})
    text = "\n".join([f"atoms: {len(logic.atoms)}", f"contexts: {len(logic.contexts)}",
                      f"intertwines: {', '.join(sorted(intertwines(logic))) or '-'}"]
                     + [f"violation: {e}" for e in report.errors]
                     + ["valid" if report.ok else "invalid"])
    _emit(cfg, doc, text)
    if not report.ok:
        raise LogicError("invalid logic: " + "; ".join(report.errors))


def cmd_states(cfg):
    logic = load_logic(cfg.args.logic)
    fam = enumerate_two_valued_states(logic)
    sep = is_separating(fam)
    doc = fam.to_dict()
    doc["separating"] = sep.separating
    text = table(logic.atom_ids, range(1, len(fam) + 1),
                 [[s.bits[k] for s in fam] for k in range(len(logic.atoms))])
    _emit(cfg, doc, text + f"\n{len(fam)} states, separating: {sep.separating}")


def cmd_labels(cfg):
    logic = load_logic(cfg.args.logic)
    labels = canonical_partition_labels(enumerate_two_valued_states(logic))
    doc = labels.to_dict()
    text = "\n".join(f"{a}: {{{','.join(map(str, v))}}}" for a, v in doc["labels"].items())
    _emit(cfg, doc, text)


def _matrix_text(m) -> str:
    return table(m.row_atoms, m.col_atoms, m.entries)


def cmd_condprob(cfg):
    a = cfg.args
    logic = load_logic(a.logic)
    if a.kind == "classical":
        if not a.measure:
            raise ValueError("classical condprob needs --measure")
        labels = canonical_partition_labels(enumerate_two_valued_states(logic))
        m = classical_cond_prob_matrix(labels, load_measure(a.measure), a.rows, a.cols)
        _emit(cfg, m.to_dict(), _matrix_text(m))
    elif a.kind == "exotic":
        m = exotic_cond_prob_matrix(exotic_half_state(logic), a.rows, a.cols)
        _emit(cfg, m.to_dict(), _matrix_text(m) + f"\n({m.rule})")
    else:
        if not a.rep:
            raise ValueError("quantum condprob needs --rep")
        rep = parse_rep(read_input(a.rep))
        b1 = basis_from_rep(logic, rep, a.rows, tol=a.tol)
        b2 = basis_from_rep(logic, rep, a.cols, tol=a.tol)
        m = born_cond_prob_matrix(b1, b2, tol=a.tol)
        c1, c2 = logic.context(a.rows), logic.context(a.cols)
        doc = {"rows": c1.name, "cols": c2.name, "row_atoms": list(c1.atoms),
               "col_atoms": list(c2.atoms), "entries": m.tolist(), "rule": "born"}
        text = table(c1.atoms, c2.atoms, m.tolist())
        if a.psi is not None:
            psi = PureState(np.array([complex(*z) if isinstance(z, list) else complex(z)
                                      for z in json.loads(a.psi)]))
            probs = state_probability_vector(psi, b2).tolist()
            doc["state_probabilities"] = probs
            text += "\nstate: " + "  ".join(_cell(p) for p in probs)
        _emit(cfg, doc, text)


def cmd_check(cfg):
    logic = load_logic(cfg.args.logic)
    rep = parse_rep(read_input(cfg.args.rep))
    report = check_orthogonal_rep(logic, rep, cfg.args.tol)
    text = "\n".join([f"error: {e}" for e in report.errors]
                     + [f"warning: {w}" for w in report.warnings]
                     + ["pass" if report.ok else "fail"])
    _emit(cfg, report.to_dict(), text)
    if not report.ok:
        raise LogicError("orthogonal representation check failed")


def cmd_classify(cfg):
    rows = load_matrix(cfg.args.matrix)
    v = classify_stochastic(rows, cfg.args.tol)
    text = "\n".join(f"{k}: {val}" for k, val in v.to_dict().items())
    _emit(cfg, v.to_dict(), text)


def _decomp_text(d) -> str:
    return "\n".join(f"{_cell(c)}  {list(v)}" for c, v in d.terms) + f"\n{len(d)} terms ({d.kind})"


def cmd_birkhoff(cfg):
    d = birkhoff_decompose(load_matrix(cfg.args.matrix), cfg.args.tol)
    _emit(cfg, d.to_dict(), _decomp_text(d))


def cmd_rowdecomp(cfg):
    d = row_polytope_decompose(load_matrix(cfg.args.matrix))
    _emit(cfg, d.to_dict(), _decomp_text(d))


def cmd_simulate(cfg):
    a = cfg.args
    logic = load_logic(a.logic)
    labels = canonical_partition_labels(enumerate_two_valued_states(logic))
    spec = UrnSpec(labels, load_measure(a.measure), a.seed)
    if (a.prepare is None) != (a.prepare_context is None):
        raise ValueError("--prepare and --prepare-context go together")
    if a.prepare is not None:
        spec = UrnSpec(labels, intrinsic_prepare(spec, a.prepare_context, a.prepare), a.seed)
    emp = simulate_cond_prob(spec, a.row_context, a.col_context, a.N, shards=a.shards)
    exact = classical_cond_prob_matrix(labels, spec.measure, a.row_context, a.col_context)
    dev = 0.0
    for er, xr in zip(emp.estimates, exact.entries):
        for e, x in zip(er, xr):
            if e is not Undefined and x is not Undefined:
                dev = max(dev, abs(e - float(x)))
    doc = emp.to_dict()
    doc["measure"] = spec.measure.to_dict()["weights"]
    doc["exact"] = exact.to_dict()["entries"]
    doc["max_abs_deviation"] = dev
    text = (table(emp.row_atoms, emp.col_atoms, emp.estimates)
            + f"\nexact:\n{_matrix_text(exact)}\nmax abs deviation: {dev:.6g}")
    _emit(cfg, doc, text)


COMMANDS = {"validate": cmd_validate, "states": cmd_states, "labels": cmd_labels,
            "condprob": cmd_condprob, "check": cmd_check, "classify": cmd_classify,
            "birkhoff": cmd_birkhoff, "rowdecomp": cmd_rowdecomp, "simulate": cmd_simulate}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
    common.add_argument("--tol", type=float, default=1e-10)

    p = argparse.ArgumentParser(prog="ctxprob", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check a logic file")
    s.add_argument("--logic", required=True)
    s = sub.add_parser("states", parents=[common], help="enumerate two-valued states")
    s.add_argument("--logic", required=True)
    s = sub.add_parser("labels", parents=[common], help="canonical partition labels")
    s.add_argument("--logic", required=True)

    s = sub.add_parser("condprob", parents=[common], help="conditional-probability matrix")
    s.add_argument("kind", choices=("classical", "quantum", "exotic"))
    s.add_argument("--logic", required=True)
    s.add_argument("--rows", required=True, help="conditioning context")
    s.add_argument("--cols", required=True, help="outcome context")
    s.add_argument("--measure")
    s.add_argument("--rep")
    s.add_argument("--psi", help="JSON state vector, e.g. '[1,0,0]'")

    s = sub.add_parser("check", parents=[common], help="check an orthogonal representation")
    s.add_argument("--logic", required=True)
    s.add_argument("--rep", required=True)

    for name, helptext in (("classify", "row/doubly stochastic classification"),
                           ("birkhoff", "decompose into permutation matrices"),
                           ("rowdecomp", "decompose into one-1-per-row vertices")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--matrix", required=True)

    s = sub.add_parser("simulate", parents=[common], help="generalized urn simulation")
    s.add_argument("--logic", required=True)
    s.add_argument("--measure", required=True)
    s.add_argument("--row-context", required=True)
    s.add_argument("--col-context", required=True)
    s.add_argument("-N", type=int, default=1_000_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--prepare")
    s.add_argument("--prepare-context")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = CommandConfig(args.command, args.fmt, args)
    try:
        COMMANDS[cfg.command](cfg)
    except (LogicError, ValueError, OSError, IndexError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
