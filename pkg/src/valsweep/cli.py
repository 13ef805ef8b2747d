"""Command-line front end with a canonical machine-readable report.

Every subcommand validates its flags, runs the computation, and prints a
single report on stdout (JSON is the canonical form; text is a projection
of the same payload).  Timing goes to stderr so identical invocations
produce byte-identical stdout.  Exit codes: 0 success, 1 usage or config
error, 2 falsified (the sweep found a regular ring below).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from math import isqrt
from typing import Any

from . import counterexample as cx
from .qfield import QFieldError, convergents, tau_from_a
from .quotient import (DiagonalAction, QuotientError, invariant_generators,
                       pi1_order, ramification_minors)
from .toric import ToricError, below_ring_regularity, hilbert_basis_2d, smith_normal_form
from .transform import TransformState, run_sequence
from .valuation import MonomialValuation, ValuationError, ValueElement

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FALSIFIED = 2


class UsageError(ValueError):
    pass


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    verdict: str

    def payload(self) -> dict[str, Any]:
        return {"schema_version": SCHEMA_VERSION, "command": self.command,
                "inputs": self.inputs, "results": self.results,
                "verdict": self.verdict}

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload(), sort_keys=True, indent=2)
        lines = [f"command: {self.command}", f"verdict: {self.verdict}", "inputs:"]
        for k in sorted(self.inputs):
            lines.append(f"  {k}: {self.inputs[k]}")
        lines.append("results:")
        lines.extend(_render_text(self.results, "  "))
        return "\n".join(lines)


def _render_text(value: Any, indent: str) -> list[str]:
    lines = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}{k}:")
                lines.extend(_render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
    elif isinstance(value, list):
        for v in value:
            lines.append(f"{indent}- {json.dumps(v, sort_keys=True)}")
    return lines


def parse_matrix(text: str) -> list[list[int]]:
    entries = []
    for pos, tok in enumerate(text.split(",")):
        try:
            entries.append(int(tok.strip()))
        except ValueError:
            raise UsageError(f"--matrix: entry {pos} ({tok!r}) is not an integer")
    n = isqrt(len(entries))
    if n * n != len(entries) or n == 0:
        raise UsageError(f"--matrix: {len(entries)} entries do not form a square matrix")
    return [entries[i * n:(i + 1) * n] for i in range(n)]


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for this subcommand")


def _value_json(v: ValueElement) -> dict[str, int]:
    return {"i": v.i, "j": v.j, "n": v.n}


def _quad_json(x) -> dict[str, int]:
    return {"s": x.s, "t": x.t, "r": x.r, "d": x.d}


def cmd_tau(args) -> Report:
    _require(args, "a")
    tau = tau_from_a(args.a)
    res = {"tau": _quad_json(tau),
           "satisfies": f"t^2 - {args.a}*t - {args.a} = 0",
           "floor": tau.floor()}
    return Report("tau", {"a": args.a}, res, "Verified")


def cmd_convergents(args) -> Report:
    _require(args, "a")
    count = args.steps if args.steps is not None else 10
    tau = tau_from_a(args.a)
    cs = convergents(tau, count)
    unimodular = all(cs[k - 1].f * cs[k].g - cs[k].f * cs[k - 1].g in (-1, 1)
                     for k in range(1, len(cs)))
    res = {"tau": _quad_json(tau),
           "convergents": [[c.f, c.g] for c in cs],
           "unimodular": unimodular}
    return Report("convergents", {"a": args.a, "count": count}, res,
                  "Verified" if unimodular else "Falsified")


def _standard_valuation(a: int) -> MonomialValuation:
    tau = tau_from_a(a)
    return MonomialValuation(ValueElement.make(0, 1, 1, tau),
                             ValueElement.make(1, 0, 1, tau))


def cmd_value(args) -> Report:
    _require(args, "a", "matrix")
    flat = [x for row in parse_matrix(args.matrix) for x in row]
    support = [(flat[i], flat[i + 1]) for i in range(0, len(flat), 2)]
    val = _standard_valuation(args.a)
    res_val = val.value_of(support)
    res = {"support": sorted(map(list, support)), "value": _value_json(res_val)}
    return Report("value", {"a": args.a, "matrix": args.matrix}, res, "Verified")


def cmd_transform(args) -> Report:
    _require(args, "a")
    steps = args.steps if args.steps is not None else 10
    tau = tau_from_a(args.a)
    initial = TransformState(((1, 0), (0, 1)),
                             (ValueElement.make(0, 1, 1, tau),
                              ValueElement.make(1, 0, 1, tau)))
    states = run_sequence(initial, steps)
    det0 = states[0].det
    records = []
    for k, st in enumerate(states):
        records.append({"step_index": k,
                        "A": [list(st.a[0]), list(st.a[1])],
                        "det": st.det,
                        "branch": st.step_log[-1].value if st.step_log else None})
    ok = all(st.det == det0 for st in states)
    return Report("transform", {"a": args.a, "steps": steps},
                  {"states": records, "det_constant": ok},
                  "Verified" if ok else "Falsified")


def cmd_snf(args) -> Report:
    _require(args, "matrix")
    a = parse_matrix(args.matrix)
    form = smith_normal_form(a)
    quotient = " + ".join(f"Z/{d}" for d in form.quotient_invariants()) or "0"
    res = {"U": form.u.tolist(), "D": form.d.tolist(), "V": form.v.tolist(),
           "diagonal": form.diagonal(), "quotient": quotient}
    return Report("snf", {"matrix": args.matrix}, res, "Verified")


def cmd_hilbert(args) -> Report:
    _require(args, "matrix")
    a = parse_matrix(args.matrix)
    if len(a) != 2:
        raise UsageError("--matrix: hilbert expects two 2D rays (4 entries)")
    basis = hilbert_basis_2d(((a[0][0], a[0][1]), (a[1][0], a[1][1])))
    res = {"rays": [list(r) for r in basis.rays],
           "generators": sorted(map(list, basis.generators)),
           "count": len(basis)}
    return Report("hilbert", {"matrix": args.matrix}, res, "Verified")


def cmd_regularity(args) -> Report:
    _require(args, "matrix")
    a = parse_matrix(args.matrix)
    if len(a) != 2:
        raise UsageError("--matrix: regularity expects a 2x2 matrix")
    verdict = below_ring_regularity(a)
    res = {"regularity": verdict.label, "embedding_dim": verdict.embedding_dim,
           "det": verdict.det}
    return Report("regularity", {"matrix": args.matrix}, res, "Verified")


def cmd_lemma5(args) -> Report:
    _require(args, "order", "a", "b")
    action = DiagonalAction(args.order, args.a, args.b)
    full, minimal = invariant_generators(action)
    res = {"full_generators": sorted(map(list, full)),
           "minimal_generators": sorted(map(list, minimal)),
           "pi1": pi1_order(action)}
    if action.a != 0 and action.b != 0:
        wit = ramification_minors(action)
        res["ramification_witnesses"] = {
            "coefficient": wit.coefficient,
            "x_power": list(wit.x_witness), "y_power": list(wit.y_witness)}
    return Report("lemma5", {"order": args.order, "a": args.a, "b": args.b},
                  res, "Verified")


def cmd_counterexample(args) -> Report:
    _require(args, "q", "p")
    config = cx.InstanceConfig(q=args.q, p=args.p,
                               m=args.m if args.m is not None else 3,
                               n=args.n if args.n is not None else 3,
                               steps=args.steps if args.steps is not None else 25)
    instance = cx.build(config)
    charts = cx.validate_surface(config)
    inject = None
    if args.corrupt_step is not None:
        inject = {("nu1", args.corrupt_step): ((1, 0), (0, 1))}
    sweep = cx.singularity_sweep(instance, config.steps, inject=inject)
    results: dict[str, Any] = {
        "tau": _quad_json(instance.tau),
        "epsilon": _quad_json(instance.epsilon),
        "charts": [{"chart": c.chart, "u_correction": list(c.u_correction),
                    "v_correction": list(c.v_correction)} for c in charts],
        "steps": [{"branch": r.branch, "step": r.step,
                   "A": [list(r.matrix[0]), list(r.matrix[1])], "det": r.det,
                   "regularity": "Regular" if r.regular else "Singular",
                   "embedding_dim": r.embedding_dim} for r in sweep.records],
    }
    if sweep.verdict is cx.Verdict.VERIFIED:
        contradiction = cx.contradiction_report(instance, config.steps)
        results["pi1_orders"] = dict(sorted(contradiction.orders.items()))
        results["conflict"] = contradiction.conflict
        return Report("counterexample", _cx_inputs(config), results, "Verified")
    results["falsification"] = sweep.falsification
    return Report("counterexample", _cx_inputs(config), results, "Falsified")


def _cx_inputs(config: cx.InstanceConfig) -> dict[str, Any]:
    return {"q": config.q, "p": config.p, "m": config.m, "n": config.n,
            "steps": config.steps}


COMMANDS = {
    "tau": cmd_tau,
    "convergents": cmd_convergents,
    "value": cmd_value,
    "transform": cmd_transform,
    "snf": cmd_snf,
    "hilbert": cmd_hilbert,
    "regularity": cmd_regularity,
    "lemma5": cmd_lemma5,
    "counterexample": cmd_counterexample,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valsweep",
        description="Exact verification of monomial valuations, quadratic "
                    "transform sweeps, lattice quotients and cyclic invariant rings.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--q", type=int)
    parser.add_argument("--p", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--steps", type=int)
    parser.add_argument("--a", type=int)
    parser.add_argument("--b", type=int)
    parser.add_argument("--order", type=int)
    parser.add_argument("--matrix", type=str,
                        help="row-major comma-separated integer entries")
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--corrupt-step", type=int, dest="corrupt_step",
                        help="self-test: inject a unimodular matrix at this sweep "
                             "step to exercise the falsification channel")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.monotonic()
    try:
        report = COMMANDS[args.command](args)
    except (UsageError, QFieldError, ValuationError, ToricError, QuotientError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except cx.ConfigError as exc:
        print(f"error: violated constraint [{exc.constraint}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = (time.monotonic() - start) * 1000.0
    print(report.render(args.format))
    print(f"timing_ms: {elapsed_ms:.1f}", file=sys.stderr)
    return EXIT_FALSIFIED if report.verdict == "Falsified" else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
