"""Command-line surface.

Subcommands: validate, operators, induce, recover, iterate, witnesses,
fixpoints, oracle, dot.  Exit status: 0 on success or PASS, 1 on a
NOT-RECOVERED, FAIL, or not-converged verdict, 2 on input errors.
"""

from __future__ import annotations

import argparse
import sys

from .dot import hasse_dot, operator_dot, relation_dot
from .errors import InputError
from .fixpoint import enumerate_fixpoints, iterate
from .induction import (recoverability, uniform_witness_lower,
                        uniform_witness_upper)
from .operators import OperatorTable, lower_operator, upper_operator
from .oracle import OracleConfig, run_suites
from .systemio import load_system


def _print_table(table: OperatorTable) -> None:
    width = max(len(name) for name, _ in table.items)
    for name, vec, match in table.named_entries():
        line = f"{table.kind} {name:<{width}} = {' '.join(vec)}"
        if match is not None:
            line += f"  # {match}"
        print(line)


def _print_relation(frame, header: str) -> None:
    print(f"{header} ({len(frame.pairs)} pairs)")
    for s, t in frame.sorted_pairs():
        print(f"rel {s} {t}")


def _pair_list(frame, pairs) -> str:
    idx = {s: i for i, s in enumerate(frame.states)}
    ordered = sorted(pairs, key=lambda p: (idx[p[0]], idx[p[1]]))
    return " ".join(f"({s},{t})" for s, t in ordered)


def _cmd_validate(args) -> int:
    desc = load_system(args.file)
    print(f"system {desc.name}: OK")
    print(f"lattice {desc.lattice.name} ({len(desc.lattice)} elements), "
          f"{len(desc.states)} states, {len(desc.propositions)} propositions, "
          f"{len(desc.frame.pairs)} transition pairs")
    return 0


def _cmd_operators(args) -> int:
    desc = load_system(args.file)
    which = "both"
    if args.upper:
        which = "upper"
    elif args.lower:
        which = "lower"
    if which in ("upper", "both"):
        _print_table(upper_operator(desc.frame, desc.propositions))
    if which in ("lower", "both"):
        _print_table(lower_operator(desc.frame, desc.poset_a))
    return 0


def _cmd_induce(args) -> int:
    desc = load_system(args.file)
    report = recoverability(desc.frame, desc.poset_a, desc.propositions)
    _print_relation(report.upper_induced, "induced upper relation")
    _print_relation(report.lower_induced, "induced lower relation")
    return 0


def _cmd_recover(args) -> int:
    desc = load_system(args.file)
    report = recoverability(desc.frame, desc.poset_a, desc.propositions)
    for side, recovered, delta in (
            ("upper", report.upper_recovered, report.upper_delta),
            ("lower", report.lower_recovered, report.lower_delta)):
        if recovered:
            print(f"{side}: RECOVERED")
        else:
            print(f"{side}: NOT RECOVERED (+{len(delta.added)} pairs: "
                  f"{_pair_list(desc.frame, delta.added)})")
            idx = {s: i for i, s in enumerate(desc.states)}
            for s, t in sorted(delta.added, key=lambda p: (idx[p[0]], idx[p[1]])):
                print(f"extra {s} {t}")
    return 0 if report.recovered else 1


def _cmd_iterate(args) -> int:
    desc = load_system(args.file)
    trace = iterate(desc.frame, desc.poset_a, desc.propositions,
                    schedule=args.schedule, first=args.first,
                    max_steps=args.max_steps)
    _print_relation(trace.initial, "step 0 initial")
    for k, record in enumerate(trace.steps, 1):
        added = _pair_list(desc.frame, record.added) if record.added else "none"
        print(f"step {k} {record.kind} added: {added}")
    if trace.converged:
        print(f"converged after {trace.steps_taken} steps "
              f"({trace.productive_steps} productive)")
        _print_relation(trace.final, "fixpoint")
        return 0
    print(f"not converged within {trace.steps_taken} steps")
    return 1


def _cmd_witnesses(args) -> int:
    desc = load_system(args.file)
    upper = uniform_witness_upper(desc.frame, desc.propositions)
    lower = uniform_witness_lower(desc.frame, desc.poset_a)
    print("upper witnesses (one separating row per target state)")
    for t in desc.states:
        print(f"  t={t}: {upper.witnesses.get(t, 'FAIL (no row separates)')}")
    print("upper certification: "
          + ("COMPLETE (relation equals its upper-induced relation)"
             if upper.certified else
             "INCOMPLETE (failed: " + " ".join(upper.failures) + ")"))
    print("lower witnesses (one separating row per source state)")
    for s in desc.states:
        print(f"  s={s}: {lower.witnesses.get(s, 'FAIL (no row separates)')}")
    print("lower certification: "
          + ("COMPLETE (relation equals its lower-induced relation)"
             if lower.certified else
             "INCOMPLETE (failed: " + " ".join(lower.failures) + ")"))
    return 0 if upper.certified and lower.certified else 1


def _cmd_fixpoints(args) -> int:
    desc = load_system(args.file)
    found = enumerate_fixpoints(desc.states, desc.poset_a, desc.propositions,
                                cap=args.cap)
    print(f"{len(found)} fixpoints of the upper induction step")
    for k, frame in enumerate(found):
        pairs = _pair_list(frame, frame.pairs) or "(empty)"
        print(f"fixpoint {k}: {pairs}")
    return 0


def _cmd_oracle(args) -> int:
    config = OracleConfig(max_states=max(3, min(args.states, 4)), seed=args.seed)
    results = run_suites(config, args.states, args.suite)
    failed = False
    for result in results:
        print(result.line())
        if not result.passed:
            failed = True
            if result.counterexample:
                print(result.counterexample)
    return 1 if failed else 0


def _cmd_dot(args) -> int:
    desc = load_system(args.file)
    if args.what == "relation":
        sys.stdout.write(relation_dot(desc.frame, desc.name))
    elif args.what == "hasse":
        sys.stdout.write(hasse_dot(desc.propositions, f"{desc.name}_order"))
    elif args.what == "upper":
        sys.stdout.write(operator_dot(upper_operator(desc.frame, desc.propositions)))
    else:
        sys.stdout.write(operator_dot(lower_operator(desc.frame, desc.poset_a)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transop",
        description="Transition operators over finite-lattice proposition systems")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a system file and run all invariants")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("operators", help="print the operator tables")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--upper", action="store_true")
    group.add_argument("--lower", action="store_true")
    group.add_argument("--both", action="store_true")
    p.set_defaults(func=_cmd_operators)

    p = sub.add_parser("induce", help="print both induced relations")
    p.add_argument("file")
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser("recover", help="compare the relation with its induced relations")
    p.add_argument("file")
    p.set_defaults(func=_cmd_recover)

    p = sub.add_parser("iterate", help="iterate induction steps to a fixpoint")
    p.add_argument("file")
    p.add_argument("--schedule", choices=("alternating", "upper", "lower"),
                   default="alternating")
    p.add_argument("--first", choices=("upper", "lower"), default="upper")
    p.add_argument("--max-steps", type=int, default=None)
    p.set_defaults(func=_cmd_iterate)

    p = sub.add_parser("witnesses", help="search for separating rows per state")
    p.add_argument("file")
    p.set_defaults(func=_cmd_witnesses)

    p = sub.add_parser("fixpoints", help="enumerate relations fixed by upper induction")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=3)
    p.set_defaults(func=_cmd_fixpoints)

    p = sub.add_parser("oracle", help="exhaustive verification sweeps")
    p.add_argument("--states", type=int, default=2)
    p.add_argument("--suite", choices=("theorem3", "theorem4", "lemma2", "all"),
                   default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("dot", help="emit DOT text")
    p.add_argument("file")
    p.add_argument("--what", choices=("relation", "hasse", "upper", "lower"),
                   default="relation")
    p.set_defaults(func=_cmd_dot)

    return parser


def cli_dispatch(argv=None) -> int:
    """Run one command; returns the exit status instead of raising SystemExit."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return cli_dispatch(argv)
