"""Command-line interface: ``pamlab <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error (bad flag, unknown pattern literal, malformed permutation).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .characterizations import CHARACTERIZING_PATTERNS, pair_key, violated_pattern
from .machine import is_sortable, parse_machine, run_stack
from .patterns import brute_contains, contains, find_barred_violation, find_occurrence, format_pattern, parse_pattern
from .perm import PartialPermutation, format_values, parse_partial_permutation, parse_permutation

# reference sequence attached by default when counting these machines
KNOWN_REFERENCE = {
    pair_key("132,231"): "large-schroeder",
    pair_key("123,213"): "catalan",
    pair_key("132,312"): "catalan",
    pair_key("231,321"): "catalan",
    pair_key("123,132"): "catalan",
    pair_key("123,312"): "binomial-transform-catalan",
}


class UsageError(Exception):
    pass


def _machine(text):
    try:
        return parse_machine(text)
    except ValueError as e:
        raise UsageError(f"bad --machine {text!r}: {e}") from None


def _perm(text):
    try:
        if " of " in f" {text} ":
            return parse_partial_permutation(text)
        return parse_permutation(text)
    except ValueError as e:
        raise UsageError(f"bad permutation {text!r}: {e}") from None


def _show(seq) -> str:
    vals = seq.values if isinstance(seq, PartialPermutation) else tuple(seq)
    return format_values(vals)


def _pair_of(config):
    try:
        return pair_key(config.patterns)
    except (TypeError, ValueError):
        return None


# -- commands ------------------------------------------------------------------

def cmd_trace(args) -> int:
    config = _machine(args.machine)
    perm = _perm(args.perm)
    out, trace = run_stack(perm, config)
    sortable = is_sortable(perm, config)
    if args.format == "json":
        doc = {
            "machine": [format_pattern(s) for s in config.forbidden],
            "input": _show(perm),
            "states": [{"out": _show(r), "stack": _show(s), "in": _show(t)} for r, s, t in trace.states],
            "operations": trace.operations,
            "output": _show(out),
            "sortable": sortable,
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"machine={config} input={_show(perm)} sortable={str(sortable).lower()}")
    for step, (r, s, t) in enumerate(trace.states):
        op = trace.operations[step - 1] if step else "-"
        print(f"{step:>3} {op} out={_show(r) or 'λ'} stack={_show(s) or 'λ'} in={_show(t) or 'λ'}")
    print(f"output={_show(out)}")
    return 0


def cmd_sortable(args) -> int:
    config = _machine(args.machine)
    perm = _perm(args.perm)
    out, _ = run_stack(perm, config)
    if is_sortable(perm, config):
        print("SORTABLE")
        return 0
    key = _pair_of(config)
    reason = None
    if key in CHARACTERIZING_PATTERNS and not isinstance(perm, PartialPermutation):
        spec = violated_pattern(tuple(perm), key)
        if spec is not None:
            reason = f"contains {format_pattern(spec)}"
    if reason is None:
        reason = f"output {_show(out)} contains 231"
    print(f"NOT SORTABLE ({reason})")
    return 0


def _emit_table(table, fmt):
    if fmt == "json":
        print(json.dumps(table.to_json(), indent=2))
    elif fmt == "grid":
        print(table.to_grid())
    else:
        sys.stdout.write(table.to_csv())


def cmd_count(args) -> int:
    config = _machine(args.machine)
    reference = args.reference
    if reference is None and not args.no_reference:
        key = _pair_of(config)
        if args.by_first:
            reference = "catalan-triangle" if key == pair_key("123,132") else None
        else:
            reference = KNOWN_REFERENCE.get(key)
    try:
        table = harness.count_table(config, args.max_n, args.by_first, reference, args.offset, args.workers)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit_table(table, args.format)
    return 0 if table.ok else 1


def cmd_distribution(args) -> int:
    args.by_first = True
    if args.format is None:
        args.format = "csv"
    return cmd_count(args)


def cmd_verify(args) -> int:
    try:
        rep = harness.verify_characterization(args.pair, args.max_n, workers=args.workers)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(json.dumps(rep.to_json(), indent=2) if args.format == "json" else rep.to_text())
    return 0 if rep.ok else 1


def cmd_bijection(args) -> int:
    try:
        rep = harness.verify_bijection(args.check, args.max_n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(json.dumps(rep.to_json(), indent=2) if args.format == "json" else rep.to_text())
    return 0 if rep.ok else 1


def cmd_oracle(args) -> int:
    try:
        spec = parse_pattern(args.pattern)
    except ValueError as e:
        raise UsageError(str(e)) from None
    host = _perm(args.perm)
    if spec.kind == "special" and not isinstance(host, PartialPermutation):
        host = PartialPermutation(tuple(host), len(host))
    try:
        fast = contains(host, spec)
        brute = brute_contains(host, spec)
    except ValueError as e:
        raise UsageError(str(e)) from None
    verdict = "CONTAINS" if fast else "AVOIDS"
    shown = str(host) if isinstance(host, PartialPermutation) else _show(host)
    line = f"{verdict} {format_pattern(spec)} in {shown} (fast={_word(fast)} brute={_word(brute)})"
    if fast and spec.kind in ("classical", "prefix-anchored"):
        occ = find_occurrence(host, spec.body, spec.anchored)
        line += f" witness positions {' '.join(str(i + 1) for i in occ)}"
    elif fast and spec.kind == "barred-prefix":
        occ = find_barred_violation(host, spec)
        line += f" unextendable positions {' '.join(str(i + 1) for i in occ)}"
    print(line)
    if fast != brute:
        print("DISAGREEMENT between fast path and brute force")
        return 1
    return 0


def _word(b: bool) -> str:
    return "contains" if b else "avoids"


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pamlab", description="Pattern-avoiding two-stack sorting machines.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("trace", help="state-of-passing trace of one permutation")
    t.add_argument("--machine", required=True, help="comma-separated stack patterns, e.g. 123,132")
    t.add_argument("--perm", required=True)
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_trace)

    s = sub.add_parser("sortable", help="sortability verdict with a reason")
    s.add_argument("--machine", required=True)
    s.add_argument("--perm", required=True)
    s.set_defaults(func=cmd_sortable)

    for name, func, helptext in (
        ("count", cmd_count, "count sortable permutations by length"),
        ("distribution", cmd_distribution, "distribution of the first entry among sortable permutations"),
    ):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("--machine", required=True)
        c.add_argument("--max-n", type=int, required=True)
        c.add_argument("--reference", choices=harness.SEQUENCE_NAMES)
        c.add_argument("--offset", type=int)
        c.add_argument("--no-reference", action="store_true", help="do not attach the default reference")
        c.add_argument("--workers", type=int, default=1)
        if name == "count":
            c.add_argument("--by-first", action="store_true")
            c.add_argument("--format", choices=("csv", "json"), default="csv")
        else:
            c.add_argument("--format", choices=("csv", "json", "grid"))
        c.set_defaults(func=func)

    v = sub.add_parser("verify", help="simulation vs characterizations, exhaustively")
    v.add_argument("--pair", required=True)
    v.add_argument("--max-n", type=int, default=9)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bijection", help="exhaustive bijection checks")
    b.add_argument("--check", required=True, choices=tuple(harness.BIJECTION_CHECKS))
    b.add_argument("--max-n", type=int, required=True)
    b.add_argument("--format", choices=("text", "json"), default="text")
    b.set_defaults(func=cmd_bijection)

    o = sub.add_parser("oracle", help="pattern containment, fast path and brute force")
    o.add_argument("--pattern", required=True)
    o.add_argument("--perm", required=True)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"pamlab {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
