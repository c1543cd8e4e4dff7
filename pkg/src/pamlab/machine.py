"""Greedy pattern-avoiding stacks and the two-stack (T, 21) machine.

A T-stack pushes the next input element unless doing so would put an
occurrence of some pattern of T in the stack, read from top to bottom;
otherwise it pops. Since the content before a push already avoids T, a new
occurrence must start at the element being pushed, so only those are checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .patterns import PatternSpec, _contains, classical, format_pattern, parse_pattern
from .perm import PartialPermutation, Permutation

PUSH, POP = "P", "O"


@dataclass(frozen=True)
class MachineConfig:
    forbidden: tuple

    def __post_init__(self):
        specs = tuple(classical(p) if not isinstance(p, PatternSpec) else p for p in self.forbidden)
        if not specs:
            raise ValueError("a machine needs at least one forbidden pattern")
        for s in specs:
            if s.kind != "classical" or len(s.body) < 2:
                raise ValueError(f"stack patterns must be classical of length >= 2, got {s}")
        object.__setattr__(self, "forbidden", specs)

    @property
    def patterns(self) -> tuple:
        return tuple(s.body for s in self.forbidden)

    def __str__(self) -> str:
        return ",".join(format_pattern(s) for s in self.forbidden)


def machine(*patterns) -> MachineConfig:
    """``machine((1,3,2), (2,3,1))`` or ``machine("132", "231")``."""
    specs = []
    for p in patterns:
        if isinstance(p, str):
            p = parse_pattern(p)
        specs.append(p)
    return MachineConfig(tuple(specs))


def parse_machine(text: str) -> MachineConfig:
    return machine(*[t for t in text.split(",") if t.strip()])


STACK_21 = machine("21")


@dataclass(frozen=True)
class SortingTrace:
    """States of passing ``(output, stack top-to-bottom, input)``."""

    machine: MachineConfig
    states: tuple
    operations: str = field(default="")

    @property
    def output(self) -> tuple:
        return self.states[-1][0]


# -- push checks ---------------------------------------------------------------
#
# The stack is a Python list with its top at the end, so "top to bottom" is
# reversed list order. Each check answers: does pushing x create an occurrence
# of the pattern that starts at x?

def _check_2(pat: tuple) -> Callable:
    if pat[0] < pat[1]:
        return lambda x, st: any(y > x for y in st)
    return lambda x, st: any(y < x for y in st)


def _check_3(pat: tuple) -> Callable:
    a, b, c = pat
    xy_less = a < b
    xz_less = a < c
    yz_less = b < c

    def check(x, st):
        for J in range(len(st) - 1, 0, -1):
            y = st[J]
            if (x < y) != xy_less:
                continue
            for K in range(J - 1, -1, -1):
                z = st[K]
                if (x < z) == xz_less and (y < z) == yz_less:
                    return True
        return False

    return check


def _check_generic(pat: tuple) -> Callable:
    def check(x, st):
        return _contains((x,) + tuple(reversed(st)), pat, True)

    return check


@lru_cache(maxsize=None)
def _checks(patterns: tuple) -> tuple:
    out = []
    for p in patterns:
        if len(p) == 2:
            out.append(_check_2(p))
        elif len(p) == 3:
            out.append(_check_3(p))
        else:
            out.append(_check_generic(p))
    return tuple(out)


def _blocked(checks, x, st) -> bool:
    for chk in checks:
        if chk(x, st):
            return True
    return False


def out_seq(seq: Sequence[int], patterns: tuple) -> tuple:
    """Output of the greedy stack avoiding ``patterns`` on ``seq`` (tuples in,
    tuple out). The hot path for exhaustive sweeps."""
    checks = _checks(patterns)
    st: list = []
    out: list = []
    for x in seq:
        while st and _blocked(checks, x, st):
            out.append(st.pop())
        st.append(x)
    while st:
        out.append(st.pop())
    return tuple(out)


def _rewrap(like, values: tuple):
    if isinstance(like, PartialPermutation):
        return PartialPermutation(values, like.ambient)
    if isinstance(like, Permutation):
        return Permutation(values)
    return values


def _values(seq) -> tuple:
    return seq.values if isinstance(seq, PartialPermutation) else tuple(seq)


def run_stack(seq, config: MachineConfig):
    """Simulate the stack and return ``(output, trace)``."""
    checks = _checks(config.patterns)
    remaining = list(_values(seq))
    st: list = []
    out: list = []
    states = [((), (), tuple(remaining))]
    ops = []
    pos = 0
    while pos < len(remaining) or st:
        if pos < len(remaining) and not _blocked(checks, remaining[pos], st):
            st.append(remaining[pos])
            pos += 1
            ops.append(PUSH)
        else:
            out.append(st.pop())
            ops.append(POP)
        states.append((tuple(out), tuple(reversed(st)), tuple(remaining[pos:])))
    trace = SortingTrace(config, tuple(states), "".join(ops))
    return _rewrap(seq, tuple(out)), trace


def out_T(seq, config: MachineConfig):
    return _rewrap(seq, out_seq(_values(seq), config.patterns))


def _contains_231(seq: tuple) -> bool:
    # Knuth: a 21-stack sorts exactly the 231-avoiders. Check by simulation-free scan.
    return _contains(seq, (2, 3, 1), False)


def is_sortable(seq, config: MachineConfig) -> bool:
    return not _contains_231(out_seq(_values(seq), config.patterns))


def sort_series(seq, config: MachineConfig):
    """Pass through the T-stack, then through a classical (21-avoiding) stack."""
    first = out_seq(_values(seq), config.patterns)
    return _rewrap(seq, out_seq(first, ((2, 1),)))
