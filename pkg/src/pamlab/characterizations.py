"""Structural and pattern criteria for sortability, independent of simulation.

Each predicate here decides membership in Sort(T) for one of the
characterized pairs without looking at whether ``out^T`` avoids 231, so that
the simulation in :mod:`pamlab.machine` can be checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Sequence

from .machine import machine, out_seq, run_stack
from .patterns import (
    BARRED_2413,
    BARRED_42153,
    _contains,
    anchored,
    avoids_all,
    classical,
    first_contained,
)
from .perm import decompose

PAIR_132_231 = ((1, 3, 2), (2, 3, 1))
PAIR_123_213 = ((1, 2, 3), (2, 1, 3))
PAIR_132_312 = ((1, 3, 2), (3, 1, 2))
PAIR_231_321 = ((2, 3, 1), (3, 2, 1))
PAIR_123_132 = ((1, 2, 3), (1, 3, 2))
PAIR_123_312 = ((1, 2, 3), (3, 1, 2))

PAIRS = {
    "132,231": PAIR_132_231,
    "123,213": PAIR_123_213,
    "132,312": PAIR_132_312,
    "231,321": PAIR_231_321,
    "123,132": PAIR_123_132,
    "123,312": PAIR_123_312,
}

CHARACTERIZING_PATTERNS = {
    PAIR_132_231: (classical((1, 3, 2, 4)), classical((2, 3, 1, 4))),
    PAIR_123_132: (
        classical((2, 3, 1, 4)),
        classical((3, 2, 1, 4)),
        classical((4, 2, 1, 3)),
        BARRED_2413,
    ),
    PAIR_123_312: (anchored((1, 3, 2)), anchored((4, 2, 5, 3, 1)), BARRED_42153),
}


def pair_key(pair) -> tuple:
    """Normalise ``"123,132"`` or a pair of sequences to a sorted tuple pair."""
    if isinstance(pair, str):
        pair = tuple(tuple(int(c) for c in t.strip()) for t in pair.split(","))
    return tuple(sorted(tuple(p) for p in pair))


def _patterns_for(pair):
    key = pair_key(pair)
    try:
        return CHARACTERIZING_PATTERNS[key]
    except KeyError:
        raise ValueError(f"no pattern characterization is known for the pair {pair}") from None


def sortable_by_patterns(p: Sequence[int], pair) -> bool:
    specs = _patterns_for(pair)
    if len(p) == 0:
        return True
    return avoids_all(tuple(p), specs)


def violated_pattern(p: Sequence[int], pair):
    """The first characterizing pattern that ``p`` contains, or None."""
    specs = _patterns_for(pair)
    if len(p) == 0:
        return None
    return first_contained(tuple(p), specs)


def _is_decreasing(seq) -> bool:
    return all(a > b for a, b in zip(seq, seq[1:]))


def sortable_by_blocks_132_231(p: Sequence[int]) -> bool:
    """Every ltr-min block avoids 213 and lies entirely above all later ones."""
    if len(p) == 0:
        return True
    blocks = decompose(p, "ltr-min").blocks
    for b in blocks:
        if _contains(b, (2, 1, 3), False):
            return False
    return _blocks_ordered(blocks)


def _blocks_ordered(blocks) -> bool:
    # every element of an earlier block exceeds every element of a later one;
    # empty blocks in between do not break the chain
    floor = None
    for b in reversed(blocks):
        if not b:
            continue
        if floor is not None and min(b) < floor:
            return False
        floor = max(b) if floor is None else max(floor, max(b))
    return True


def block_pattern_2_3_1(out: Sequence[int], label: dict) -> bool:
    """``z < x < y`` with x, y, z read left to right in ``out`` from three
    distinct blocks in increasing block order."""
    items = _labelled(out, label)
    m = len(items)
    for a in range(m):
        x, bx = items[a]
        for b in range(a + 1, m):
            y, by = items[b]
            if by <= bx or y <= x:
                continue
            for c in range(b + 1, m):
                z, bz = items[c]
                if bz > by and z < x:
                    return True
    return False


def block_pattern_2_31(out: Sequence[int], label: dict) -> bool:
    """``z < x < y`` with y, z in one block strictly after the block of x."""
    items = _labelled(out, label)
    m = len(items)
    for a in range(m):
        x, bx = items[a]
        for b in range(a + 1, m):
            y, by = items[b]
            if by <= bx or y <= x:
                continue
            for c in range(b + 1, m):
                z, bz = items[c]
                if bz == by and z < x:
                    return True
    return False


def _labelled(out, label) -> list:
    items = [(v, label[v]) for v in out if v in label]
    # labels must be weakly increasing along out: blocks come out in order
    for (_, b1), (_, b2) in zip(items, items[1:]):
        if b2 < b1:
            raise ValueError("block labelling is inconsistent with the output order")
    return items


def four_conditions_123_312(p: Sequence[int]) -> bool:
    n = len(p)
    if n == 0:
        return True
    d = decompose(p, "ltr-max")
    t = len(d.pivots)
    if d.pivots != tuple(range(n - t + 1, n + 1)):
        return False
    for b in d.blocks:
        if _contains(b, (2, 1, 3), False):
            return False
    out = out_seq(tuple(p), PAIR_123_312)
    label = d.block_of()
    return not block_pattern_2_3_1(out, label) and not block_pattern_2_31(out, label)


def bounded_blocks_lemma_check(p: Sequence[int]) -> bool:
    """Each later ltr-max block lies entirely on one side of every element of
    every earlier block."""
    if len(p) == 0:
        return True
    blocks = decompose(p, "ltr-max").blocks
    for j, bj in enumerate(blocks):
        if not bj:
            continue
        lo, hi = min(bj), max(bj)
        for bi in blocks[:j]:
            for x in bi:
                if lo < x < hi:
                    return False
    return True


# -- structural theorems -------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    """Each field is True (claim holds), False (claim fails) or None (claim
    does not apply to this input or family)."""

    pivots_at_bottom: bool | None = None
    blocks_rearranged: bool | None = None
    blocks_decreasing: bool | None = None
    blocks_ordered: bool | None = None
    max_pivots_topmost_values: bool | None = None

    @property
    def ok(self) -> bool:
        return all(getattr(self, f.name) is not False for f in fields(self))


def _family_pivot_kind(family: str, sigma: tuple) -> tuple:
    if len(sigma) < 3:
        raise ValueError("sigma must have length >= 3")
    if family in ("132", "(132,σ)-descent", "132-descent"):
        if not sigma[-2] > sigma[-1]:
            raise ValueError("the 132-family needs sigma ending in a descent")
        return (1, 3, 2), "ltr-min"
    if family in ("312", "(312,σ)-ascent", "312-ascent"):
        if not sigma[-2] < sigma[-1]:
            raise ValueError("the 312-family needs sigma ending in an ascent")
        return (3, 1, 2), "ltr-max"
    raise ValueError(f"unknown family {family!r}")


def structure_report(p: Sequence[int], family: str, sigma: Sequence[int]) -> StructureReport:
    sigma = tuple(sigma)
    base, kind = _family_pivot_kind(family, sigma)
    p = tuple(p)
    if not p:
        return StructureReport()
    cfg = machine(base, sigma)
    out, trace = run_stack(p, cfg)
    d = decompose(p, kind)
    t = len(d.pivots)

    # after each pivot push, the stack holds exactly the pivots so far
    pivots_ok = True
    pivot_step = {pos: i for i, pos in enumerate(d.positions)}
    pushed = 0
    for op, state in zip(trace.operations, trace.states[1:]):
        if op != "P":
            continue
        if pushed in pivot_step:
            i = pivot_step[pushed]
            if state[1] != tuple(reversed(d.pivots[: i + 1])):
                pivots_ok = False
        pushed += 1
    if out[len(out) - t:] != tuple(reversed(d.pivots)):
        pivots_ok = False

    # out = B~_1 ... B~_t followed by the pivots
    rearranged = True
    pieces = []
    start = 0
    for b in d.blocks:
        piece = out[start:start + len(b)]
        pieces.append(piece)
        if sorted(piece) != sorted(b):
            rearranged = False
        start += len(b)

    sortable = not _contains(out, (2, 3, 1), False)
    decreasing = ordered = topmost = None
    if sortable:
        if kind == "ltr-min" or sigma == (1, 2, 3):
            decreasing = all(_is_decreasing(piece) for piece in pieces)
        if kind == "ltr-min":
            ordered = _blocks_ordered(d.blocks)
        else:
            n = len(p)
            topmost = d.pivots == tuple(range(n - t + 1, n + 1))
    return StructureReport(pivots_ok, rearranged, decreasing, ordered, topmost)
