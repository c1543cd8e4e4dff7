"""Containment and avoidance for classical, prefix-anchored and barred patterns.

Every predicate has two routes: the fast one used by the rest of the package
(a nested scan that fixes pattern letters left to right and prunes on value
bounds) and a ``brute_*`` route that tests every subsequence with
:func:`itertools.combinations`. The brute routes exist to be compared against.

Witness indices are 0-based positions in the host.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .perm import PartialPermutation, Permutation, standardize

GAP_312 = "gap-312"
ADJACENT_213 = "adjacent-213"
SPECIAL_NAMES = (GAP_312, ADJACENT_213)


@dataclass(frozen=True)
class PatternSpec:
    """One pattern. ``barred_position`` is the 1-based index of the barred
    letter in ``body``; ``body`` is the pattern with its bar removed."""

    kind: str
    body: tuple = ()
    anchored: bool = False
    barred_position: int | None = None
    special_name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))
        if self.kind == "special":
            if self.special_name not in SPECIAL_NAMES:
                raise ValueError(f"unknown special pattern {self.special_name!r}")
            return
        Permutation(self.body)  # validates
        if not self.body:
            raise ValueError("empty pattern")
        if self.kind == "classical":
            if self.anchored or self.barred_position is not None:
                raise ValueError("classical patterns carry no anchor and no bar")
        elif self.kind == "prefix-anchored":
            if not self.anchored or self.barred_position is not None:
                raise ValueError("prefix-anchored patterns are anchored and unbarred")
        elif self.kind == "barred-prefix":
            if not self.anchored:
                raise ValueError("barred patterns must be prefix-anchored")
            b = self.barred_position
            # position 1 is the anchor itself
            if b is None or not 2 <= b <= len(self.body):
                raise ValueError(f"barred position must lie in 2..{len(self.body)}")
        else:
            raise ValueError(f"unknown pattern kind {self.kind!r}")

    @property
    def reduced(self) -> tuple:
        """The pattern left after deleting the barred letter, rescaled."""
        if self.barred_position is None:
            return self.body
        b = self.barred_position - 1
        return standardize(self.body[:b] + self.body[b + 1:])

    @property
    def applies_to_partial(self) -> bool:
        return self.kind in ("classical", "special")

    def __str__(self) -> str:
        return format_pattern(self)


def classical(p: Sequence[int]) -> PatternSpec:
    return PatternSpec("classical", tuple(p))


def anchored(p: Sequence[int]) -> PatternSpec:
    return PatternSpec("prefix-anchored", tuple(p), anchored=True)


def barred(body: Sequence[int], position: int) -> PatternSpec:
    return PatternSpec("barred-prefix", tuple(body), anchored=True, barred_position=position)


def special(name: str) -> PatternSpec:
    return PatternSpec("special", special_name=name)


# patterns named in the characterizations
BARRED_2413 = barred((2, 4, 1, 3), 3)
BARRED_42153 = barred((4, 2, 1, 5, 3), 4)


# -- literals ------------------------------------------------------------------
#
#   2314        classical
#   [132        prefix-anchored
#   [241^3      barred-prefix; the caret follows the barred letter, the way a
#   [4215^3     combining overline follows its base character
#   31|2, 2~13~ the two named special patterns

_SPECIAL_LITERALS = {"31|2": GAP_312, "2~13~": ADJACENT_213}


def parse_pattern(text: str) -> PatternSpec:
    s = text.strip().replace("̄", "^").replace("̅", "^")
    if s in _SPECIAL_LITERALS:
        return special(_SPECIAL_LITERALS[s])
    m = re.fullmatch(r"(\[?)((?:\d\^?)+)", s)
    if not m:
        raise ValueError(f"malformed pattern literal {text!r}")
    is_anchored = bool(m.group(1))
    body, bars = [], []
    for ch in m.group(2):
        if ch == "^":
            bars.append(len(body))
        else:
            body.append(int(ch))
    if not bars:
        return anchored(body) if is_anchored else classical(body)
    if len(bars) > 1:
        raise ValueError("only a single barred entry is supported")
    if not is_anchored:
        raise ValueError("barred patterns must be prefix-anchored ('[')")
    return barred(body, bars[0])


def format_pattern(spec: PatternSpec) -> str:
    if spec.kind == "special":
        return {v: k for k, v in _SPECIAL_LITERALS.items()}[spec.special_name]
    out = "[" if spec.anchored else ""
    for i, v in enumerate(spec.body, start=1):
        out += str(v)
        if i == spec.barred_position:
            out += "^"
    return out


# -- fast routes ---------------------------------------------------------------

def _values(host) -> tuple:
    if isinstance(host, PartialPermutation):
        return host.values
    return tuple(host)


@lru_cache(maxsize=None)
def _bounds(pattern: tuple) -> tuple:
    """For each letter, the earlier letters that bound its value from below
    and above most tightly (index, or -1)."""
    lo, hi = [], []
    for d, v in enumerate(pattern):
        below = [e for e in range(d) if pattern[e] < v]
        above = [e for e in range(d) if pattern[e] > v]
        lo.append(max(below, key=lambda e: pattern[e]) if below else -1)
        hi.append(min(above, key=lambda e: pattern[e]) if above else -1)
    return tuple(lo), tuple(hi)


def iter_occurrences(host, pattern: Sequence[int], anchored: bool = False) -> Iterator[tuple]:
    """Yield every occurrence of ``pattern`` in ``host`` as a tuple of indices."""
    seq = _values(host)
    pat = tuple(pattern)
    L, n = len(pat), len(seq)
    if L == 0:
        yield ()
        return
    if L > n:
        return
    lo, hi = _bounds(pat)
    idx = [0] * L
    vals = [0] * L

    def rec(d, start):
        if d == L:
            yield tuple(idx)
            return
        lb = vals[lo[d]] if lo[d] >= 0 else 0
        ub = vals[hi[d]] if hi[d] >= 0 else n + 10**9
        for i in range(start, n - (L - d) + 1):
            v = seq[i]
            if lb < v < ub:
                idx[d] = i
                vals[d] = v
                yield from rec(d + 1, i + 1)

    if anchored:
        idx[0], vals[0] = 0, seq[0]
        yield from rec(1, 1)
    else:
        yield from rec(0, 0)


def _exists(seq, n, pat, L, lo, hi, vals, d, start) -> bool:
    lb = vals[lo[d]] if lo[d] >= 0 else 0
    ub = vals[hi[d]] if hi[d] >= 0 else 1 << 60
    last = n - (L - d)
    if d == L - 1:
        for i in range(start, last + 1):
            if lb < seq[i] < ub:
                return True
        return False
    for i in range(start, last + 1):
        v = seq[i]
        if lb < v < ub:
            vals[d] = v
            if _exists(seq, n, pat, L, lo, hi, vals, d + 1, i + 1):
                return True
    return False


def _contains(seq: tuple, pat: tuple, anchored: bool) -> bool:
    L, n = len(pat), len(seq)
    if L > n:
        return False
    if L == 0:
        return True
    lo, hi = _bounds(pat)
    vals = [0] * L
    if anchored:
        if L == 1:
            return True
        vals[0] = seq[0]
        return _exists(seq, n, pat, L, lo, hi, vals, 1, 1)
    return _exists(seq, n, pat, L, lo, hi, vals, 0, 0)


def contains_classical(host, pattern: Sequence[int]) -> bool:
    return _contains(_values(host), tuple(pattern), False)


def find_occurrence(host, pattern: Sequence[int], anchored: bool = False) -> tuple | None:
    return next(iter_occurrences(host, pattern, anchored), None)


def contains_anchored(host, pattern: Sequence[int]) -> bool:
    seq = _values(host)
    if not seq:
        raise ValueError("anchored containment needs a nonempty host")
    return _contains(seq, tuple(pattern), True)


def _extends(seq: tuple, occ: tuple, spec: PatternSpec) -> bool:
    b = spec.barred_position - 1  # 0-based slot of the barred letter
    lo = occ[b - 1] + 1
    hi = occ[b] if b < len(occ) else len(seq)
    body = spec.body
    for t in range(lo, hi):
        full = occ[:b] + (t,) + occ[b:]
        if standardize([seq[i] for i in full]) == body:
            return True
    return False


def find_barred_violation(host, spec: PatternSpec) -> tuple | None:
    """An anchored occurrence of the reduced pattern that cannot be extended."""
    if spec.kind != "barred-prefix":
        raise ValueError("expected a barred-prefix pattern")
    seq = _values(host)
    if not seq:
        raise ValueError("barred containment needs a nonempty host")
    for occ in iter_occurrences(seq, spec.reduced, anchored=True):
        if not _extends(seq, occ, spec):
            return occ
    return None


def avoids_barred_prefix(host, spec: PatternSpec) -> bool:
    return find_barred_violation(host, spec) is None


def find_gap_312(host: PartialPermutation) -> tuple | None:
    a = host.values
    present = set(a)
    n = len(a)
    for j in range(n):
        for k in range(j + 1, n):
            lo, hi = a[j], a[k]
            if lo >= hi:
                continue
            if all(v in present for v in range(lo, hi + 1)):
                continue
            for i in range(j):
                if a[i] > hi:
                    return (i, j, k)
    return None


def contains_gap_312(host: PartialPermutation) -> bool:
    return find_gap_312(host) is not None


def find_adjacent_213(host: PartialPermutation) -> tuple | None:
    a = host.values
    pos = {v: i for i, v in enumerate(a)}
    for i, v in enumerate(a):
        k = pos.get(v + 1)
        if k is None or k < i + 2:
            continue
        for j in range(i + 1, k):
            if a[j] < v:
                return (i, j, k)
    return None


def contains_adjacent_213(host: PartialPermutation) -> bool:
    return find_adjacent_213(host) is not None


def contains(host, spec: PatternSpec) -> bool:
    """True when ``host`` contains ``spec`` (for barred patterns: has an
    unextendable occurrence of the reduced pattern)."""
    if spec.kind == "classical":
        return contains_classical(host, spec.body)
    if isinstance(host, PartialPermutation) and not spec.applies_to_partial:
        raise ValueError(f"{spec} does not apply to partial permutations")
    if spec.kind == "prefix-anchored":
        return contains_anchored(host, spec.body)
    if spec.kind == "barred-prefix":
        return not avoids_barred_prefix(host, spec)
    if not isinstance(host, PartialPermutation):
        raise ValueError(f"{spec} applies to partial permutations only")
    if spec.special_name == GAP_312:
        return contains_gap_312(host)
    return contains_adjacent_213(host)


def avoids_all(host, specs) -> bool:
    for spec in specs:
        if contains(host, spec):
            return False
    return True


def first_contained(host, specs) -> PatternSpec | None:
    """The first pattern of ``specs`` that ``host`` contains, if any."""
    for spec in specs:
        if contains(host, spec):
            return spec
    return None


# -- brute-force oracles -------------------------------------------------------

def brute_contains_classical(host, pattern: Sequence[int]) -> bool:
    seq = _values(host)
    pat = tuple(pattern)
    return any(
        standardize([seq[i] for i in c]) == pat
        for c in itertools.combinations(range(len(seq)), len(pat))
    )


def brute_contains_anchored(host, pattern: Sequence[int]) -> bool:
    seq = _values(host)
    pat = tuple(pattern)
    if not pat:
        return True
    return any(
        standardize([seq[i] for i in (0,) + c]) == pat
        for c in itertools.combinations(range(1, len(seq)), len(pat) - 1)
    )


def brute_avoids_barred_prefix(host, spec: PatternSpec) -> bool:
    seq = _values(host)
    n, L = len(seq), len(spec.body)
    body, tau = spec.body, spec.reduced
    b = spec.barred_position - 1
    for rest in itertools.combinations(range(1, n), L - 2):
        occ = (0,) + rest
        if standardize([seq[i] for i in occ]) != tau:
            continue
        full_ok = False
        for t in range(1, n):
            if t in occ:
                continue
            full = tuple(sorted(occ + (t,)))
            # t must land exactly in the barred slot
            if full.index(t) == b and standardize([seq[i] for i in full]) == body:
                full_ok = True
                break
        if not full_ok:
            return False
    return True


def brute_contains_gap_312(host: PartialPermutation) -> bool:
    a = host.values
    present = set(a)
    for i, j, k in itertools.combinations(range(len(a)), 3):
        if a[j] < a[k] < a[i] and any(v not in present for v in range(a[j], a[k] + 1)):
            return True
    return False


def brute_contains_adjacent_213(host: PartialPermutation) -> bool:
    a = host.values
    return any(
        a[j] < a[i] < a[k] and a[i] == a[k] - 1
        for i, j, k in itertools.combinations(range(len(a)), 3)
    )


def brute_contains(host, spec: PatternSpec) -> bool:
    if spec.kind == "classical":
        return brute_contains_classical(host, spec.body)
    if spec.kind == "prefix-anchored":
        return brute_contains_anchored(host, spec.body)
    if spec.kind == "barred-prefix":
        return not brute_avoids_barred_prefix(host, spec)
    if spec.special_name == GAP_312:
        return brute_contains_gap_312(host)
    return brute_contains_adjacent_213(host)
