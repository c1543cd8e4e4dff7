"""Permutations, partial permutations and their left-to-right decompositions.

Values are 1-based throughout. A :class:`Permutation` is a tuple subclass so it
can be handed to any function expecting a plain sequence of ints; the hot loops
in the rest of the package work on bare tuples.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Permutation(tuple):
    """A rearrangement of ``1..n``. The empty permutation is allowed."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        vals = tuple(int(v) for v in values)
        n = len(vals)
        if len(set(vals)) != n:
            raise ValueError(f"duplicate value in {list(vals)}")
        for v in vals:
            if not 1 <= v <= n:
                raise ValueError(f"value {v} out of range 1..{n}")
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return format_values(self)

    def __repr__(self) -> str:
        return f"Permutation({str(self) or 'λ'})"


@dataclass(frozen=True)
class PartialPermutation:
    """An injection ``{1..k} -> {1..ambient}``, stored as its list of images."""

    values: tuple
    ambient: int

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.ambient < 0:
            raise ValueError("ambient must be nonnegative")
        if len(set(vals)) != len(vals):
            raise ValueError(f"duplicate value in {list(vals)}")
        for v in vals:
            if not 1 <= v <= self.ambient:
                raise ValueError(f"value {v} out of range 1..{self.ambient}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self) -> str:
        return f"{format_values(self.values) or 'λ'} of {self.ambient}"


@dataclass(frozen=True)
class Decomposition:
    """``pivot_1 block_1 pivot_2 block_2 ...`` split of a permutation.

    ``positions`` are 0-based indices of the pivots in the source.
    """

    kind: str
    pivots: tuple
    blocks: tuple
    positions: tuple

    def concat(self) -> tuple:
        out = []
        for p, b in zip(self.pivots, self.blocks):
            out.append(p)
            out.extend(b)
        return tuple(out)

    def block_of(self) -> dict:
        """Map each non-pivot value to the (0-based) index of its block."""
        return {v: i for i, b in enumerate(self.blocks) for v in b}


def make_permutation(values: Iterable[int]) -> Permutation:
    return Permutation(values)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def decompose(p: Sequence[int], kind: str = "ltr-min") -> Decomposition:
    if len(p) == 0:
        raise ValueError("cannot decompose the empty permutation")
    if kind == "ltr-min":
        better = lambda v, cur: v < cur  # noqa: E731
    elif kind == "ltr-max":
        better = lambda v, cur: v > cur  # noqa: E731
    else:
        raise ValueError(f"unknown decomposition kind {kind!r}")
    pivots, blocks, positions = [], [], []
    for i, v in enumerate(p):
        if not pivots or better(v, pivots[-1]):
            pivots.append(v)
            positions.append(i)
            blocks.append([])
        else:
            blocks[-1].append(v)
    return Decomposition(kind, tuple(pivots), tuple(tuple(b) for b in blocks), tuple(positions))


def reverse(p):
    if isinstance(p, PartialPermutation):
        return PartialPermutation(p.values[::-1], p.ambient)
    if isinstance(p, Permutation):
        return Permutation(p[::-1])
    return tuple(p)[::-1]


def standardize(seq: Sequence[int]) -> tuple:
    """The permutation order-isomorphic to ``seq`` (distinct entries)."""
    ranks = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return tuple(ranks[v] for v in seq)


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for t in itertools.permutations(range(1, n + 1)):
        yield Permutation(t)


def enumerate_partial_permutations(n: int) -> Iterator[PartialPermutation]:
    """All partial permutations of ``n``, by length, then lexicographically."""
    for k in range(n + 1):
        for t in itertools.permutations(range(1, n + 1), k):
            yield PartialPermutation(t, n)


# -- text format ---------------------------------------------------------------

def format_values(values: Sequence[int]) -> str:
    if all(v <= 9 for v in values):
        return "".join(str(v) for v in values)
    return " ".join(str(v) for v in values)


def _split_values(text: str) -> list:
    text = text.strip()
    if text in ("", "λ", "lambda"):
        return []
    if re.fullmatch(r"\d+", text):
        return [int(c) for c in text]
    parts = [t for t in re.split(r"[\s,]+", text) if t]
    try:
        return [int(t) for t in parts]
    except ValueError:
        raise ValueError(f"malformed permutation literal {text!r}") from None


def parse_permutation(text: str) -> Permutation:
    """Parse ``"2 3 1"``, ``"2,3,1"`` or the compact ``"231"``."""
    vals = _split_values(text)
    if re.fullmatch(r"\s*\d+\s*", text) and len(vals) > 9:
        raise ValueError("compact digit strings are only allowed for n <= 9")
    return Permutation(vals)


def parse_partial_permutation(text: str) -> PartialPermutation:
    """Parse ``"4 1 7 2 of 7"``."""
    m = re.fullmatch(r"\s*(.*?)\s*of\s+(\d+)\s*", text)
    if not m:
        raise ValueError(f"partial permutation needs an 'of N' suffix: {text!r}")
    return PartialPermutation(_split_values(m.group(1)), int(m.group(2)))
