"""Explicit bijections: hat / inverse out-map, alpha, phi and the Catalan
triangle swap and delete maps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .characterizations import PAIR_123_132
from .machine import is_sortable, machine, out_seq
from .patterns import contains_adjacent_213, contains_anchored, contains_classical, contains_gap_312
from .perm import PartialPermutation, Permutation


# -- hat -----------------------------------------------------------------------

def hat(sigma: Sequence[int]) -> tuple:
    """Swap the first two entries."""
    s = tuple(sigma)
    if len(s) < 2:
        raise ValueError("hat needs a pattern of length >= 2")
    out = (s[1], s[0]) + s[2:]
    return Permutation(out) if isinstance(sigma, Permutation) else out


def hat_pair(sigma: Sequence[int]) -> tuple:
    return (tuple(sigma), hat(tuple(sigma)))


def inverse_out_hat(p: Sequence[int], sigma: Sequence[int]):
    """Inverse of the (sigma, hat sigma)-stack map: reverse, pass, reverse."""
    pats = hat_pair(sigma)
    res = out_seq(tuple(p)[::-1], pats)[::-1]
    return Permutation(res) if isinstance(p, Permutation) else res


# -- alpha ---------------------------------------------------------------------

def alpha(p: Sequence[int]) -> PartialPermutation:
    """Record, for each value below the first entry, its position minus one.

    The result is a partial permutation of ``n - 1`` indexed by value."""
    p = tuple(p)
    if not p:
        raise ValueError("alpha needs a nonempty permutation")
    if contains_anchored(p, (1, 3, 2)):
        raise ValueError(f"{p} contains [132; alpha is defined on [132-avoiders only")
    first = p[0]
    slots = [0] * (first - 1)
    for i, v in enumerate(p):
        if v < first:
            slots[v - 1] = i  # 0-based position i is 1-based i+1, minus one
    return PartialPermutation(tuple(slots), len(p) - 1)


def alpha_inverse(a: PartialPermutation) -> Permutation:
    n = a.ambient + 1
    first = len(a) + 1
    out = [0] * n
    out[0] = first
    for v, pos in enumerate(a.values, start=1):
        out[pos] = v
    big = iter(range(first + 1, n + 1))
    for i in range(1, n):
        if out[i] == 0:
            out[i] = next(big)
    return Permutation(out)


# -- phi -----------------------------------------------------------------------

def _phi(a: tuple) -> tuple:
    if not a:
        return ()
    m = min(a)
    i = a.index(m)
    A, B = a[:i], a[i + 1:]
    if not A or not B or min(A) > max(B):
        return _phi(A) + (m,) + _phi(B)
    # here every entry of B lies below min(A) or above max(A) + 1, and max(A) + 1
    # is absent; A itself need not be an interval
    maxb = max(B)
    x = max(A) + 1
    below = [v for v in B if v < min(A)]
    # no entry of B below min(A): fall back to the minimum itself
    r = max(below) if below else m
    B2 = tuple(v - (x - r - 1) if v > x else v for v in B)
    A2 = tuple(v + (maxb - x + 1) for v in A)
    return _phi(A2) + (m,) + _phi(B2)


def _phi_inv(c: tuple) -> tuple:
    if not c:
        return ()
    m = min(c)
    i = c.index(m)
    C, D = c[:i], c[i + 1:]
    if not C or not D:
        return _phi_inv(C) + (m,) + _phi_inv(D)
    A2, B2 = _phi_inv(C), _phi_inv(D)
    present = set(B2)
    hole = next(v for v in range(m + 1, max(B2) + 2) if v not in present)
    if hole > max(B2):
        # D together with m fills [m, max D]: the forward map took case (ii)
        return A2 + (m,) + B2
    r = hole - 1
    maxb = max(A2)
    x = maxb - max(B2) + r + 1
    A = tuple(v - (maxb - x + 1) for v in A2)
    B = tuple(v + (x - r - 1) if v > r + 1 else v for v in B2)
    return A + (m,) + B


def in_phi_domain(a: PartialPermutation) -> bool:
    return not contains_gap_312(a) and not contains_adjacent_213(a)


def phi(a: PartialPermutation) -> PartialPermutation:
    """Map a partial permutation avoiding 31|2 and 2~13~ to one avoiding 213."""
    if not in_phi_domain(a):
        raise ValueError(f"{a} contains 31|2 or 2~13~")
    return PartialPermutation(_phi(a.values), a.ambient)


def phi_inverse(a: PartialPermutation) -> PartialPermutation:
    if contains_classical(a, (2, 1, 3)):
        raise ValueError(f"{a} contains 213")
    return PartialPermutation(_phi_inv(a.values), a.ambient)


# -- Catalan triangle ----------------------------------------------------------

@dataclass(frozen=True)
class TriangleClass:
    cls: str  # "A1" or "A2"
    n: int
    k: int


def _check_triangle_domain(p: tuple) -> None:
    if not p or not is_sortable(p, _M_123_132):
        raise ValueError(f"{p} is not (123,132)-sortable")


_M_123_132 = machine(*PAIR_123_132)


def _unextended_231(p: tuple):
    """Position of an entry > k before k-1 with no entry < k-1 between them."""
    k = p[0]
    if k == 1:
        return None
    ell = p.index(k - 1)
    for i in range(ell - 1, 0, -1):
        if p[i] < k - 1:
            return None
        if p[i] > k:
            return i
    return None


def classify_triangle(p: Sequence[int]) -> TriangleClass:
    """A1 when every anchored [231 occurrence ending at k-1 extends to [3412."""
    p = tuple(p)
    _check_triangle_domain(p)
    cls = "A1" if _unextended_231(p) is None else "A2"
    return TriangleClass(cls, len(p), p[0])


def triangle_swap(p: Sequence[int]) -> Permutation:
    """Exchange the values k and k-1 (A1 of first element k -> first element k-1)."""
    p = tuple(p)
    c = classify_triangle(p)
    if c.k < 2 or c.cls != "A1":
        raise ValueError("triangle_swap needs a permutation of class A1 with first entry >= 2")
    k = c.k
    return Permutation(k - 1 if v == k else k if v == k - 1 else v for v in p)


def triangle_swap_inverse(p: Sequence[int]) -> Permutation:
    p = tuple(p)
    _check_triangle_domain(p)
    k = p[0] + 1
    if k > len(p):
        raise ValueError("no preimage: first entry is already n")
    q = tuple(k if v == k - 1 else k - 1 if v == k else v for v in p)
    if not is_sortable(q, _M_123_132) or _unextended_231(q) is not None:
        raise ValueError(f"{p} is not in the image of triangle_swap")
    return Permutation(q)


def triangle_delete(p: Sequence[int]) -> Permutation:
    """Delete the entry just before k-1 and close the gap (A2 -> length n-1)."""
    p = tuple(p)
    c = classify_triangle(p)
    if c.k < 2 or c.cls != "A2":
        raise ValueError("triangle_delete needs a permutation of class A2 with first entry >= 2")
    pos = p.index(c.k - 1)
    ell = p[pos - 1]
    rest = p[: pos - 1] + p[pos:]
    return Permutation(v - 1 if v > ell else v for v in rest)


def triangle_delete_inverse(p: Sequence[int]) -> Permutation:
    """Insert the recovered entry before k-1 and shift entries >= it up by one."""
    p = tuple(p)
    _check_triangle_domain(p)
    k = p[0]
    if k < 2:
        raise ValueError("first entry must be at least 2")
    n = len(p) + 1
    i = p.index(k - 1)
    candidates = [
        p[u] for u in range(1, i)
        if p[u] > k and any(p[v] < k - 1 for v in range(u + 1, i))
    ]
    ell = min(candidates) if candidates else n
    shifted = [v + 1 if v >= ell else v for v in p]
    return Permutation(shifted[:i] + [ell] + shifted[i:])


def triangle_members(n: int, k: int):
    """A_n(k): (123,132)-sortable permutations of length n starting with k."""
    if not 1 <= k <= n:
        return
    rest = [v for v in range(1, n + 1) if v != k]
    for t in itertools.permutations(rest):
        p = (k,) + t
        if is_sortable(p, _M_123_132):
            yield p


__all__ = [
    "TriangleClass",
    "alpha",
    "alpha_inverse",
    "classify_triangle",
    "hat",
    "in_phi_domain",
    "inverse_out_hat",
    "phi",
    "phi_inverse",
    "triangle_delete",
    "triangle_delete_inverse",
    "triangle_members",
    "triangle_swap",
    "triangle_swap_inverse",
]
