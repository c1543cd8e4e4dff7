"""Reference integer sequences used to check the exhaustive counts.

Catalan and its binomial transform are evaluated from their closed forms; the
large Schroeder numbers (A006318) and the Catalan triangle (A009766) are
embedded as static prefix tables so that nothing is fetched at run time.
"""

from __future__ import annotations

from math import comb

SEQUENCE_NAMES = (
    "catalan",
    "large-schroeder",
    "binomial-transform-catalan",
    "catalan-triangle",
)

# A006318, a(0) .. a(15)
LARGE_SCHROEDER = (
    1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446,
    27297738, 142078746, 745387038, 3937603038,
)

# A009766 as a_n^k, rows n = 1 .. 15, columns k = 1 .. n
CATALAN_TRIANGLE = (
    (1,),
    (1, 1),
    (1, 2, 2),
    (1, 3, 5, 5),
    (1, 4, 9, 14, 14),
    (1, 5, 14, 28, 42, 42),
    (1, 6, 20, 48, 90, 132, 132),
    (1, 7, 27, 75, 165, 297, 429, 429),
    (1, 8, 35, 110, 275, 572, 1001, 1430, 1430),
    (1, 9, 44, 154, 429, 1001, 2002, 3432, 4862, 4862),
    (1, 10, 54, 208, 637, 1638, 3640, 7072, 11934, 16796, 16796),
    (1, 11, 65, 273, 910, 2548, 6188, 13260, 25194, 41990, 58786, 58786),
    (1, 12, 77, 350, 1260, 3808, 9996, 23256, 48450, 90440, 149226, 208012, 208012),
    (1, 13, 90, 440, 1700, 5508, 15504, 38760, 87210, 177650, 326876, 534888,
     742900, 742900),
    (1, 14, 104, 544, 2244, 7752, 23256, 62016, 149226, 326876, 653752, 1188640,
     1931540, 2674440, 2674440),
)

# index shift between |Sort_n(T)| and the reference sequence for the pairs
# whose counts are known: row n is compared with reference[n - offset]
DEFAULT_OFFSET = {
    "catalan": 0,
    "large-schroeder": 1,
    "binomial-transform-catalan": 1,
    "catalan-triangle": 0,
}


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("negative index")
    return comb(2 * n, n) // (n + 1)


def binomial_transform_catalan(n: int) -> int:
    if n < 0:
        raise ValueError("negative index")
    return sum(comb(n, k) * catalan(k) for k in range(n + 1))


def sequence_value(name: str, n: int, k: int | None = None) -> int:
    if name == "catalan":
        return catalan(n)
    if name == "binomial-transform-catalan":
        return binomial_transform_catalan(n)
    if name == "large-schroeder":
        if not 0 <= n < len(LARGE_SCHROEDER):
            raise IndexError(f"large-schroeder is tabulated for n <= {len(LARGE_SCHROEDER) - 1}")
        return LARGE_SCHROEDER[n]
    if name == "catalan-triangle":
        if k is None:
            raise ValueError("catalan-triangle needs a column index k")
        if not 1 <= n <= len(CATALAN_TRIANGLE):
            raise IndexError(f"catalan-triangle is tabulated for 1 <= n <= {len(CATALAN_TRIANGLE)}")
        if not 1 <= k <= n:
            return 0
        return CATALAN_TRIANGLE[n - 1][k - 1]
    raise ValueError(f"unknown sequence {name!r}; expected one of {', '.join(SEQUENCE_NAMES)}")


def max_index(name: str) -> int | None:
    """Largest tabulated index, or None for formula-backed sequences."""
    if name == "large-schroeder":
        return len(LARGE_SCHROEDER) - 1
    if name == "catalan-triangle":
        return len(CATALAN_TRIANGLE)
    if name in ("catalan", "binomial-transform-catalan"):
        return None
    raise ValueError(f"unknown sequence {name!r}")
