"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Under pytest the lines are collected and printed in the terminal summary;
``python -m tests.test_acceptance`` runs the checks without pytest.
"""

import itertools
import math
import random
import sys
import time

import pytest

from pamlab.bijections import alpha, alpha_inverse, hat_pair, in_phi_domain, inverse_out_hat, phi
from pamlab.characterizations import structure_report
from pamlab.harness import count_sortable, count_table, verify_bijection, verify_characterization
from pamlab.machine import machine, out_seq
from pamlab.patterns import (
    ADJACENT_213,
    GAP_312,
    anchored,
    barred,
    brute_contains,
    classical,
    contains,
    contains_anchored,
    contains_classical,
    special,
)
from pamlab.perm import PartialPermutation, enumerate_partial_permutations

# Published first-entry counts for Sort(123,132), rows k = 1..6, n = 1..8;
# None marks an empty cell (k > n).
FIRST_ENTRY_TABLE = {
    1: [1, 1, 1, 1, 1, 1, 1, 1],
    2: [None, 1, 2, 3, 4, 5, 6, 7],
    3: [None, None, 2, 5, 9, 14, 20, 27],
    4: [None, None, None, 5, 14, 28, 48, 75],
    5: [None, None, None, None, 14, 42, 90, 165],
    6: [None, None, None, None, None, 42, 132, 297],
}
FIRST_ENTRY_SUMS = [1, 2, 5, 14, 42, 132, 429, 1430]

# summary lines, echoed by the terminal-summary hook in conftest.py
RESULTS = []


def _catalan(n):
    # independent of pamlab.sequences: the convolution recurrence
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[n]


def _ballot(n, k):
    # first entry k among n: C(n+k-2, n-1) (n-k+1) / n
    return math.comb(n + k - 2, n - 1) * (n - k + 1) // n


def _report(num, title, ok, elapsed, limit=None, detail=""):
    status = "PASS" if ok and (limit is None or elapsed < limit) else "FAIL"
    budget = f" (limit {limit:.0f}s)" if limit else ""
    line = f"[AC{num:>2}] {status} {title}: {detail} in {elapsed:.1f}s{budget}"
    RESULTS.append(line)
    print(line)
    return status == "PASS"


def check_1():
    t0 = time.perf_counter()
    got = [count_sortable(machine("132", "231"), n) for n in range(1, 8)]
    want = [1, 2, 6, 22, 90, 394, 1806]
    return _report(1, "Schroeder counts for (132,231)", got == want, time.perf_counter() - t0, 10,
                   f"{got}")


def check_2():
    ok = True
    want = [_catalan(n) for n in range(1, 10)]
    assert want[-1] == 4862
    for pair in (("123", "213"), ("132", "312"), ("231", "321")):
        t0 = time.perf_counter()
        got = [count_sortable(machine(*pair), n) for n in range(1, 10)]
        ok &= _report(2, f"Catalan counts for ({','.join(pair)})", got == want, time.perf_counter() - t0, 60,
                      f"n=9 -> {got[-1]}")
    return ok


def check_3():
    t0 = time.perf_counter()
    t = count_table(machine("123", "132"), 8, by_first_element=True)
    bad = []
    for k, row in FIRST_ENTRY_TABLE.items():
        for n, cell in enumerate(row, start=1):
            got = t.rows.get((n, k))
            if (cell is None and k <= n) or (cell is not None and got != cell):
                bad.append((n, k))
    for (n, k), c in t.rows.items():
        if c != _ballot(n, k):
            bad.append((n, k))
    sums = [t.totals()[n] for n in range(1, 9)]
    spots = (t.rows[(5, 4)], t.rows[(6, 6)], t.rows[(8, 6)])
    ok = not bad and sums == FIRST_ENTRY_SUMS and spots == (14, 42, 297)
    return _report(3, "first-entry table for (123,132)", ok, time.perf_counter() - t0, 30,
                   f"spots a(5,4),a(6,6),a(8,6)={spots} sums={sums} bad={bad}")


def check_4():
    t0 = time.perf_counter()
    want = [sum(math.comb(n - 1, k) * _catalan(k) for k in range(n)) for n in range(1, 10)]
    got = [count_sortable(machine("123", "312"), n) for n in range(1, 10)]
    ok = got == want == [1, 2, 5, 15, 51, 188, 731, 2950, 12235]
    return _report(4, "binomial transform counts for (123,312)", ok, time.perf_counter() - t0, 60, f"{got}")


def check_5():
    t0 = time.perf_counter()
    ok = True
    details = []
    for pair in ("132,231", "123,132", "123,312"):
        rep = verify_characterization(pair, 9)
        mism = sum(v for r in rep.rows for key, v in r.detail.items() if key.startswith("mismatch"))
        ok &= rep.ok and mism == 0
        details.append(f"{pair}: {mism} mismatches")
    return _report(5, "simulation vs characterizations, n<=9", ok, time.perf_counter() - t0, 300,
                   "; ".join(details))


def check_6():
    t0 = time.perf_counter()
    fails = 0
    for sigma in itertools.permutations((1, 2, 3)):
        pats = hat_pair(sigma)
        for n in range(1, 8):
            for p in itertools.permutations(range(1, n + 1)):
                if inverse_out_hat(out_seq(p, pats), sigma) != p:
                    fails += 1
        for n in range(1, 9):
            image = {out_seq(p, pats) for p in itertools.permutations(range(1, n + 1))}
            if len(image) != math.factorial(n):
                fails += 1
    return _report(6, "out-map inverse and image size, all sigma in S3", fails == 0, time.perf_counter() - t0, 60,
                   f"{fails} failures")


def check_7():
    t0 = time.perf_counter()
    fails = 0
    for n in range(1, 9):
        dom = [p for p in itertools.permutations(range(1, n + 1)) if not contains_anchored(p, (1, 3, 2))]
        cod = list(enumerate_partial_permutations(n - 1))
        fails += sum(alpha_inverse(alpha(p)) != p for p in dom)
        fails += sum(alpha(alpha_inverse(a)) != a for a in cod)
        expected = sum(math.comb(n - 1, k) * math.factorial(k) for k in range(n))
        fails += not (len(dom) == len(cod) == expected)
    return _report(7, "alpha bijection, n<=8", fails == 0, time.perf_counter() - t0, None, f"{fails} failures")


def check_8():
    t0 = time.perf_counter()
    rep = verify_bijection("phi", 6)
    fails = 0
    for n in range(0, 9):
        direct = sum(1 for a in enumerate_partial_permutations(n) if not contains_classical(a.values, (2, 1, 3)))
        fails += direct != sum(math.comb(n, k) * _catalan(k) for k in range(n + 1))
    # independent image check for the largest size
    dom = [a for a in enumerate_partial_permutations(6) if in_phi_domain(a)]
    image = {phi(a) for a in dom}
    fails += len(image) != len(dom)
    ok = rep.ok and fails == 0
    return _report(8, "phi bijection n<=6 and 213-avoider counts n<=8", ok, time.perf_counter() - t0, None,
                   f"{fails} failures, report {'PASS' if rep.ok else 'FAIL'}")


def check_9():
    t0 = time.perf_counter()
    rep = verify_bijection("triangle", 7)
    return _report(9, "Catalan triangle swap/delete maps, n<=7", rep.ok, time.perf_counter() - t0, None,
                   f"{sum(r.detail['failures'] for r in rep.rows)} failures")


def check_10():
    t0 = time.perf_counter()
    fails = 0
    checked = 0
    cases = [("132", (2, 3, 1)), ("132", (3, 2, 1)), ("312", (1, 2, 3)), ("312", (2, 1, 3))]
    for family, sigma in cases:
        for n in range(1, 8):
            for p in itertools.permutations(range(1, n + 1)):
                r = structure_report(p, family, sigma)
                checked += 1
                if not r.ok or not r.pivots_at_bottom or not r.blocks_rearranged:
                    fails += 1
    return _report(10, "structure reports, n<=7", fails == 0, time.perf_counter() - t0, None,
                   f"{checked} reports, {fails} failures")


def _random_perm(rng, lo, hi):
    n = rng.randint(lo, hi)
    return tuple(rng.sample(range(1, n + 1), n))


def _random_partial(rng):
    amb = rng.randint(0, 9)
    k = rng.randint(0, amb)
    return PartialPermutation(tuple(rng.sample(range(1, amb + 1), k)), amb)


def check_11(instances=10_000, seed=2024):
    rng = random.Random(seed)
    t0 = time.perf_counter()
    disagreements = {}
    makers = {
        "classical": lambda: (_random_perm(rng, 0, 9), classical(_random_perm(rng, 1, 5))),
        "prefix-anchored": lambda: (_random_perm(rng, 1, 9), anchored(_random_perm(rng, 1, 5))),
        "barred-prefix": lambda: _barred_case(rng),
        "gap-312": lambda: (_random_partial(rng), special(GAP_312)),
        "adjacent-213": lambda: (_random_partial(rng), special(ADJACENT_213)),
    }
    for kind, make in makers.items():
        bad = 0
        for _ in range(instances):
            host, spec = make()
            if contains(host, spec) != brute_contains(host, spec):
                bad += 1
        disagreements[kind] = bad
    ok = not any(disagreements.values())
    return _report(11, f"fast vs brute containment, {instances} instances per kind", ok,
                   time.perf_counter() - t0, None, f"{disagreements}")


def _barred_case(rng):
    body = _random_perm(rng, 2, 5)
    return _random_perm(rng, 1, 9), barred(body, rng.randint(2, len(body)))


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9, check_10, check_11]


@pytest.mark.parametrize("check", CHECKS, ids=[f"criterion_{i}" for i in range(1, 12)])
def test_acceptance(check):
    assert check()


if __name__ == "__main__":
    results = [c() for c in CHECKS]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
