"""Exhaustive enumeration: counting, distributions, cross-validation sweeps.

Work is partitioned by the first entry of the permutation (n classes of
(n-1)! permutations each). With ``workers > 1`` the classes are farmed out to
a process pool; results are merged in class order, so the output does not
depend on the worker count.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bijections as bij
from .characterizations import (
    PAIR_123_312,
    four_conditions_123_312,
    pair_key,
    sortable_by_blocks_132_231,
    sortable_by_patterns,
    _patterns_for,
)
from .machine import MachineConfig, _contains_231, machine, out_seq
from .patterns import contains_anchored, contains_classical
from .perm import PartialPermutation, enumerate_partial_permutations
from .sequences import DEFAULT_OFFSET, SEQUENCE_NAMES, max_index, sequence_value

DEFAULT_MAX_N = 11


def configured_max_n() -> int:
    env = os.environ.get("PAMLAB_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def _check_n(n: int, limit: int | None = None) -> None:
    limit = configured_max_n() if limit is None else limit
    if n > limit:
        raise ValueError(f"n={n} exceeds the configured maximum {limit} (set PAMLAB_MAX_N to raise it)")
    if n < 0:
        raise ValueError("n must be nonnegative")


def _class_perms(n: int, k: int):
    rest = [v for v in range(1, n + 1) if v != k]
    for t in itertools.permutations(rest):
        yield (k,) + t


def _by_class(fn, args_per_class: list, workers: int) -> list:
    if workers <= 1 or len(args_per_class) <= 1:
        return [fn(*a) for a in args_per_class]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*args_per_class)))


def _patterns(config) -> tuple:
    if isinstance(config, MachineConfig):
        return config.patterns
    return tuple(tuple(p) for p in config)


# -- counting ------------------------------------------------------------------

def _count_class(patterns: tuple, n: int, k: int) -> int:
    return sum(1 for p in _class_perms(n, k) if not _contains_231(out_seq(p, patterns)))


def count_by_first(config, n: int, workers: int = 1) -> list:
    """Counts of sortable permutations of length n with first entry 1..n."""
    _check_n(n)
    pats = _patterns(config)
    if n == 0:
        return []
    return _by_class(_count_class, [(pats, n, k) for k in range(1, n + 1)], workers)


def count_sortable(config, n: int, workers: int = 1) -> int:
    _check_n(n)
    if n == 0:
        return 1
    return sum(count_by_first(config, n, workers))


@dataclass
class CountTable:
    """Counts of sortable permutations by length, optionally split by first entry.

    ``rows`` maps ``n`` (or ``(n, k)`` when ``by_first``) to the count."""

    machine: MachineConfig
    rows: dict
    by_first: bool = False
    reference: str | None = None
    offset: int = 0

    def expected(self, key):
        if self.reference is None:
            return None
        if self.by_first:
            n, k = key
            return sequence_value(self.reference, n, k)
        return sequence_value(self.reference, key - self.offset)

    def verdict(self, key) -> str | None:
        exp = self.expected(key)
        if exp is None:
            return None
        return "match" if exp == self.rows[key] else "mismatch"

    @property
    def ok(self) -> bool:
        return all(self.verdict(k) != "mismatch" for k in self.rows)

    def totals(self) -> dict:
        if not self.by_first:
            return dict(self.rows)
        out: dict = {}
        for (n, _k), c in self.rows.items():
            out[n] = out.get(n, 0) + c
        return out

    def to_records(self) -> list:
        recs = []
        for key, count in self.rows.items():
            rec = {"n": key[0], "k": key[1]} if self.by_first else {"n": key}
            rec.update(count=count, reference=self.reference, verdict=self.verdict(key))
            recs.append(rec)
        return recs

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["n", "k", "count", "reference", "verdict"] if self.by_first else ["n", "count", "reference", "verdict"]
        w.writerow(cols)
        for rec in self.to_records():
            w.writerow(["" if rec[c] is None else rec[c] for c in cols])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "machine": [str(s) for s in self.machine.forbidden],
            "by_first": self.by_first,
            "reference": self.reference,
            "offset": self.offset,
            "rows": self.to_records(),
            "ok": self.ok,
        }

    def to_grid(self) -> str:
        """Table with k down the side and n across, plus a row of column sums."""
        if not self.by_first:
            raise ValueError("grid layout needs a by-first-element table")
        ns = sorted({n for n, _ in self.rows})
        tot = self.totals()
        width = max(len(str(c)) for c in tot.values()) + 1
        lines = ["k\\n".ljust(5) + "".join(str(n).rjust(width) for n in ns)]
        for k in range(1, max(ns) + 1):
            cells = [str(self.rows[(n, k)]).rjust(width) if (n, k) in self.rows else " " * width for n in ns]
            lines.append(str(k).ljust(5) + "".join(cells))
        lines.append("sum".ljust(5) + "".join(str(tot[n]).rjust(width) for n in ns))
        return "\n".join(lines)


def _resolve_reference(reference, offset, by_first):
    if reference is None:
        return None, 0
    if reference not in SEQUENCE_NAMES:
        raise ValueError(f"unknown reference {reference!r}")
    if by_first != (reference == "catalan-triangle"):
        raise ValueError("catalan-triangle compares by-first-element cells; other references compare row totals")
    return reference, DEFAULT_OFFSET[reference] if offset is None else offset


def count_table(config, n_max: int, by_first_element: bool = False, reference: str | None = None,
                offset: int | None = None, workers: int = 1, n_min: int = 1) -> CountTable:
    _check_n(n_max)
    reference, offset = _resolve_reference(reference, offset, by_first_element)
    config = config if isinstance(config, MachineConfig) else machine(*config)
    rows: dict = {}
    for n in range(n_min, n_max + 1):
        by_k = count_by_first(config, n, workers)
        if by_first_element:
            for k, c in enumerate(by_k, start=1):
                rows[(n, k)] = c
        else:
            rows[n] = sum(by_k) if n else 1
    table = CountTable(config, rows, by_first_element, reference, offset)
    if reference is not None:
        _check_reference_range(table)
    return table


def _check_reference_range(table: CountTable) -> None:
    top = max_index(table.reference)
    if top is None:
        return
    for key in table.rows:
        idx = key[0] if table.by_first else key - table.offset
        if idx > top or idx < 0:
            raise ValueError(f"reference {table.reference} does not cover row {key}")


# -- reports -------------------------------------------------------------------

@dataclass
class ReportRow:
    n: int
    ok: bool
    detail: dict = field(default_factory=dict)
    counterexample: object = None


@dataclass
class Report:
    title: str
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_text(self) -> str:
        lines = [self.title]
        for r in self.rows:
            det = " ".join(f"{k}={v}" for k, v in r.detail.items())
            line = f"n={r.n} {'ok' if r.ok else 'FAIL'} {det}".rstrip()
            if r.counterexample is not None:
                line += f" counterexample={_fmt(r.counterexample)}"
            lines.append(line)
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "rows": [
                {"n": r.n, "ok": r.ok, "detail": r.detail,
                 "counterexample": None if r.counterexample is None else _fmt(r.counterexample)}
                for r in self.rows
            ],
        }


def _fmt(obj) -> str:
    if isinstance(obj, PartialPermutation):
        return str(obj)
    if isinstance(obj, tuple) and all(isinstance(v, int) for v in obj):
        return " ".join(map(str, obj))
    return str(obj)


def compare_sequence(table: CountTable, reference: str, offset: int | None = None) -> Report:
    reference, offset = _resolve_reference(reference, offset, table.by_first)
    t = CountTable(table.machine, table.rows, table.by_first, reference, offset)
    _check_reference_range(t)
    rep = Report(f"{table.machine} vs {reference} (offset {offset})")
    for key, count in t.rows.items():
        n = key[0] if t.by_first else key
        exp = t.expected(key)
        detail = {"k": key[1]} if t.by_first else {}
        detail.update(count=count, expected=exp)
        rep.rows.append(ReportRow(n, count == exp, detail))
    return rep


# -- characterization sweeps ---------------------------------------------------

def _alpha_route(p: tuple) -> bool:
    if contains_anchored(p, (1, 3, 2)):
        return False
    return bij.in_phi_domain(bij.alpha(p))


def characterization_predicates(pair) -> dict:
    key = pair_key(pair)
    _patterns_for(key)  # raises for pairs without a characterization
    preds = {"patterns": lambda p: sortable_by_patterns(p, key)}
    if key == pair_key("132,231"):
        preds["blocks"] = sortable_by_blocks_132_231
    if key == PAIR_123_312:
        preds["four-conditions"] = four_conditions_123_312
        preds["alpha"] = _alpha_route
    return preds


def _verify_class(key: tuple, n: int, k: int) -> dict:
    preds = characterization_predicates(key)
    mism = {name: 0 for name in preds}
    first: dict = {}
    sortable = 0
    for p in _class_perms(n, k):
        s = not _contains_231(out_seq(p, key))
        sortable += s
        for name, f in preds.items():
            if f(p) != s:
                mism[name] += 1
                first.setdefault(name, p)
    return {"sortable": sortable, "mismatches": mism, "first": first}


def verify_characterization(pair, n_max: int = 9, workers: int = 1, n_min: int = 1) -> Report:
    """Compare the simulated sortable set with every characterization, per n."""
    key = pair_key(pair)
    preds = characterization_predicates(key)
    _check_n(n_max)
    rep = Report(f"characterizations of Sort({','.join(''.join(map(str, p)) for p in key)}): "
                 + ", ".join(preds))
    for n in range(n_min, n_max + 1):
        parts = _by_class(_verify_class, [(key, n, k) for k in range(1, n + 1)], workers)
        mism = {name: sum(pt["mismatches"][name] for pt in parts) for name in preds}
        cex = next((pt["first"][name] for pt in parts for name in preds if name in pt["first"]), None)
        detail = {"sortable": sum(pt["sortable"] for pt in parts)}
        detail.update({f"mismatch[{name}]": c for name, c in mism.items()})
        rep.rows.append(ReportRow(n, not any(mism.values()), detail, cex))
    return rep


# -- bijection sweeps ----------------------------------------------------------

def is_out_bijective(config, n: int) -> bool:
    _check_n(n, 8)
    pats = _patterns(config)
    image = {out_seq(p, pats) for p in itertools.permutations(range(1, n + 1))}
    return len(image) == math.factorial(n)


def _hat_row(n: int) -> ReportRow:
    fails = 0
    cex = None
    for sigma in itertools.permutations((1, 2, 3)):
        pats = bij.hat_pair(sigma)
        image = set()
        for p in itertools.permutations(range(1, n + 1)):
            o = out_seq(p, pats)
            image.add(o)
            if bij.inverse_out_hat(o, sigma) != p or out_seq(bij.inverse_out_hat(p, sigma), pats) != p:
                fails += 1
                cex = cex or (sigma, p)
        if len(image) != math.factorial(n):
            fails += 1
            cex = cex or (sigma, "image too small")
    return ReportRow(n, fails == 0, {"failures": fails}, cex)


def _alpha_row(n: int) -> ReportRow:
    fails = 0
    cex = None
    avoiders = [p for p in itertools.permutations(range(1, n + 1)) if not contains_anchored(p, (1, 3, 2))]
    for p in avoiders:
        if bij.alpha_inverse(bij.alpha(p)) != p:
            fails += 1
            cex = cex or p
    partials = list(enumerate_partial_permutations(n - 1))
    for a in partials:
        if bij.alpha(bij.alpha_inverse(a)) != a:
            fails += 1
            cex = cex or a
    expected = sum(math.comb(n - 1, k) * math.factorial(k) for k in range(n))
    sizes_ok = len(avoiders) == len(partials) == expected
    return ReportRow(n, fails == 0 and sizes_ok,
                     {"avoiders": len(avoiders), "partials": len(partials), "expected": expected}, cex)


def _phi_row(n: int) -> ReportRow:
    fails = 0
    cex = None
    domain, codomain = [], []
    for a in enumerate_partial_permutations(n):
        if bij.in_phi_domain(a):
            domain.append(a)
        if not contains_classical(a, (2, 1, 3)):
            codomain.append(a)
    image = set()
    for a in domain:
        b = bij.phi(a)
        image.add(b)
        if contains_classical(b, (2, 1, 3)) or bij.phi_inverse(b) != a:
            fails += 1
            cex = cex or a
    for b in codomain:
        if bij.phi(bij.phi_inverse(b)) != b:
            fails += 1
            cex = cex or b
    if image != set(codomain):
        fails += 1
    return ReportRow(n, fails == 0,
                     {"domain": len(domain), "image": len(image), "codomain": len(codomain), "failures": fails}, cex)


def _triangle_row(n: int) -> ReportRow:
    fails = 0
    cex = None
    members = {}

    def A(m, k):
        if (m, k) not in members:
            members[(m, k)] = set(bij.triangle_members(m, k)) if 1 <= k <= m else set()
        return members[(m, k)]

    for k in range(2, n + 1):
        cls = {p: bij.classify_triangle(p).cls for p in A(n, k)}
        a1 = [p for p, c in cls.items() if c == "A1"]
        a2 = [p for p, c in cls.items() if c == "A2"]
        swapped = {bij.triangle_swap(p) for p in a1}
        deleted = {bij.triangle_delete(p) for p in a2}
        checks = [
            len(a1) == len(A(n, k - 1)) == sequence_value("catalan-triangle", n, k - 1),
            len(a2) == len(A(n - 1, k)) == (sequence_value("catalan-triangle", n - 1, k) if n > 1 else 0),
            swapped == A(n, k - 1),
            deleted == A(n - 1, k),
            all(bij.triangle_swap_inverse(bij.triangle_swap(p)) == p for p in a1),
            all(bij.triangle_delete_inverse(bij.triangle_delete(p)) == p for p in a2),
            all(bij.triangle_delete(bij.triangle_delete_inverse(q)) == q for q in A(n - 1, k)),
            len(A(n, k)) == len(A(n, k - 1)) + len(A(n - 1, k)),
        ]
        if not all(checks):
            fails += 1
            cex = cex or (n, k, checks.index(False))
    return ReportRow(n, fails == 0, {"failures": fails}, cex)


BIJECTION_CHECKS = {
    "hat-roundtrip": _hat_row,
    "alpha": _alpha_row,
    "phi": _phi_row,
    "triangle": _triangle_row,
}


def verify_bijection(kind: str, n_max: int, n_min: int = 1) -> Report:
    try:
        row = BIJECTION_CHECKS[kind]
    except KeyError:
        raise ValueError(f"unknown bijection check {kind!r}; expected one of {', '.join(BIJECTION_CHECKS)}") from None
    _check_n(n_max, 9)
    rep = Report(f"bijection check: {kind}")
    for n in range(max(n_min, 2 if kind == "triangle" else 1), n_max + 1):
        rep.rows.append(row(n))
    return rep


__all__ = [
    "CountTable",
    "Report",
    "ReportRow",
    "compare_sequence",
    "configured_max_n",
    "count_by_first",
    "count_sortable",
    "count_table",
    "is_out_bijective",
    "verify_bijection",
    "verify_characterization",
]
