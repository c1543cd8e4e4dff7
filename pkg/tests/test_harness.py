import pytest

from pamlab.harness import (
    compare_sequence,
    configured_max_n,
    count_by_first,
    count_sortable,
    count_table,
    verify_bijection,
    verify_characterization,
)
from pamlab.machine import is_sortable, machine

from .conftest import perms

M_123_132 = machine("123", "132")
M_132_231 = machine("132", "231")


def test_count_matches_direct_filter():
    for cfg in (M_123_132, M_132_231, machine("123", "312"), machine("21")):
        for n in range(0, 7):
            direct = sum(1 for p in perms(n) if is_sortable(p, cfg))
            assert count_sortable(cfg, n) == direct


def test_distribution_consistency():
    for n in range(1, 8):
        assert sum(count_by_first(M_123_132, n)) == count_sortable(M_123_132, n)


def test_workers_do_not_change_results():
    serial = count_table(M_132_231, 7, by_first_element=True)
    parallel = count_table(M_132_231, 7, by_first_element=True, workers=2)
    assert serial.rows == parallel.rows
    assert list(serial.rows) == list(parallel.rows)
    a = verify_characterization("123,312", 6)
    b = verify_characterization("123,312", 6, workers=2)
    assert a.to_json() == b.to_json()


def test_count_table_csv():
    t = count_table(M_132_231, 7, reference="large-schroeder")
    lines = t.to_csv().splitlines()
    assert lines[0] == "n,count,reference,verdict"
    assert lines[-1] == "7,1806,large-schroeder,match"
    assert t.ok


def test_count_table_without_reference():
    t = count_table(M_132_231, 3)
    assert t.to_csv().splitlines()[1] == "1,1,,"
    assert t.ok


def test_by_first_table():
    t = count_table(M_123_132, 5, by_first_element=True, reference="catalan-triangle")
    assert t.rows[(5, 4)] == 14
    assert t.totals() == {1: 1, 2: 2, 3: 5, 4: 14, 5: 42}
    assert t.to_csv().splitlines()[0] == "n,k,count,reference,verdict"
    grid = t.to_grid().splitlines()
    assert grid[-1].split() == ["sum", "1", "2", "5", "14", "42"]
    assert t.ok
    with pytest.raises(ValueError):
        count_table(M_123_132, 3).to_grid()


def test_mismatch_is_reported():
    t = count_table(M_123_132, 5, reference="large-schroeder")
    assert not t.ok
    assert t.verdict(3) == "mismatch"
    rep = compare_sequence(count_table(M_123_132, 5), "catalan", 0)
    assert rep.ok and rep.to_text().endswith("PASS")
    rep = compare_sequence(count_table(M_123_132, 5), "large-schroeder")
    assert not rep.ok and rep.to_text().endswith("FAIL")


def test_reference_errors():
    with pytest.raises(ValueError):
        count_table(M_123_132, 3, reference="nope")
    with pytest.raises(ValueError):
        count_table(M_123_132, 3, reference="catalan-triangle")
    with pytest.raises(ValueError):
        count_table(M_123_132, 3, by_first_element=True, reference="catalan")
    with pytest.raises(ValueError):
        count_table(M_132_231, 3, reference="large-schroeder", offset=-20)


def test_safety_cap(monkeypatch):
    monkeypatch.setenv("PAMLAB_MAX_N", "5")
    assert configured_max_n() == 5
    with pytest.raises(ValueError):
        count_sortable(M_123_132, 6)
    monkeypatch.delenv("PAMLAB_MAX_N")
    assert configured_max_n() == 11


def test_verify_characterization_small():
    for pair in ("132,231", "123,132", "123,312"):
        rep = verify_characterization(pair, 6)
        assert rep.ok, rep.to_text()
        assert all(r.counterexample is None for r in rep.rows)
    with pytest.raises(ValueError):
        verify_characterization("123,213", 3)


def test_verify_bijection_small():
    for kind in ("hat-roundtrip", "alpha", "phi", "triangle"):
        assert verify_bijection(kind, 5).ok
    with pytest.raises(ValueError):
        verify_bijection("nope", 3)
    with pytest.raises(ValueError):
        verify_bijection("alpha", 10)


def test_report_json_shape():
    rep = verify_bijection("phi", 3)
    doc = rep.to_json()
    assert doc["ok"] is True
    assert [r["n"] for r in doc["rows"]] == [1, 2, 3]
