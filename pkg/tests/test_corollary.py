import pytest

from dist3.corollary import CorollaryRow, scan_range, verify_corollary
from dist3.distance import d3_connected
from dist3.generators import enumerate_labeled_graphs
from dist3.graph import GraphError, is_connected


def test_rows_up_to_six():
    rows = verify_corollary(6)
    assert [r.n for r in rows] == [1, 2, 3, 4, 5, 6]
    assert [r.graphs for r in rows] == [1, 2, 8, 64, 1024, 32768]
    assert [r.connected for r in rows] == [1, 1, 4, 38, 728, 26704]
    assert all(r.witnesses == 0 and r.ok for r in rows)


@pytest.mark.parametrize("n", [4, 5])
def test_gray_scan_matches_plain_enumeration(n):
    plain = [g for g in enumerate_labeled_graphs(n) if is_connected(g)]
    row = scan_range(n, 0, 1 << (n * (n - 1) // 2))
    assert row.connected == len(plain)
    assert row.witnesses == sum(d3_connected(g) for g in plain if g.n > 1)


def test_split_ranges_add_up():
    total = 1 << 10
    parts = [scan_range(5, lo, min(lo + 77, total)) for lo in range(0, total, 77)]
    whole = CorollaryRow(5)
    for p in parts:
        whole.merge(p)
    assert whole == scan_range(5, 0, total)


def test_row_verdicts():
    assert not CorollaryRow(7).ok
    assert CorollaryRow(7, 10, 10, 3, 3).ok
    assert not CorollaryRow(7, 10, 10, 3, 2).ok
    assert not CorollaryRow(6, 10, 10, 1, 1).ok


def test_bounds():
    with pytest.raises(GraphError):
        verify_corollary(8)
    with pytest.raises(GraphError):
        verify_corollary(0)


def test_parallel_matches_serial():
    assert verify_corollary(5, jobs=2) == verify_corollary(5, jobs=1)
