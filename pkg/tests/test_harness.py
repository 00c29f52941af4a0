"""Harness tests: sweep rows, report files, determinism, and the
modification summary."""

import dataclasses
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from stabgraph.contact import contact_order
from stabgraph.errors import IoError, PreconditionViolated
from stabgraph.graphcore import (
    ColoredGraph,
    Connectivity,
    canonical_id,
    is_connected_1n,
    mod_append_tail,
    mod_attach,
    path_graph,
)
from stabgraph.harness import (
    CSV_COLUMNS,
    ConjectureRow,
    TResult,
    load_report,
    resolve_workers,
    verify_conjecture,
    verify_modifications,
    write_report,
)

SQUARE = ColoredGraph.of(4, [(1, 2), (2, 3), (1, 4), (3, 4)])


def zero_micros(rows):
    return [dataclasses.replace(r, micros=0) for r in rows]


def brute_connected_class_count(n: int) -> int:
    pairs = list(combinations(range(1, n + 1), 2))
    internal = list(range(2, n))
    reps = set()
    count = 0
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        g = ColoredGraph(n, edges)
        best = None
        for image in permutations(internal):
            sigma = {1: 1, n: n}
            sigma.update(zip(internal, image))
            key = tuple(sorted(tuple(sorted((sigma[i], sigma[j]))) for i, j in g.edges))
            if best is None or key < best:
                best = key
        if best in reps:
            continue
        reps.add(best)
        if is_connected_1n(g) is Connectivity.CONNECTED_1N:
            count += 1
    return count


# ---------------------------------------------------------------------------
# sweep content

def test_sweep_small_all_match():
    rows = list(verify_conjecture(4, workers=1))
    assert rows == sorted(rows, key=ConjectureRow.sort_key)
    for row in rows:
        assert row.error is None
        assert row.ell >= 1
        assert row.k0 % 2 == 0
        assert row.match0 is True
        assert [r.t for r in row.t_results] == [Fraction(1, 4), Fraction(1, 2)]
        for res in row.t_results:
            assert res.kt % 2 == 0


def test_sweep_counts_match_brute_force():
    rows = list(verify_conjecture(4, [Fraction(1, 2)], workers=1))
    per_n = {}
    for row in rows:
        per_n[row.n] = per_n.get(row.n, 0) + 1
    assert per_n == {n: brute_connected_class_count(n) for n in (2, 3, 4)}
    assert len({(r.n, r.canonical_id) for r in rows}) == len(rows)


def test_two_path_row_values():
    row = next(iter(verify_conjecture(2, workers=1)))
    assert row.n == 2
    assert row.canonical_id == canonical_id(path_graph(2))
    assert row.edges == "1-2"
    assert (row.ell, row.k0, row.match0) == (1, 2, True)
    assert row.t_results == (
        TResult(Fraction(1, 4), 4, True),
        TResult(Fraction(1, 2), 4, True),
    )


def test_square_row_values():
    rows = list(verify_conjecture(4, workers=1))
    target = canonical_id(SQUARE)
    row = next(r for r in rows if r.canonical_id == target)
    assert (row.ell, row.k0, row.match0) == (1, 2, True)
    for res in row.t_results:
        assert res.kt == 4 and res.matcht is True


def test_sweep_never_aborts_on_row_error(monkeypatch):
    def boom(g, target):
        raise ValueError("synthetic failure")

    monkeypatch.setattr("stabgraph.harness.contact_order", boom)
    rows = list(verify_conjecture(2, workers=1))
    assert len(rows) == 1
    row = rows[0]
    assert row.error is not None and "ValueError" in row.error
    assert row.k0 is None and row.match0 is None
    assert all(r.kt is None and r.matcht is None for r in row.t_results)


def test_sweep_input_validation():
    with pytest.raises(PreconditionViolated):
        next(verify_conjecture(1))
    with pytest.raises(PreconditionViolated):
        next(verify_conjecture(9))
    with pytest.raises(PreconditionViolated):
        next(verify_conjecture(3, [Fraction(0)]))
    with pytest.raises(PreconditionViolated):
        next(verify_conjecture(3, [Fraction(1)]))


# ---------------------------------------------------------------------------
# determinism and parallelism

def test_serial_runs_identical_modulo_timing():
    a = zero_micros(verify_conjecture(3, workers=1))
    b = zero_micros(verify_conjecture(3, workers=1))
    assert a == b


def test_parallel_equals_serial():
    serial = zero_micros(verify_conjecture(3, workers=1))
    parallel = zero_micros(verify_conjecture(3, workers=2))
    assert serial == parallel


def test_resolve_workers(monkeypatch):
    monkeypatch.delenv("STABGRAPH_THREADS", raising=False)
    assert resolve_workers(3) == 3
    assert resolve_workers(None) >= 1
    monkeypatch.setenv("STABGRAPH_THREADS", "2")
    assert resolve_workers(8) == 2
    assert resolve_workers(1) == 1
    monkeypatch.setenv("STABGRAPH_THREADS", "0")
    assert resolve_workers(5) == 5


# ---------------------------------------------------------------------------
# report files

def test_csv_header_and_line_shape(tmp_path):
    rows = list(verify_conjecture(2, workers=1))
    out = tmp_path / "report.csv"
    write_report(rows, str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 2 * len(rows)
    cid = canonical_id(path_graph(2))
    assert lines[1].startswith(f"2,{cid},1-2,1,2,true,1/4,4,true,")
    assert lines[2].startswith(f"2,{cid},1-2,1,2,true,1/2,4,true,")


def test_csv_empty_report(tmp_path):
    out = tmp_path / "empty.csv"
    write_report([], str(out))
    assert out.read_text() == ",".join(CSV_COLUMNS) + "\n"


def test_csv_write_is_deterministic(tmp_path):
    rows = zero_micros(verify_conjecture(3, workers=1))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_report(rows, str(a))
    write_report(list(reversed(rows)), str(b))
    assert a.read_bytes() == b.read_bytes()


def test_json_round_trip(tmp_path):
    rows = list(verify_conjecture(3, workers=1))
    out = tmp_path / "report.json"
    write_report(rows, str(out), format="json")
    assert load_report(str(out)) == sorted(rows, key=ConjectureRow.sort_key)


def test_error_row_round_trip(tmp_path):
    row = ConjectureRow(
        n=3, canonical_id="abc", edges="1-2", ell=None, k0=None, match0=None,
        t_results=(TResult(Fraction(1, 4), None, None),), micros=17,
        error="ValueError: synthetic",
    )
    out = tmp_path / "err.json"
    write_report([row], str(out), format="json")
    assert load_report(str(out)) == [row]


def test_write_report_bad_format(tmp_path):
    with pytest.raises(PreconditionViolated):
        write_report([], str(tmp_path / "x.txt"), format="yaml")


def test_write_report_io_error(tmp_path):
    with pytest.raises(IoError):
        write_report([], str(tmp_path / "missing-dir" / "x.csv"))


# ---------------------------------------------------------------------------
# modification sweep

def test_modification_summary_passes():
    summary = verify_modifications(sample_count=6, n_max=5, seed=3)
    assert summary.all_passed
    assert summary.append_pass == 6
    assert summary.prepend_pass == 6
    assert summary.attach_pass == 6
    assert summary.failures == ()


def test_modification_known_pairs():
    two = path_graph(2)
    assert contact_order(two, (-1, 1)).order == 2
    assert contact_order(mod_append_tail(two), (-1, 1)).order == 4

    base = contact_order(SQUARE, (-1, 1)).order
    assert contact_order(mod_append_tail(SQUARE), (-1, 1)).order == base + 2

    four = path_graph(4)
    breve = mod_attach(four, 2, [(1, 2)], {(1, 3), (2, 4)})
    assert contact_order(breve, (-1, 1)).order == contact_order(four, (-1, 1)).order
