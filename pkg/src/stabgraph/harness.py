"""Batch verification sweeps with machine-readable reports.

verify_conjecture walks every canonical graph class with the endpoints
path-connected and records, per graph, the shortest-path length ell, the
contact order at (-1,1) for the unweighted pencil, and the contact order at
(-1,-1) for each sampled weight t. The interesting columns are the two
boolean matches: order == 2*ell in the unweighted case and order == 2*ell+2
in the weighted case. A mismatch is a finding to report, never an abort:
the sweep exists to hunt for counterexamples, and a worker error is likewise
recorded on its row and the sweep moves on.

Reports serialize to CSV (fixed columns, one line per graph and t sample) or
JSON (one object per graph). Row order is deterministic: by n, then by
canonical id, with t samples ascending inside a row. Graph work parallelizes
across processes since the arithmetic is exact and CPU-bound; the
STABGRAPH_THREADS environment variable caps the worker count (0 means auto).
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .contact import contact_order
from .errors import IoError, PreconditionViolated
from .graphcore import (
    ColoredGraph,
    Connectivity,
    canonical_id,
    enumerate_graphs,
    is_connected_1n,
    mod_append_tail,
    mod_attach,
    mod_prepend_head,
    shortest_path_len,
)

CSV_COLUMNS = ("n", "canonical_id", "edges", "ell", "K0", "match0",
               "t", "Kt", "matcht", "micros")

DEFAULT_T_SAMPLES = (Fraction(1, 4), Fraction(1, 2))


@dataclass(frozen=True)
class TResult:
    """Contact order of the weighted pencil at (-1,-1) for one t sample."""

    t: Fraction
    kt: int | None
    matcht: bool | None


@dataclass(frozen=True)
class ConjectureRow:
    """One graph's sweep record."""

    n: int
    canonical_id: str
    edges: str
    ell: int | None
    k0: int | None
    match0: bool | None
    t_results: tuple[TResult, ...]
    micros: int
    error: str | None = None

    def sort_key(self) -> tuple[int, str]:
        return (self.n, self.canonical_id)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "canonical_id": self.canonical_id,
            "edges": self.edges,
            "ell": self.ell,
            "K0": self.k0,
            "match0": self.match0,
            "t_results": [
                {"t": str(r.t), "Kt": r.kt, "matcht": r.matcht}
                for r in self.t_results
            ],
            "micros": self.micros,
            "error": self.error,
        }

    @staticmethod
    def from_dict(d: dict) -> "ConjectureRow":
        return ConjectureRow(
            n=d["n"],
            canonical_id=d["canonical_id"],
            edges=d["edges"],
            ell=d["ell"],
            k0=d["K0"],
            match0=d["match0"],
            t_results=tuple(
                TResult(Fraction(r["t"]), r["Kt"], r["matcht"])
                for r in d["t_results"]
            ),
            micros=d["micros"],
            error=d["error"],
        )


def resolve_workers(requested: int | None = None) -> int:
    """Effective worker count: requested (or auto), capped by STABGRAPH_THREADS."""
    count = requested if requested and requested > 0 else (os.cpu_count() or 1)
    cap = int(os.environ.get("STABGRAPH_THREADS", "0"))
    if cap > 0:
        count = min(count, cap)
    return max(1, count)


def _compute_row(payload: tuple[ColoredGraph, tuple[Fraction, ...]]) -> ConjectureRow:
    g, t_samples = payload
    start = time.perf_counter_ns()
    cid = canonical_id(g)
    edges = g.edge_text()
    try:
        ell = shortest_path_len(g, 1, g.n)
        k0 = contact_order(g, (-1, 1)).order
        t_results = []
        for t in t_samples:
            kt = contact_order(g.with_t(t), (-1, -1)).order
            t_results.append(TResult(t, kt, kt == 2 * ell + 2))
        micros = (time.perf_counter_ns() - start) // 1000
        return ConjectureRow(
            n=g.n,
            canonical_id=cid,
            edges=edges,
            ell=ell,
            k0=k0,
            match0=(k0 == 2 * ell),
            t_results=tuple(t_results),
            micros=int(micros),
        )
    except Exception as exc:
        micros = (time.perf_counter_ns() - start) // 1000
        return ConjectureRow(
            n=g.n,
            canonical_id=cid,
            edges=edges,
            ell=None,
            k0=None,
            match0=None,
            t_results=tuple(TResult(t, None, None) for t in t_samples),
            micros=int(micros),
            error=f"{type(exc).__name__}: {exc}",
        )


def verify_conjecture(
    n_max: int,
    t_samples: Sequence[Fraction] = DEFAULT_T_SAMPLES,
    workers: int | None = None,
) -> Iterator[ConjectureRow]:
    """Stream one row per canonical Connected1n class, n = 2..n_max."""
    if not 2 <= n_max <= 8:
        raise PreconditionViolated(f"n_max must be in 2..8, got {n_max}")
    samples = tuple(sorted(Fraction(t) for t in t_samples))
    for t in samples:
        if not 0 < t < 1:
            raise PreconditionViolated(f"t samples must lie in (0,1), got {t}")
    count = resolve_workers(workers)
    for n in range(2, n_max + 1):
        payloads = [(g, samples) for g in enumerate_graphs(n, require_connected_1n=True)]
        if count == 1 or len(payloads) < 4:
            rows = [_compute_row(p) for p in payloads]
        else:
            with ProcessPoolExecutor(max_workers=count) as pool:
                rows = list(pool.map(_compute_row, payloads, chunksize=8))
        rows.sort(key=ConjectureRow.sort_key)
        yield from rows


# ---------------------------------------------------------------------------
# modification sweep

@dataclass(frozen=True)
class ModificationFinding:
    """A modification whose order shift deviated from the proven pattern."""

    kind: str
    base_edges: str
    modified_edges: str
    base_order: int | None
    modified_order: int | None
    expected_delta: int


@dataclass(frozen=True)
class ModificationSummary:
    samples: int
    n_max: int
    seed: int
    append_pass: int
    prepend_pass: int
    attach_pass: int
    failures: tuple[ModificationFinding, ...]

    @property
    def all_passed(self) -> bool:
        return not self.failures


def _random_connected(rng: random.Random, n_lo: int, n_hi: int) -> ColoredGraph:
    while True:
        n = rng.randint(n_lo, n_hi)
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < 0.5
        ]
        g = ColoredGraph.of(n, edges)
        if is_connected_1n(g) is Connectivity.CONNECTED_1N:
            return g


def verify_modifications(sample_count: int, n_max: int, seed: int) -> ModificationSummary:
    """Check the +2 / +2 / 0 order-shift pattern on seeded random graphs.

    The tail and head cases use arbitrary Connected1n bases. The splice case
    needs its hypothesis: the last vertex pendant on the one before it, which
    an appended tail provides by construction.
    """
    rng = random.Random(seed)
    hi = max(2, n_max - 1)
    passes = {"append": 0, "prepend": 0, "attach": 0}
    failures: list[ModificationFinding] = []

    def check(kind: str, base: ColoredGraph, modified: ColoredGraph, delta: int):
        k_base = k_mod = None
        try:
            k_base = contact_order(base, (-1, 1)).order
            k_mod = contact_order(modified, (-1, 1)).order
            ok = k_mod == k_base + delta
        except Exception:
            ok = False
        if ok:
            passes[kind] += 1
        else:
            failures.append(ModificationFinding(
                kind, base.edge_text(), modified.edge_text(), k_base, k_mod, delta,
            ))

    for _ in range(sample_count):
        base = _random_connected(rng, 2, hi)
        check("append", base, mod_append_tail(base), 2)
        check("prepend", base, mod_prepend_head(base), 2)

        pendant = mod_append_tail(_random_connected(rng, 2, max(2, hi - 1)))
        h_n = rng.randint(1, 2)
        h_edges = [(1, 2)] if h_n == 2 and rng.random() < 0.7 else []
        links = {(1, pendant.n - 1)}
        if rng.random() < 0.5:
            links.add((h_n, pendant.n))
        check("attach", pendant, mod_attach(pendant, h_n, h_edges, links), 0)

    return ModificationSummary(
        samples=sample_count,
        n_max=n_max,
        seed=seed,
        append_pass=passes["append"],
        prepend_pass=passes["prepend"],
        attach_pass=passes["attach"],
        failures=tuple(failures),
    )


# ---------------------------------------------------------------------------
# report files

def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_report(rows: Iterable[ConjectureRow], format: str = "csv") -> str:
    """Render rows sorted by (n, canonical id); CSV flattens one line per t."""
    ordered = sorted(rows, key=ConjectureRow.sort_key)
    if format not in ("csv", "json"):
        raise PreconditionViolated(f"format must be csv or json, got {format!r}")
    if format == "json":
        return json.dumps([r.to_dict() for r in ordered], indent=2) + "\n"
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in ordered:
        base = [row.n, row.canonical_id, row.edges, row.ell,
                row.k0, row.match0]
        if row.t_results:
            for res in row.t_results:
                writer.writerow(
                    [_csv_cell(v) for v in base]
                    + [_csv_cell(res.t), _csv_cell(res.kt),
                       _csv_cell(res.matcht), _csv_cell(row.micros)]
                )
        else:
            writer.writerow(
                [_csv_cell(v) for v in base] + ["", "", "", _csv_cell(row.micros)]
            )
    return out.getvalue()


def write_report(rows: Iterable[ConjectureRow], path: str, format: str = "csv") -> None:
    """Render and write a report; see render_report for the layout."""
    text = render_report(rows, format)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write report to {path}: {exc}")


def load_report(path: str) -> list[ConjectureRow]:
    """Read back a JSON report written by write_report."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IoError(f"cannot read report from {path}: {exc}")
    return [ConjectureRow.from_dict(d) for d in data]
