"""Colored graphs: representation, parsing, queries, modifications, enumeration.

A ColoredGraph is a simple undirected graph on vertices 1..n together with a
rational weight t in [0, 1) attached to the last vertex. Vertex 1 and vertex n
are distinguished throughout the package: the construction reads off the
(1,1) entry of a matrix inverse, and the weight colors vertex n.

Canonicalization quotients only by permutations that fix vertex 1 and vertex
n (those leave the constructed rational function literally unchanged), by
brute force over the (n-2)! internal permutations. Enumeration yields one
representative per class in deterministic order; n = 7 uses a per-mask
minimality check and n = 8, while supported, takes hours in pure Python (the
verification sweeps only need n <= 6).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    IndexOutOfRange,
    InvalidT,
    LoopEdge,
    ParseError,
    PreconditionViolated,
    TooLarge,
    UnsupportedLongForm,
)

from enum import Enum


class Connectivity(Enum):
    ISOLATED1 = "Isolated1"
    NOT_CONNECTED_1N = "NotConnected1n"
    CONNECTED_1N = "Connected1n"


def _validate_t(t) -> Fraction:
    t = Fraction(t)
    if not (0 <= t < 1):
        raise InvalidT(f"t must lie in [0, 1), got {t}")
    return t


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    edges: frozenset[tuple[int, int]]
    t: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 1:
            raise ParseError(f"vertex count must be >= 1, got {self.n}")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise LoopEdge(f"loop at vertex {i}")
            if i > j:
                i, j = j, i
            if not (1 <= i and j <= self.n):
                raise IndexOutOfRange(f"edge {{{i},{j}}} outside 1..{self.n}")
            norm.add((i, j))
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "t", _validate_t(self.t))

    @staticmethod
    def of(n: int, edges: Iterable[tuple[int, int]] = (), t=0) -> "ColoredGraph":
        return ColoredGraph(n, frozenset(tuple(e) for e in edges), Fraction(t))

    def with_t(self, t) -> "ColoredGraph":
        return replace(self, t=Fraction(t))

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def adjacency(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for i, j in self.edges:
            m[i - 1][j - 1] = 1
            m[j - 1][i - 1] = 1
        return m

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def edge_text(self) -> str:
        return " ".join(f"{i}-{j}" for i, j in sorted(self.edges))


def path_graph(n: int, t=0) -> ColoredGraph:
    return ColoredGraph.of(n, [(k, k + 1) for k in range(1, n)], t)


# ---------------------------------------------------------------------------
# parsing

def parse_edge_list(text: str) -> ColoredGraph:
    """Parse the edge-list format.

    Line 1 is ``<n> t=<p>/<q>`` (or ``t=0``); each following non-comment line
    is ``<i> <j>`` with 1-based vertex indices. Lines starting with ``#`` are
    comments; blank lines are ignored.
    """
    n = None
    t = None
    edges: set[tuple[int, int]] = set()
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not header_seen:
            if len(parts) != 2:
                raise ParseError("header must be '<n> t=<value>'", line=lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[0]!r}", line=lineno, col=1)
            if not parts[1].startswith("t="):
                raise ParseError("missing 't=' in header", line=lineno, col=raw.find(parts[1]) + 1)
            try:
                t = Fraction(parts[1][2:])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {parts[1][2:]!r}", line=lineno, col=raw.find(parts[1]) + 1)
            t = _validate_t(t)
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", line=lineno, col=1)
            header_seen = True
            continue
        if len(parts) != 2:
            raise ParseError("edge line must be '<i> <j>'", line=lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad vertex index in {line!r}", line=lineno)
        if i == j:
            raise LoopEdge(f"loop at vertex {i}", line=lineno)
        lo, hi = min(i, j), max(i, j)
        if lo < 1 or hi > n:
            raise IndexOutOfRange(f"edge {{{lo},{hi}}} outside 1..{n}", line=lineno)
        if (lo, hi) in edges:
            raise DuplicateEdge(f"edge {{{lo},{hi}}} repeated", line=lineno)
        edges.add((lo, hi))
    if not header_seen:
        raise ParseError("empty input: missing header line", line=1)
    return ColoredGraph(n, frozenset(edges), t)


def graph_to_edge_list(g: ColoredGraph) -> str:
    lines = [f"{g.n} t={g.t}"]
    lines.extend(f"{i} {j}" for i, j in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_graph6(line: str, t=0) -> ColoredGraph:
    """Parse one short-form graph6 line (n <= 62)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 must be ASCII")
    if data[0] == 126:  # '~' introduces the >62-vertex long forms
        raise UnsupportedLongForm("long-form graph6 (n > 62) is not supported")
    n = data[0] - 63
    if n < 0 or n > 62:
        raise ParseError(f"bad graph6 size byte {chr(data[0])!r}")
    if n == 0:
        raise ParseError("graph6 encodes an empty graph; need n >= 1")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(data) - 1 != need:
        raise ParseError(f"graph6 body has {len(data) - 1} bytes, expected {need}")
    bits: list[int] = []
    for b in data[1:]:
        v = b - 63
        if v < 0 or v > 63:
            raise ParseError(f"bad graph6 data byte {chr(b)!r}")
        bits.extend((v >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bits[npairs:]):
        raise ParseError("nonzero padding bits in graph6 body")
    edges = set()
    idx = 0
    for j in range(2, n + 1):  # column-major upper triangle
        for i in range(1, j):
            if bits[idx]:
                edges.add((i, j))
            idx += 1
    return ColoredGraph(n, frozenset(edges), Fraction(t))


def to_graph6(g: ColoredGraph) -> str:
    """Encode in short-form graph6 (drops t; the format has no weight slot)."""
    if g.n > 62:
        raise UnsupportedLongForm("short-form graph6 handles n <= 62 only")
    bits = []
    for j in range(2, g.n + 1):
        for i in range(1, j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# queries

def shortest_path_len(g: ColoredGraph, u: int, v: int) -> int | None:
    """BFS edge-count distance; None when unreachable."""
    if not (1 <= u <= g.n and 1 <= v <= g.n):
        raise IndexOutOfRange(f"vertex outside 1..{g.n}")
    if u == v:
        return 0
    adj = g.neighbors()
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for a in frontier:
            for b in adj[a]:
                if b not in dist:
                    dist[b] = dist[a] + 1
                    if b == v:
                        return dist[b]
                    nxt.append(b)
        frontier = nxt
    return None


def is_connected_1n(g: ColoredGraph) -> Connectivity:
    if g.degree(1) == 0:
        return Connectivity.ISOLATED1
    if shortest_path_len(g, 1, g.n) is None:
        return Connectivity.NOT_CONNECTED_1N
    return Connectivity.CONNECTED_1N


# ---------------------------------------------------------------------------
# modifications

def mod_append_tail(g: ColoredGraph) -> ColoredGraph:
    """Add a new last vertex joined only to the old last vertex."""
    edges = set(g.edges)
    edges.add((g.n, g.n + 1))
    return ColoredGraph(g.n + 1, frozenset(edges), g.t)


def mod_prepend_head(g: ColoredGraph) -> ColoredGraph:
    """Add a new first vertex joined only to the old first vertex."""
    edges = {(i + 1, j + 1) for i, j in g.edges}
    edges.add((1, 2))
    return ColoredGraph(g.n + 1, frozenset(edges), g.t)


def mod_attach(
    g: ColoredGraph,
    h_n: int,
    h_edges: Iterable[tuple[int, int]],
    links: Iterable[tuple[int, int]],
) -> ColoredGraph:
    """Insert a graph H between v_{n-1} and the (pendant) last vertex.

    Requires the last vertex of g to be pendant on v_{n-1}. H's vertices
    1..h_n are renumbered to n..n+h_n-1; the old last vertex becomes the new
    last vertex m = n + h_n and keeps its edge to v_{n-1}. ``links`` is a set
    of pairs (h_vertex, g_vertex) with g_vertex either n-1 (the joint; at
    least one such link required) or n (the old last vertex, now m).
    """
    n = g.n
    if n < 2:
        raise PreconditionViolated("attach needs at least 2 vertices")
    incident = [e for e in g.edges if n in e]
    if set(incident) != {(n - 1, n)}:
        raise PreconditionViolated(
            f"last vertex must be pendant on v_{n - 1}; its edges are {sorted(incident)}"
        )
    links = set(links)
    if not any(target == n - 1 for _, target in links):
        raise PreconditionViolated("need at least one link to the joint vertex")
    m = n + h_n
    edges = {e for e in g.edges if n not in e}
    edges.add((n - 1, m))
    for a, b in h_edges:
        if a == b:
            raise LoopEdge(f"loop at H vertex {a}")
        if not (1 <= min(a, b) and max(a, b) <= h_n):
            raise IndexOutOfRange(f"H edge {{{a},{b}}} outside 1..{h_n}")
        edges.add((min(a, b) + n - 1, max(a, b) + n - 1))
    for h, target in links:
        if not (1 <= h <= h_n):
            raise PreconditionViolated(f"link names H vertex {h} outside 1..{h_n}")
        if target == n - 1:
            edges.add((n - 1, h + n - 1))
        elif target == n:
            edges.add((h + n - 1, m))
        else:
            raise PreconditionViolated(
                f"links may target only v_{n - 1} or the relabeled last vertex (old v_{n})"
            )
    return ColoredGraph(m, frozenset(edges), g.t)


# ---------------------------------------------------------------------------
# canonical form under internal permutations

def _pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _perm_tables(n: int) -> tuple[list[tuple[int, int]], list[list[int]]]:
    """Bit-relabeling table per permutation fixing vertex 1 and vertex n."""
    pairs = _pair_list(n)
    index = {pair: k for k, pair in enumerate(pairs)}
    internal = list(range(2, n))
    tables = []
    for image in permutations(internal):
        sigma = {1: 1, n: n}
        sigma.update(zip(internal, image))
        tables.append([index[tuple(sorted((sigma[i], sigma[j])))] for i, j in pairs])
    return pairs, tables


def _mask_of(g: ColoredGraph, pairs, index=None) -> int:
    npairs = len(pairs)
    if index is None:
        index = {pair: k for k, pair in enumerate(pairs)}
    mask = 0
    for e in g.edges:
        mask |= 1 << (npairs - 1 - index[e])
    return mask


def _apply_table(mask: int, table: list[int], npairs: int) -> int:
    out = 0
    m = mask
    while m:
        low = m & -m
        k = npairs - low.bit_length()
        out |= 1 << (npairs - 1 - table[k])
        m ^= low
    return out


def _mask_to_bits(mask: int, npairs: int) -> bytes:
    return format(mask, f"0{npairs}b").encode("ascii") if npairs else b""


def canonical_form(g: ColoredGraph) -> bytes:
    """Lexicographically minimal upper-triangle adjacency bitstring over all
    vertex permutations fixing position 1 and position n."""
    if g.n > 10:
        raise TooLarge(f"canonical form scans (n-2)! permutations; n = {g.n} > 10")
    pairs, tables = _perm_tables(g.n)
    npairs = len(pairs)
    mask = _mask_of(g, pairs)
    best = min(_apply_table(mask, t, npairs) for t in tables)
    return _mask_to_bits(best, npairs)


def canonical_id(g: ColoredGraph) -> str:
    """Short stable hash of the canonical form, for report rows."""
    return hashlib.sha256(canonical_form(g)).hexdigest()[:12]


def enumerate_graphs(n: int, t=0, require_connected_1n: bool = False) -> Iterator[ColoredGraph]:
    """Yield one graph per canonical class on n vertices, ascending bitstring order."""
    if not (2 <= n <= 8):
        raise TooLarge(f"enumeration supports 2 <= n <= 8, got {n}")
    t = Fraction(t)
    pairs, tables = _perm_tables(n)
    npairs = len(pairs)
    nontrivial = [tb for tb in tables if tb != sorted(tb)]

    def emit(mask: int) -> ColoredGraph | None:
        edges = frozenset(
            pairs[npairs - 1 - k] for k in range(npairs) if mask >> k & 1
        )
        g = ColoredGraph(n, edges, t)
        if require_connected_1n and is_connected_1n(g) is not Connectivity.CONNECTED_1N:
            return None
        return g

    if n <= 6:
        seen: set[int] = set()
        for mask in range(1 << npairs):
            if mask in seen:
                continue
            # ascending scan: first sighting of an orbit is its minimum
            for tb in nontrivial:
                seen.add(_apply_table(mask, tb, npairs))
            g = emit(mask)
            if g is not None:
                yield g
    else:
        for mask in range(1 << npairs):
            if any(_apply_table(mask, tb, npairs) < mask for tb in nontrivial):
                continue
            g = emit(mask)
            if g is not None:
                yield g


def apply_internal_permutation(g: ColoredGraph, image: tuple[int, ...]) -> ColoredGraph:
    """Relabel internal vertices 2..n-1 by the given image tuple."""
    internal = list(range(2, g.n))
    if sorted(image) != internal:
        raise PreconditionViolated("image must permute the internal vertices")
    sigma = {1: 1, g.n: g.n}
    sigma.update(zip(internal, image))
    edges = frozenset(tuple(sorted((sigma[i], sigma[j]))) for i, j in g.edges)
    return ColoredGraph(g.n, edges, g.t)
