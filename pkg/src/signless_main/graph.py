"""Simple undirected graphs: construction, I/O, degree bookkeeping, pendant deletion."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 62

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoop(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class TooLarge(GraphError):
    pass


class MalformedEncoding(GraphError):
    pass


class UnsupportedLength(GraphError):
    pass


class CoreEmpty(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with sorted adjacency lists.

    Build instances with :func:`from_edges` or :func:`parse_graph6`; the
    constructor trusts its input.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __str__(self) -> str:
        return to_graph6(self)


@dataclass(frozen=True)
class TwoWalkProfile:
    degrees: tuple[int, ...]
    two_walk_sums: tuple[int, ...]


@dataclass(frozen=True)
class CoreDecomposition:
    """Result of deleting every degree-1 vertex once."""

    core: Graph
    core_to_original: tuple[int, ...]
    pendant_count_at: tuple[int, ...]

    def original_to_core(self) -> dict[int, int]:
        return {orig: i for i, orig in enumerate(self.core_to_original)}


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n > MAX_VERTICES:
        raise TooLarge(f"n={n} exceeds {MAX_VERTICES}")
    if n < 1:
        raise GraphError("graph needs at least one vertex")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


# -- graph6 -----------------------------------------------------------------


def _upper_triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: column-major over the strict upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _upper_triangle_pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise MalformedEncoding("empty graph6 string")
    if any(not (63 <= ord(c) <= 126) for c in s):
        raise MalformedEncoding(f"character outside graph6 range in {s!r}")
    if s[0] == "~":
        raise UnsupportedLength("long-form graph6 header (n > 62) is not supported")
    n = ord(s[0]) - 63
    if n == 0:
        raise MalformedEncoding("graph6 string encodes the empty graph")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedEncoding(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits: list[int] = []
    for c in body:
        val = ord(c) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedEncoding("nonzero padding bits")
    edges = [pair for pair, bit in zip(_upper_triangle_pairs(n), bits) if bit]
    return from_edges(n, edges)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# -- edge-list text ----------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 1:
        raise MalformedEncoding("edge list must start with a line holding n")
    try:
        n = int(rows[0][0])
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise MalformedEncoding(f"bad edge line: {' '.join(r)!r}")
            edges.append((int(r[0]), int(r[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise MalformedEncoding(str(exc)) from None
    return from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- invariants ----------------------------------------------------------------


def degree_profile(g: Graph) -> TwoWalkProfile:
    deg = g.degrees
    sums = tuple(sum(deg[u] for u in nb) for nb in g.adjacency)
    return TwoWalkProfile(tuple(deg), sums)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def min_degree(g: Graph) -> int:
    return min(g.degrees)


def max_degree(g: Graph) -> int:
    return max(g.degrees)


def cycle_rank(g: Graph) -> int:
    return g.m - g.n + len(components(g))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) == 1


def is_bicyclic(g: Graph) -> bool:
    return g.m == g.n + 1 and is_connected(g)


def delete_pendants(g: Graph) -> CoreDecomposition:
    """Remove every vertex of degree 1 in a single pass.

    The pass is not iterated: vertices that become pendant after the deletion
    stay in the core.
    """
    deg = g.degrees
    keep = [v for v in range(g.n) if deg[v] != 1]
    if len(keep) <= 1:
        raise CoreEmpty(f"deleting pendants of {to_graph6(g)} leaves {len(keep)} vertices")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    core = from_edges(len(keep), edges)
    counts = tuple(sum(1 for w in g.adjacency[v] if deg[w] == 1) for v in keep)
    return CoreDecomposition(core, tuple(keep), counts)
