"""Canonical certificates for small graphs.

Colour refinement to an equitable partition, then backtracking over
individualisations of the first non-singleton cell. The certificate is the
graph6 string of the relabelling whose upper-triangle bitstring is
lexicographically smallest among all leaves of the search tree. Cell members
that are twins of each other (same neighbourhood apart from each other) give
isomorphic subtrees, so only one member per twin class is explored.
"""

from __future__ import annotations

from .graph import Graph, from_edges, to_graph6


def _refine(adj: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    n = len(adj)
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[w] for w in adj[v]]))) for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [order[s] for s in sigs]
        if len(order) == ncolors:
            return colors
        ncolors = len(order)


def _leaf_code(masks: list[int], colors: list[int]) -> int:
    n = len(masks)
    order = [0] * n
    for v, c in enumerate(colors):
        order[c] = v
    code = 0
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((mj >> order[i]) & 1)
    return code


def _search(adj, masks, colors, best):
    colors = _refine(adj, colors)
    n = len(adj)
    sizes = [0] * n
    for c in colors:
        sizes[c] += 1
    target = next((c for c in range(n) if sizes[c] > 1), None)
    if target is None:
        code = _leaf_code(masks, colors)
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    cell = [v for v in range(n) if colors[v] == target]
    reps: list[int] = []
    for v in cell:
        if not any(
            (masks[v] & ~(1 << r)) == (masks[r] & ~(1 << v)) for r in reps
        ):
            reps.append(v)
    for v in reps:
        child = [2 * c + 1 for c in colors]
        child[v] = 2 * colors[v]
        _search(adj, masks, child, best)


def canonical_code(g: Graph) -> int:
    """Lexicographically minimal upper-triangle bitstring, as an integer."""
    masks = [sum(1 << w for w in nb) for nb in g.adjacency]
    best: list[int | None] = [None]
    _search(g.adjacency, masks, [0] * g.n, best)
    assert best[0] is not None
    return best[0]


def canonical_graph(g: Graph) -> Graph:
    code = canonical_code(g)
    n = g.n
    nbits = n * (n - 1) // 2
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (code >> k) & 1:
                edges.append((i, j))
            k -= 1
    return from_edges(n, edges)


def canonical_certificate(g: Graph) -> bytes:
    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees) != sorted(g2.degrees):
        return False
    return canonical_code(g1) == canonical_code(g2)
