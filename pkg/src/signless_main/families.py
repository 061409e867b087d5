"""Named graph families and recognition of bicyclic bases.

The eight target graphs of the classification are built from their base
shapes:

    G1 = F1(3,3)       bowtie
    G2 = F2(3,3,1)     two triangles joined by an edge
    G3 = F2(3,3,3)     two triangles joined by a path of length 3
    G4 = theta(2,2,1)  diamond
    G5 = theta(3,3,1)
    G6 = theta(2,2,2)  K_{2,3}
    G7 = theta(3,3,3)
    H(k)               theta(k,2,2) with one pendant on each inner vertex of the length-k path
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph, from_edges, is_connected, cycle_rank, min_degree


class BadParameters(ValueError):
    pass


class NotABicyclicCore(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BaseShape:
    """``kind`` is "F1", "F2" or "F3"; ``lengths`` are (p, q), (p, q, t) or (p, q, r)."""

    kind: str
    lengths: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.lengths))})"

    @property
    def vertex_count(self) -> int:
        return sum(self.lengths) - 1


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}:{','.join(map(str, self.params))}"


# Parameters of every family graph, as stated alongside the classification.
EXPECTED_PARAMS: dict[str, tuple[int, int]] = {
    "G1": (7, 4),
    "G2": (7, 5),
    "G3": (6, 3),
    "G4": (6, 2),
    "G5": (7, 5),
    "G6": (5, 0),
    "G7": (6, 3),
    "H": (6, 2),
}

NAMED_BASES: dict[str, BaseShape] = {
    "G1": BaseShape("F1", (3, 3)),
    "G2": BaseShape("F2", (3, 3, 1)),
    "G3": BaseShape("F2", (3, 3, 3)),
    "G4": BaseShape("F3", (2, 2, 1)),
    "G5": BaseShape("F3", (3, 3, 1)),
    "G6": BaseShape("F3", (2, 2, 2)),
    "G7": BaseShape("F3", (3, 3, 3)),
}

_ALIASES = {
    "h": "H",
    "theta": "Theta",
    "f1": "F1",
    "f2": "F2",
    "f3": "Theta",
    "cycle": "Cycle",
    "path": "Path",
    "star": "Star",
    "complete": "Complete",
    "hypercube": "Hypercube",
    "cube": "Hypercube",
    "petersen": "Petersen",
}

FAMILY_NAMES = ["H:k", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "theta:p,q,r", "f1:p,q",
                "f2:p,q,t", "cycle:n", "path:n", "star:n", "complete:n", "hypercube:d", "petersen"]


def parse_family(text: str) -> FamilySpec:
    """Parse CLI names such as ``"H:3"``, ``"G5"`` or ``"theta:3,3,1"``."""
    m = re.fullmatch(r"\s*([A-Za-z][A-Za-z0-9]*)\s*(?::\s*([0-9,\s]+))?\s*", text)
    if not m:
        raise BadParameters(f"cannot parse family name {text!r}")
    raw, args = m.group(1), m.group(2)
    params = tuple(int(x) for x in args.split(",") if x.strip()) if args else ()
    if re.fullmatch(r"[Gg][1-7]", raw):
        if params:
            raise BadParameters(f"{raw} takes no parameters")
        return FamilySpec(raw.upper())
    name = _ALIASES.get(raw.lower())
    if name is None:
        raise BadParameters(f"unknown family {raw!r}")
    return FamilySpec(name, params)


def _need(spec: FamilySpec, count: int) -> tuple[int, ...]:
    if len(spec.params) != count:
        raise BadParameters(f"{spec.name} takes {count} parameter(s), got {len(spec.params)}")
    return spec.params


def _f1_edges(p: int, q: int) -> tuple[int, list[tuple[int, int]]]:
    cyc1 = list(range(p))
    cyc2 = [0] + list(range(p, p + q - 1))
    edges = [(cyc1[i], cyc1[(i + 1) % p]) for i in range(p)]
    edges += [(cyc2[i], cyc2[(i + 1) % q]) for i in range(q)]
    return p + q - 1, edges


def _f2_edges(p: int, q: int, t: int) -> tuple[int, list[tuple[int, int]]]:
    edges = [(i, (i + 1) % p) for i in range(p)]
    path = [0] + list(range(p, p + t))
    v = path[-1]
    edges += [(path[i], path[i + 1]) for i in range(t)]
    cyc2 = [v] + list(range(p + t, p + t + q - 1))
    edges += [(cyc2[i], cyc2[(i + 1) % q]) for i in range(q)]
    return p + q + t - 1, edges


def _theta_edges(lengths: tuple[int, ...]) -> tuple[int, list[tuple[int, int]], list[list[int]]]:
    # u = 0, v = 1; returns the vertex lists of the three u-v paths too
    nxt = 2
    edges = []
    paths = []
    for length in lengths:
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        path = [0] + inner + [1]
        edges += [(path[i], path[i + 1]) for i in range(length)]
        paths.append(path)
    return nxt, edges, paths


def base_graph(shape: BaseShape) -> Graph:
    ls = shape.lengths
    if shape.kind == "F1":
        if len(ls) != 2 or min(ls) < 3:
            raise BadParameters(f"F1 needs two cycle lengths >= 3, got {ls}")
        n, edges = _f1_edges(*ls)
    elif shape.kind == "F2":
        if len(ls) != 3 or min(ls[:2]) < 3 or ls[2] < 1:
            raise BadParameters(f"F2 needs cycle lengths >= 3 and path length >= 1, got {ls}")
        n, edges = _f2_edges(*ls)
    elif shape.kind == "F3":
        if len(ls) != 3 or min(ls) < 1 or sorted(ls)[1] < 2:
            raise BadParameters(f"theta needs lengths >= 1 with at most one equal to 1, got {ls}")
        n, edges, _ = _theta_edges(ls)
    else:
        raise BadParameters(f"unknown base kind {shape.kind!r}")
    return from_edges(n, edges)


def make_h(k: int) -> Graph:
    if k < 2:
        raise BadParameters(f"H(k) needs k >= 2, got {k}")
    n, edges, paths = _theta_edges((k, 2, 2))
    for inner in paths[0][1:-1]:
        edges.append((inner, n))
        n += 1
    return from_edges(n, edges)


def _hypercube(d: int) -> Graph:
    n = 1 << d
    return from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def make_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    name = spec.name
    if name in NAMED_BASES:
        return base_graph(NAMED_BASES[name])
    if name == "H":
        (k,) = _need(spec, 1)
        return make_h(k)
    if name == "Theta":
        return base_graph(BaseShape("F3", _need(spec, 3)))
    if name == "F1":
        return base_graph(BaseShape("F1", _need(spec, 2)))
    if name == "F2":
        return base_graph(BaseShape("F2", _need(spec, 3)))
    if name == "Cycle":
        (n,) = _need(spec, 1)
        if n < 3:
            raise BadParameters("cycle needs n >= 3")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "Path":
        (n,) = _need(spec, 1)
        if n < 1:
            raise BadParameters("path needs n >= 1")
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if name == "Star":
        (n,) = _need(spec, 1)
        if n < 2:
            raise BadParameters("star needs n >= 2")
        return from_edges(n, [(0, i) for i in range(1, n)])
    if name == "Complete":
        (n,) = _need(spec, 1)
        if n < 1:
            raise BadParameters("complete graph needs n >= 1")
        return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if name == "Hypercube":
        (d,) = _need(spec, 1)
        if not 1 <= d <= 5:
            raise BadParameters("hypercube dimension must be in 1..5")
        return _hypercube(d)
    if name == "Petersen":
        _need(spec, 0)
        return _petersen()
    raise BadParameters(f"unknown family {name!r}")


def target_families(max_n: int) -> dict[str, Graph]:
    """G1..G7 and H(k) with at most ``max_n`` vertices, keyed by display name."""
    out = {}
    for name in NAMED_BASES:
        g = make_family(FamilySpec(name))
        if g.n <= max_n:
            out[name] = g
    k = 2
    while 2 * k + 2 <= max_n:
        out[f"H({k})"] = make_h(k)
        k += 1
    return out


def trace_chains(g: Graph, branch: set[int] | None = None) -> list[tuple[int, ...]]:
    """Maximal walks between branch vertices whose inner vertices are not branch vertices.

    Branch vertices default to those of degree >= 3. Each chain is listed once,
    in the orientation that is lexicographically smaller. A walk that runs into
    a vertex of degree other than 2 that is not a branch vertex is dropped.
    """
    deg = g.degrees
    if branch is None:
        branch = {v for v in range(g.n) if deg[v] >= 3}
    seen = set()
    chains = []
    for b in sorted(branch):
        for w in g.adjacency[b]:
            walk = [b, w]
            prev, cur = b, w
            while cur not in branch and deg[cur] == 2:
                a, c = g.adjacency[cur]
                prev, cur = cur, (c if a == prev else a)
                walk.append(cur)
            if cur not in branch:
                continue
            key = min(tuple(walk), tuple(reversed(walk)))
            if key not in seen:
                seen.add(key)
                chains.append(key)
    return chains


def base_shape(core: Graph) -> BaseShape:
    if not is_connected(core) or cycle_rank(core) != 2 or min_degree(core) < 2:
        raise NotABicyclicCore("expected a connected graph with cycle rank 2 and minimum degree >= 2")
    deg = core.degrees
    branch = [v for v in range(core.n) if deg[v] >= 3]
    chains = trace_chains(core)
    if len(branch) == 1 and deg[branch[0]] == 4:
        lengths = sorted((len(c) - 1 for c in chains), reverse=True)
        return BaseShape("F1", tuple(lengths))
    if len(branch) == 2 and all(deg[v] == 3 for v in branch):
        loops = [c for c in chains if c[0] == c[-1]]
        links = [c for c in chains if c[0] != c[-1]]
        if len(links) == 3:
            return BaseShape("F3", tuple(sorted((len(c) - 1 for c in links), reverse=True)))
        if len(links) == 1 and len(loops) == 2:
            p, q = sorted((len(c) - 1 for c in loops), reverse=True)
            return BaseShape("F2", (p, q, len(links[0]) - 1))
    raise NotABicyclicCore(f"unexpected branch structure with degrees {sorted(deg[v] for v in branch)}")


def all_bases(max_n: int) -> list[BaseShape]:
    """Every base shape with at most ``max_n`` vertices, each isomorphism type once."""
    out = []
    for p in range(3, max_n + 2):
        for q in range(3, p + 1):
            if p + q - 1 <= max_n:
                out.append(BaseShape("F1", (p, q)))
            for t in range(1, max_n + 2 - p - q):
                out.append(BaseShape("F2", (p, q, t)))
    for p in range(2, max_n + 1):
        for q in range(2, p + 1):
            for r in range(1, q + 1):
                if p + q + r - 1 <= max_n:
                    out.append(BaseShape("F3", (p, q, r)))
    return sorted(out)
