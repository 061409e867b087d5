"""2-walk (a, b)-parabolic graphs.

A connected irregular graph is (a, b)-parabolic when

    s(v) = -d(v)^2 + a*d(v) - b        for every vertex v,

with a a positive integer, b a nonnegative integer and a^2 - 8b > 0; here
s(v) is the sum of the degrees of the neighbours of v. Such graphs are exactly
the graphs with two main signless Laplacian eigenvalues, namely the roots of
x^2 - a x + 2b.

:func:`audit_lemmas` evaluates a collection of structural statements that
every parabolic bicyclic graph must satisfy, so that the classification sweep
can catch implementation errors in the generator or the checker.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .families import trace_chains
from .graph import (
    Graph,
    TwoWalkProfile,
    degree_profile,
    delete_pendants,
    is_bicyclic,
    is_connected,
    min_degree,
)


class NotParabolicInput(ValueError):
    pass


class NotBicyclic(ValueError):
    pass


class Reason(str, enum.Enum):
    NON_INTEGER_PARAMS = "NonIntegerParams"
    NEGATIVE_B = "NegativeB"
    NON_POSITIVE_A = "NonPositiveA"
    DISCRIMINANT_FAIL = "DiscriminantFail"
    EQUATION_FAILS = "EquationFails"
    DISCONNECTED = "Disconnected"


@dataclass(frozen=True)
class ParabolicParams:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0 or self.a * self.a - 8 * self.b <= 0:
            raise ValueError(f"invalid parabolic parameters ({self.a}, {self.b})")

    @property
    def main_eigenvalues(self) -> tuple[float, float]:
        """Roots of x^2 - a x + 2b, ascending."""
        disc = (self.a * self.a - 8 * self.b) ** 0.5
        return ((self.a - disc) / 2, (self.a + disc) / 2)


@dataclass(frozen=True)
class Parabolic:
    params: ParabolicParams

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def b(self) -> int:
        return self.params.b


@dataclass(frozen=True)
class Regular:
    k: int


@dataclass(frozen=True)
class NotParabolic:
    reason: Reason
    vertex: int | None = None
    a: Fraction | None = None
    b: Fraction | None = None


ParabolicVerdict = Union[Parabolic, Regular, NotParabolic]


def derive_params(profile: TwoWalkProfile) -> tuple[Fraction, Fraction] | None:
    """Solve the vertex equation for (a, b) from the first pair of vertices with different degrees.

    Returns ``None`` when all degrees are equal.
    """
    d, s = profile.degrees, profile.two_walk_sums
    u = 0
    v = next((w for w in range(1, len(d)) if d[w] != d[u]), None)
    if v is None:
        return None
    slope = Fraction(s[u] - s[v], d[u] - d[v])
    a = slope + d[u] + d[v]
    b = slope * d[v] + d[u] * d[v] - s[v]
    return a, b


def check_parabolic(g: Graph) -> ParabolicVerdict:
    if not is_connected(g):
        return NotParabolic(Reason.DISCONNECTED)
    prof = degree_profile(g)
    params = derive_params(prof)
    if params is None:
        return Regular(prof.degrees[0])
    a, b = params
    if a.denominator != 1 or b.denominator != 1:
        return NotParabolic(Reason.NON_INTEGER_PARAMS, a=a, b=b)
    a, b = int(a), int(b)
    if a <= 0:
        return NotParabolic(Reason.NON_POSITIVE_A, a=Fraction(a), b=Fraction(b))
    if b < 0:
        return NotParabolic(Reason.NEGATIVE_B, a=Fraction(a), b=Fraction(b))
    if a * a - 8 * b <= 0:
        return NotParabolic(Reason.DISCRIMINANT_FAIL, a=Fraction(a), b=Fraction(b))
    for v, (dv, sv) in enumerate(zip(prof.degrees, prof.two_walk_sums)):
        if sv != -dv * dv + a * dv - b:
            return NotParabolic(Reason.EQUATION_FAILS, vertex=v, a=Fraction(a), b=Fraction(b))
    return Parabolic(ParabolicParams(a, b))


def _num(x: Fraction | None):
    if x is None:
        return None
    return int(x) if x.denominator == 1 else str(x)


def verdict_json(verdict: ParabolicVerdict, audit: LemmaAudit | None = None) -> dict:
    out: dict = {"verdict": None, "a": None, "b": None, "reason": None}
    if isinstance(verdict, Parabolic):
        out.update(verdict="parabolic", a=verdict.a, b=verdict.b)
    elif isinstance(verdict, Regular):
        out.update(verdict="regular", k=verdict.k)
    else:
        out.update(verdict="not_parabolic", a=_num(verdict.a), b=_num(verdict.b), reason=verdict.reason.value)
        if verdict.vertex is not None:
            out["vertex"] = verdict.vertex
    if audit is not None:
        out["lemma_audit"] = audit.to_json()
    return out


# -- lemma audit ---------------------------------------------------------------

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "n/a"


@dataclass
class Check:
    status: str = PASS
    witnesses: list = field(default_factory=list)

    def fail(self, witness) -> None:
        self.status = FAIL
        self.witnesses.append(witness)

    def to_json(self) -> dict:
        return {"status": self.status, "witnesses": [str(w) for w in self.witnesses]}


@dataclass
class LemmaAudit:
    checks: dict[str, Check]

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks.values())

    def failures(self) -> dict[str, list]:
        return {k: c.witnesses for k, c in self.checks.items() if c.status == FAIL}

    def to_json(self) -> dict:
        return {k: c.to_json() for k, c in self.checks.items()}


def simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All simple cycles, from XORs of fundamental cycles; meant for small cycle rank."""
    parent = {0: None}
    order = [0]
    for v in order:
        for w in g.adjacency[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    tree = {frozenset((v, p)) for v, p in parent.items() if p is not None}

    def root_path(v):
        path = []
        while v is not None:
            path.append(v)
            v = parent[v]
        return path

    fundamental = []
    for u, v in g.edges():
        if frozenset((u, v)) in tree:
            continue
        pu, pv = root_path(u), root_path(v)
        common = set(pu) & set(pv)
        eset = {frozenset((u, v))}
        for path in (pu, pv):
            for x, y in zip(path, path[1:]):
                if x in common:
                    break
                eset.add(frozenset((x, y)))
        fundamental.append(eset)

    cycles = []
    for r in range(1, len(fundamental) + 1):
        for combo in itertools.combinations(fundamental, r):
            eset: set = set()
            for c in combo:
                eset ^= c
            cyc = _as_cycle(eset)
            if cyc is not None:
                cycles.append(cyc)
    return cycles


def _as_cycle(eset) -> tuple[int, ...] | None:
    nbrs: dict[int, list[int]] = {}
    for e in eset:
        x, y = tuple(e)
        nbrs.setdefault(x, []).append(y)
        nbrs.setdefault(y, []).append(x)
    if not nbrs or any(len(v) != 2 for v in nbrs.values()):
        return None
    start = min(nbrs)
    cyc = [start]
    prev, cur = start, nbrs[start][0]
    while cur != start:
        cyc.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    return tuple(cyc) if len(cyc) == len(nbrs) else None


def _oriented(chains):
    for c in chains:
        yield c
        yield tuple(reversed(c))


def audit_lemmas(g: Graph, params: ParabolicParams) -> LemmaAudit:
    """Evaluate the structural statements on a parabolic bicyclic graph.

    Checks tagged for graphs with a pendant vertex report ``n/a`` when the
    minimum degree is at least 2.
    """
    if not is_bicyclic(g):
        raise NotBicyclic("lemma audit needs a connected graph with n + 1 edges")
    verdict = check_parabolic(g)
    if not isinstance(verdict, Parabolic) or verdict.params != params:
        raise NotParabolicInput(f"graph is not ({params.a}, {params.b})-parabolic: {verdict}")
    a, b = params.a, params.b
    deg = g.degrees
    pendant = min_degree(g) == 1
    checks = {
        name: Check() if pendant else Check(NOT_APPLICABLE)
        for name in ("remark1", "lemma2", "lemma3", "lemma4", "lemma6", "lemma7")
    }
    checks["lemma5"] = Check()

    # Chains of the whole graph with degree-2 interior and ends of degree >= 3.
    for r in _oriented(trace_chains(g)):
        length = len(r) - 1
        if length < 2:
            continue
        x1, xt = r[0], r[-1]
        if deg[x1] == deg[xt]:
            if length > 3:
                checks["lemma5"].fail(("long chain", r))
            elif length == 3:
                for y2 in range(g.n):
                    if deg[y2] != 2:
                        continue
                    y1, y3 = g.adjacency[y2]
                    if deg[y1] == deg[y3] == deg[x1]:
                        checks["lemma5"].fail(("forbidden path", r, (y1, y2, y3)))
        elif length > 2:
            checks["lemma5"].fail(("unequal ends", r))

    if not pendant:
        return LemmaAudit(checks)

    if a - b < 3:
        checks["remark1"].fail(("a-b", a - b))

    dec = delete_pendants(g)
    core, orig = dec.core, dec.core_to_original
    to_core = dec.original_to_core()
    cdeg = core.degrees
    top = a - b - 1

    for i, v in enumerate(orig):
        if deg[v] not in (cdeg[i], top):
            checks["lemma2"].fail(("vertex", v, deg[v], cdeg[i]))

    if min(cdeg) < 2:
        checks["lemma3"].fail(("core min degree", min(cdeg)))
    if a - b < 4:
        checks["lemma3"].fail(("a-b", a - b))
    if a < 5:
        checks["lemma3"].fail(("a", a))

    for cyc in simple_cycles(g):
        k = len(cyc)
        trigger = any(
            cdeg[to_core[cyc[i]]] >= 3 and cdeg[to_core[cyc[(i + step) % k]]] == 2
            for i in range(k)
            for step in (1, -1)
        )
        if trigger and all(deg[v] == top for v in cyc):
            checks["lemma4"].fail(("cycle", cyc))

    core_branch = {i for i in range(core.n) if cdeg[i] >= 3}
    for rc in _oriented(trace_chains(core, core_branch)):
        r = tuple(orig[i] for i in rc)
        length = len(r) - 1
        end_deg = cdeg[rc[0]]
        if length < 3 or cdeg[rc[-1]] != end_deg or end_deg not in (3, 4):
            continue
        inner = r[1:-1]
        is_cycle = r[0] == r[-1]
        if any(deg[x] != deg[y] for x, y in zip(inner, inner[1:])):
            if length != 3 or b != 1:
                checks["lemma6"].fail(("(i) length/b", r))
            else:
                want_a, top_deg = (6, 4) if end_deg == 3 else (7, 5)
                pattern = (deg[r[1]], deg[r[2]])
                if a != want_a or deg[r[0]] != end_deg or pattern not in ((2, top_deg), (top_deg, 2)):
                    checks["lemma6"].fail(("(i) pattern", r))
        else:
            if deg[inner[0]] not in (2, top):
                checks["lemma6"].fail(("(ii) inner degree", r))
            if is_cycle and (length != 3 or deg[r[1]] != 2 or deg[r[2]] != 2):
                checks["lemma6"].fail(("(ii) cycle", r))

    two = [i for i in range(core.n) if cdeg[i] == 2]
    for i, j in itertools.combinations(two, 2):
        u, v = orig[i], orig[j]
        if deg[u] != deg[v]:
            continue
        nu = [deg[orig[x]] for x in core.adjacency[i]]
        nv = [deg[orig[x]] for x in core.adjacency[j]]
        for p, q in ((0, 1), (1, 0)):
            if (nu[0] == nv[p]) != (nu[1] == nv[q]):
                checks["lemma7"].fail(("pair", u, v))
                break

    return LemmaAudit(checks)
