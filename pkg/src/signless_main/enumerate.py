"""Exhaustive enumeration of connected bicyclic graphs and the classification checks.

Every connected bicyclic graph is a base (two cycles sharing a vertex, two
disjoint cycles joined by a path, or a theta graph) with a rooted tree hanging
from each base vertex. Graphs are generated base by base from all such
attachments and deduplicated with canonical certificates. Two graphs built on
non-isomorphic bases are never isomorphic (the base is the graph's 2-core),
so deduplication only has to happen within a base.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .canon import canonical_certificate
from .families import BaseShape, all_bases, base_graph, target_families
from .graph import Graph, from_edges, is_connected, min_degree, parse_graph6, to_graph6
from .parabolic import Parabolic, Regular, audit_lemmas, check_parabolic
from .spectra import graph_spectrum, main_eigenvalue_count

MAX_ENUMERATION_N = 14


@dataclass(frozen=True)
class EnumerationConfig:
    max_n: int
    parallel: bool = False
    emit_graph6: bool = False

    def __post_init__(self):
        if not 4 <= self.max_n <= MAX_ENUMERATION_N:
            raise ValueError(f"max_n must be in 4..{MAX_ENUMERATION_N}, got {self.max_n}")


# -- rooted trees ---------------------------------------------------------------


@lru_cache(maxsize=None)
def rooted_trees(k: int) -> tuple[tuple[int, ...], ...]:
    """All rooted trees on ``k`` vertices as canonical level sequences (root at level 0).

    Uses the Beyer-Hedetniemi successor rule, starting from the path and ending
    at the star.
    """
    if k < 1:
        raise ValueError("a rooted tree needs at least one vertex")
    seq = list(range(k))
    out = [tuple(seq)]
    while True:
        p = max((i for i in range(k) if seq[i] > 1), default=None)
        if p is None:
            return tuple(out)
        q = max(i for i in range(p) if seq[i] == seq[p] - 1)
        shift = p - q
        for i in range(p, k):
            seq[i] = seq[i - shift]
        out.append(tuple(seq))


def level_sequence_edges(seq: tuple[int, ...]) -> list[tuple[int, int]]:
    """Parent-child pairs (by position) of a level sequence."""
    edges = []
    last_at_level: dict[int, int] = {0: 0}
    for i in range(1, len(seq)):
        edges.append((last_at_level[seq[i] - 1], i))
        last_at_level[seq[i]] = i
    return edges


# -- bicyclic graphs ------------------------------------------------------------


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _attach(base: Graph, forest: tuple[tuple[int, ...], ...]) -> Graph:
    edges = base.edges()
    nxt = base.n
    for v, seq in enumerate(forest):
        if len(seq) == 1:
            continue
        ids = [v] + list(range(nxt, nxt + len(seq) - 1))
        nxt += len(seq) - 1
        edges.extend((ids[a], ids[b]) for a, b in level_sequence_edges(seq))
    return from_edges(nxt, edges)


def graphs_on_base(shape: BaseShape, n: int) -> dict[bytes, Graph]:
    """Isomorphism classes of n-vertex bicyclic graphs whose base is ``shape``."""
    base = base_graph(shape)
    extra = n - base.n
    found: dict[bytes, Graph] = {}
    if extra < 0:
        return found
    for sizes in _compositions(extra, base.n):
        for forest in itertools.product(*(rooted_trees(s + 1) for s in sizes)):
            g = _attach(base, forest)
            cert = canonical_certificate(g)
            if cert not in found:
                found[cert] = g
    return found


def _base_job(args) -> list[tuple[int, bytes, str]]:
    shape, max_n = args
    out = []
    for n in range(shape.vertex_count, max_n + 1):
        for cert, g in graphs_on_base(shape, n).items():
            out.append((n, cert, to_graph6(g)))
    return out


def enumerate_bicyclic(cfg: EnumerationConfig) -> list[Graph]:
    """One representative per isomorphism class of connected bicyclic graphs with n <= max_n.

    Sorted by (n, certificate); representatives are the canonical forms, so
    the output is independent of generation order and of ``cfg.parallel``.
    """
    jobs = [(shape, cfg.max_n) for shape in all_bases(cfg.max_n)]
    if cfg.parallel:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_base_job, jobs))
    else:
        results = [_base_job(j) for j in jobs]
    merged = {}
    for res in results:
        for n, cert, _ in res:
            merged[(n, cert)] = cert
    return [parse_graph6(cert.decode("ascii")) for _, cert in sorted(merged)]


def bicyclic_counts(graphs: list[Graph]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for g in graphs:
        counts[g.n] = counts.get(g.n, 0) + 1
    return dict(sorted(counts.items()))


def brute_force_bicyclic(n: int) -> set[bytes]:
    """Certificates of all connected n-vertex graphs with n + 1 edges, by labelled search.

    Independent oracle for :func:`enumerate_bicyclic`; only sensible for n <= 6.
    """
    pairs = list(itertools.combinations(range(n), 2))
    certs = set()
    for edges in itertools.combinations(pairs, n + 1):
        g = from_edges(n, edges)
        if is_connected(g):
            certs.add(canonical_certificate(g))
    return certs


# -- classification ---------------------------------------------------------------


@dataclass
class ClassificationReport:
    max_n: int
    counts: dict[int, int]
    found: list[dict]
    expected: list[str]
    unexpected: list[dict]
    missing: list[str]
    lemma1_violations: list[dict]
    audit_failures: list[dict]
    audited: int
    float_checked: int = 0
    float_mismatches: list[dict] = field(default_factory=list)
    max_residual_ratio: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.unexpected or self.missing or self.lemma1_violations or self.audit_failures or self.float_mismatches)

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "ok": self.ok,
            "bicyclic_counts": {str(k): v for k, v in self.counts.items()},
            "found": self.found,
            "expected": self.expected,
            "unexpected": self.unexpected,
            "missing": self.missing,
            "lemma1_violations": self.lemma1_violations,
            "lemma_audit": {"audited": self.audited, "failures": self.audit_failures},
            "float_crosscheck": {
                "checked": self.float_checked,
                "mismatches": self.float_mismatches,
                "max_residual_ratio": self.max_residual_ratio,
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def graph6_stream(self) -> str:
        return "".join(entry["graph6"] + "\n" for entry in self.found)


def verify_classification(cfg: EnumerationConfig, cross_check: bool = True) -> ClassificationReport:
    graphs = enumerate_bicyclic(cfg)
    targets = target_families(cfg.max_n)
    target_by_cert = {canonical_certificate(g): name for name, g in targets.items()}

    found, unexpected, violations, audit_failures, mismatches = [], [], [], [], []
    max_ratio = 0.0
    audited = 0
    seen_names = set()
    for g in graphs:
        g6 = to_graph6(g)
        if cross_check:
            spec = graph_spectrum(g)
            count = spec.exact_main_count
            ratio = spec.residual / spec.matrix_norm
            max_ratio = max(max_ratio, ratio)
            if spec.float_main_count != count:
                mismatches.append({"graph6": g6, "exact": count, "float": spec.float_main_count})
        else:
            count = main_eigenvalue_count(g)
        verdict = check_parabolic(g)
        if (count == 2) != isinstance(verdict, Parabolic) or (count == 1) != isinstance(verdict, Regular):
            violations.append({"graph6": g6, "main_count": count, "verdict": type(verdict).__name__})
        if count != 2:
            continue
        cert = canonical_certificate(g)
        name = target_by_cert.get(cert, "UNEXPECTED")
        entry = {
            "graph6": g6,
            "certificate": cert.decode("ascii"),
            "n": g.n,
            "min_degree": min_degree(g),
            "a": verdict.a if isinstance(verdict, Parabolic) else None,
            "b": verdict.b if isinstance(verdict, Parabolic) else None,
            "family": name,
        }
        found.append(entry)
        if name == "UNEXPECTED":
            unexpected.append(entry)
        else:
            seen_names.add(name)
        if isinstance(verdict, Parabolic):
            audit = audit_lemmas(g, verdict.params)
            audited += 1
            if not audit.passed:
                audit_failures.append({"graph6": g6, "failures": {k: [str(w) for w in v] for k, v in audit.failures().items()}})

    missing = sorted(set(targets) - seen_names)
    return ClassificationReport(
        max_n=cfg.max_n,
        counts=bicyclic_counts(graphs),
        found=found,
        expected=list(targets),
        unexpected=unexpected,
        missing=missing,
        lemma1_violations=violations,
        audit_failures=audit_failures,
        audited=audited,
        float_checked=len(graphs) if cross_check else 0,
        float_mismatches=mismatches,
        max_residual_ratio=max_ratio,
    )


# -- Lemma 1 equivalence sweep ----------------------------------------------------


@dataclass
class SweepReport:
    checked: dict[int, int]
    counterexamples: list[dict]
    integrality_failures: list[str]
    float_mismatches: list[dict]
    max_residual_ratio: float

    @property
    def ok(self) -> bool:
        return not (self.counterexamples or self.float_mismatches)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": {str(k): v for k, v in self.checked.items()},
            "counterexamples": self.counterexamples,
            "integrality_failures": self.integrality_failures,
            "float_crosscheck": {
                "mismatches": self.float_mismatches,
                "max_residual_ratio": self.max_residual_ratio,
            },
        }


def labelled_connected_graphs(n: int):
    """Every connected graph on vertex set 0..n-1 (labelled, no deduplication)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = from_edges(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
        if is_connected(g):
            yield g


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        keep = rng.random(len(pairs)) < p
        g = from_edges(n, [pr for pr, k in zip(pairs, keep) if k])
        if is_connected(g):
            return g


def sweep_corpus(max_exhaustive_n: int, samples: int, seed: int, random_ns=(8, 9, 10)):
    for n in range(1, max_exhaustive_n + 1):
        yield from labelled_connected_graphs(n)
    if samples:
        for n in random_ns:
            rng = np.random.default_rng([seed, n])
            for _ in range(samples):
                yield random_connected_graph(n, 0.4, rng)


def equivalence_sweep(
    max_exhaustive_n: int, samples: int, seed: int, cross_check: bool = True, random_ns=(8, 9, 10)
) -> SweepReport:
    """Check main count 1 <=> regular and main count 2 <=> parabolic on a graph corpus."""
    if max_exhaustive_n > 7:
        raise ValueError("exhaustive labelled sweep is limited to n <= 7")
    checked: dict[int, int] = {}
    counterexamples, integrality, mismatches = [], [], []
    max_ratio = 0.0
    for g in sweep_corpus(max_exhaustive_n, samples, seed, random_ns):
        checked[g.n] = checked.get(g.n, 0) + 1
        if cross_check:
            spec = graph_spectrum(g)
            count = spec.exact_main_count
            max_ratio = max(max_ratio, spec.residual / spec.matrix_norm if spec.matrix_norm else spec.residual)
            if spec.float_main_count != count:
                mismatches.append({"graph6": to_graph6(g), "exact": count, "float": spec.float_main_count})
        else:
            count = main_eigenvalue_count(g)
        verdict = check_parabolic(g)
        if (count == 2) != isinstance(verdict, Parabolic) or (count == 1) != isinstance(verdict, Regular):
            counterexamples.append({"graph6": to_graph6(g), "main_count": count, "verdict": repr(verdict)})
            if count == 2 and getattr(verdict, "reason", None) is not None and verdict.reason.value == "NonIntegerParams":
                integrality.append(to_graph6(g))
    return SweepReport(dict(sorted(checked.items())), counterexamples, integrality, mismatches, max_ratio)
