import itertools

import pytest

from signless_main.canon import canonical_certificate
from signless_main.enumerate import (
    EnumerationConfig,
    bicyclic_counts,
    brute_force_bicyclic,
    enumerate_bicyclic,
    equivalence_sweep,
    labelled_connected_graphs,
    level_sequence_edges,
    rooted_trees,
    verify_classification,
)
from signless_main.families import base_shape, make_family
from signless_main.graph import delete_pendants, from_edges, is_connected, min_degree, to_graph6


def ahu(adj, root, parent=-1):
    return "(" + "".join(sorted(ahu(adj, w, root) for w in adj[root] if w != parent)) + ")"


def brute_rooted_trees(k):
    """Rooted trees on k vertices, rooted at 0, via all labelled edge sets and AHU dedup."""
    if k == 1:
        return {"()"}
    pairs = list(itertools.combinations(range(k), 2))
    codes = set()
    for edges in itertools.combinations(pairs, k - 1):
        g = from_edges(k, edges)
        if is_connected(g):
            codes.add(ahu(g.adjacency, 0))
    return codes


@pytest.mark.parametrize("k", range(1, 7))
def test_rooted_trees_match_brute_force(k):
    trees = rooted_trees(k)
    codes = set()
    for seq in trees:
        g = from_edges(k, level_sequence_edges(seq))
        assert is_connected(g) and g.m == k - 1
        codes.add(ahu(g.adjacency, 0))
    assert len(codes) == len(trees)
    assert codes == brute_rooted_trees(k)


def test_rooted_tree_counts():
    assert [len(rooted_trees(k)) for k in range(1, 11)] == [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]
    assert rooted_trees(3) == ((0, 1, 2), (0, 1, 1))


def test_config_bounds():
    with pytest.raises(ValueError):
        EnumerationConfig(3)
    with pytest.raises(ValueError):
        EnumerationConfig(15)


def test_enumerate_max4_is_diamond(diamond):
    graphs = enumerate_bicyclic(EnumerationConfig(4))
    assert len(graphs) == 1
    assert canonical_certificate(graphs[0]) == canonical_certificate(diamond)


def test_enumerate_max5():
    graphs = enumerate_bicyclic(EnumerationConfig(5))
    five = {canonical_certificate(g) for g in graphs if g.n == 5}
    d = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
    expected = {
        canonical_certificate(make_family("G1")),
        canonical_certificate(make_family("G6")),
        canonical_certificate(make_family("theta:3,2,1")),
        canonical_certificate(from_edges(5, d + [(0, 4)])),
        canonical_certificate(from_edges(5, d + [(1, 4)])),
    }
    assert five == expected
    assert bicyclic_counts(graphs) == {4: 1, 5: 5}


@pytest.mark.parametrize("n", [4, 5, 6])
def test_enumeration_matches_labelled_brute_force(n):
    graphs = enumerate_bicyclic(EnumerationConfig(n))
    mine = {canonical_certificate(g) for g in graphs if g.n == n}
    assert mine == brute_force_bicyclic(n)


def test_enumerated_graphs_are_bicyclic_with_known_base():
    for g in enumerate_bicyclic(EnumerationConfig(9)):
        assert is_connected(g) and g.m == g.n + 1
        core = g
        while min_degree(core) < 2:
            core = delete_pendants(core).core
        assert base_shape(core).kind in ("F1", "F2", "F3")


def test_enumeration_deterministic_and_parallel_agnostic():
    a = [to_graph6(g) for g in enumerate_bicyclic(EnumerationConfig(8))]
    b = [to_graph6(g) for g in enumerate_bicyclic(EnumerationConfig(8))]
    c = [to_graph6(g) for g in enumerate_bicyclic(EnumerationConfig(8, parallel=True))]
    assert a == b == c


def test_verify_max4():
    report = verify_classification(EnumerationConfig(4))
    assert [e["family"] for e in report.found] == ["G4"]
    assert (report.found[0]["a"], report.found[0]["b"]) == (6, 2)
    assert report.ok


def test_verify_max8():
    report = verify_classification(EnumerationConfig(8))
    names = sorted(e["family"] for e in report.found)
    assert names == sorted(["G4", "G1", "G6", "G2", "G5", "H(2)", "G3", "G7", "H(3)"])
    assert report.ok and not report.unexpected and not report.missing
    assert report.audited == 9
    assert report.counts == {4: 1, 5: 5, 6: 19, 7: 67, 8: 236}


def test_report_is_byte_stable():
    a = verify_classification(EnumerationConfig(7)).dumps()
    b = verify_classification(EnumerationConfig(7)).dumps()
    assert a == b


def test_verify_flags_missing_target(monkeypatch):
    import signless_main.enumerate as en

    real = en.enumerate_bicyclic
    g1 = canonical_certificate(make_family("G1"))
    monkeypatch.setattr(en, "enumerate_bicyclic", lambda cfg: [g for g in real(cfg) if canonical_certificate(g) != g1])
    report = en.verify_classification(EnumerationConfig(6))
    assert report.missing == ["G1"] and not report.ok


def test_labelled_connected_counts():
    assert [sum(1 for _ in labelled_connected_graphs(n)) for n in range(1, 6)] == [1, 1, 4, 38, 728]


def test_sweep_small_contains_c4_and_diamond():
    report = equivalence_sweep(4, 0, 0)
    assert report.ok and report.counterexamples == []
    assert report.checked == {1: 1, 2: 1, 3: 4, 4: 38}


def test_sweep_random_deterministic():
    a = equivalence_sweep(3, 50, 42, random_ns=(8,)).to_json()
    b = equivalence_sweep(3, 50, 42, random_ns=(8,)).to_json()
    assert a == b and a["ok"] and a["checked"]["8"] == 50


def test_sweep_limit():
    with pytest.raises(ValueError):
        equivalence_sweep(8, 0, 0)
