import pytest
from hypothesis import given

from signless_main.families import make_family
from signless_main.graph import (
    CoreEmpty,
    MalformedEncoding,
    SelfLoop,
    TooLarge,
    UnsupportedLength,
    VertexOutOfRange,
    cycle_rank,
    degree_profile,
    delete_pendants,
    from_edges,
    is_connected,
    min_degree,
    parse_edgelist,
    parse_graph6,
    to_edgelist,
    to_graph6,
)

from conftest import graphs


def test_from_edges_triangle():
    g = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))
    assert g.m == 3


def test_from_edges_deduplicates():
    g = from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_diamond_degrees(diamond):
    assert sorted(diamond.degrees, reverse=True) == [3, 3, 2, 2]
    assert diamond.m == 5


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (2, [(0, 0)], SelfLoop),
        (3, [(0, 3)], VertexOutOfRange),
        (3, [(-1, 0)], VertexOutOfRange),
        (63, [], TooLarge),
    ],
)
def test_from_edges_errors(n, edges, exc):
    with pytest.raises(exc):
        from_edges(n, edges)


def test_graph6_known_strings():
    k2 = parse_graph6("A_")
    assert k2.n == 2 and k2.edges() == [(0, 1)]
    k3 = parse_graph6("Bw")
    assert k3.edges() == [(0, 1), (0, 2), (1, 2)]
    assert to_graph6(k3) == "Bw"
    assert to_graph6(from_edges(1, [])) == "@"


def test_graph6_header_and_whitespace():
    assert parse_graph6(">>graph6<<Bw\n").m == 3


@pytest.mark.parametrize("text", ["", "B", "Bww", "B\x7f", "A`", "?"])
def test_graph6_malformed(text):
    with pytest.raises(MalformedEncoding):
        parse_graph6(text)


def test_graph6_long_form_rejected():
    with pytest.raises(UnsupportedLength):
        parse_graph6("~?@?" + "?" * 10)


def test_graph6_bit_order_against_hand_encoding():
    # path 0-1-2-3: upper-triangle column-major bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) = 101001
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert to_graph6(g) == "C" + chr(0b101001 + 63)


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    s = to_graph6(g)
    assert parse_graph6(s) == g
    assert to_graph6(parse_graph6(s)) == s


@given(graphs(max_n=10))
def test_edgelist_round_trip(g):
    assert parse_edgelist(to_edgelist(g)) == g


def test_edgelist_errors():
    with pytest.raises(MalformedEncoding):
        parse_edgelist("3\n0 1 2\n")
    with pytest.raises(MalformedEncoding):
        parse_edgelist("x\n")
    with pytest.raises(SelfLoop):
        parse_edgelist("2\n1 1\n")


def test_degree_profile_examples():
    p3 = from_edges(3, [(0, 1), (1, 2)])
    prof = degree_profile(p3)
    assert prof.degrees == (1, 2, 1) and prof.two_walk_sums == (2, 2, 2)
    prof = degree_profile(make_family("complete:3"))
    assert prof.degrees == (2, 2, 2) and prof.two_walk_sums == (4, 4, 4)
    prof = degree_profile(make_family("star:4"))
    assert prof.degrees == (3, 1, 1, 1) and prof.two_walk_sums == (3, 3, 3, 3)


@given(graphs(max_n=12))
def test_profile_invariants(g):
    prof = degree_profile(g)
    assert sum(prof.degrees) == 2 * g.m
    assert sum(prof.two_walk_sums) == sum(d * d for d in prof.degrees)
    for x in range(g.n):
        if prof.degrees[x] == 1:
            (y,) = g.adjacency[x]
            assert prof.two_walk_sums[x] == prof.degrees[y]


def test_connectivity_and_cycle_rank(diamond):
    c5 = make_family("cycle:5")
    assert is_connected(c5) and min_degree(c5) == 2 and cycle_rank(c5) == 1
    assert is_connected(diamond) and min_degree(diamond) == 2 and cycle_rank(diamond) == 2
    two_edges = from_edges(4, [(0, 1), (2, 3)])
    assert not is_connected(two_edges) and cycle_rank(two_edges) == 0


def test_delete_pendants_triangle_with_pendant():
    g = from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    dec = delete_pendants(g)
    assert dec.core == make_family("complete:3")
    assert dec.core_to_original == (0, 1, 2)
    assert dec.pendant_count_at == (1, 0, 0)


def test_delete_pendants_h2_core_is_k23():
    from signless_main.canon import is_isomorphic

    dec = delete_pendants(make_family("H:2"))
    assert is_isomorphic(dec.core, make_family("G6"))


def test_delete_pendants_identity_on_cycle():
    c5 = make_family("cycle:5")
    dec = delete_pendants(c5)
    assert dec.core == c5 and dec.pendant_count_at == (0,) * 5


def test_delete_pendants_single_pass():
    # path 0-1-2-3-4: one pass removes only the two ends
    dec = delete_pendants(make_family("path:5"))
    assert dec.core_to_original == (1, 2, 3)
    assert min_degree(dec.core) == 1


def test_delete_pendants_core_empty():
    with pytest.raises(CoreEmpty):
        delete_pendants(make_family("path:2"))
    with pytest.raises(CoreEmpty):
        delete_pendants(make_family("star:5"))


@given(graphs(min_n=3, max_n=11, connected=True))
def test_core_decomposition_invariants(g):
    try:
        dec = delete_pendants(g)
    except CoreEmpty:
        return
    deg = g.degrees
    assert [v for v in range(g.n) if deg[v] != 1] == list(dec.core_to_original)
    for i, v in enumerate(dec.core_to_original):
        if all(deg[w] == 1 for w in g.adjacency[v] if w not in dec.core_to_original):
            assert deg[v] == dec.core.degrees[i] + dec.pendant_count_at[i]
    if min_degree(dec.core) >= 2:
        again = delete_pendants(dec.core)
        assert again.core == dec.core
