"""Tests for graph construction, families, graph6 I/O and canonical forms."""

import math
import random

import pytest

from graphce.gf2 import GF2Vector
from graphce.graphs import (
    DuplicateEdgeWarning,
    Graph6Error,
    QubitSet,
    biadjacency,
    canonical_form,
    family,
    from_edges,
    is_connected,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    permute,
    random_connected_graph,
    write_edge_list,
    write_graph6,
)

NO13_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]


def no13():
    return from_edges(6, NO13_EDGES)


def test_from_edges_k2():
    g = from_edges(2, [(0, 1)])
    assert g.edges() == [(0, 1)]


def test_from_edges_no13():
    g = no13()
    assert g.n == 6
    assert g.edge_count() == 5
    assert g.has_edge(2, 5)


def test_from_edges_k3():
    g = from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert g.edge_count() == 3


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])


def test_from_edges_warns_on_duplicates():
    with pytest.warns(DuplicateEdgeWarning):
        g = from_edges(3, [(0, 1), (1, 0)])
    assert g.edge_count() == 1


def test_family_star():
    g = family("star", 4)
    assert sorted(neighborhood(g, 0)) == [1, 2, 3]
    assert g.degree(1) == 1


def test_family_snowflake_shape():
    g = family("snowflake", 8)
    assert g.n == 16
    for i in range(8):
        assert g.has_edge(i, i + 8)  # each core vertex carries one pendant
        assert g.degree(i + 8) == 1
    for u in range(8):
        for v in range(u + 1, 8):
            assert g.has_edge(u, v)


def test_family_ring3_is_triangle():
    assert family("ring", 3) == family("complete", 3)


def test_family_edge_counts_closed_forms():
    for n in range(3, 9):
        assert family("star", n).edge_count() == n - 1
        assert family("ring", n).edge_count() == n
        assert family("complete", n).edge_count() == n * (n - 1) // 2
        assert family("snowflake", n).edge_count() == n * (n - 1) // 2 + n


def test_family_validation():
    with pytest.raises(ValueError):
        family("ring", 2)
    with pytest.raises(ValueError):
        family("star", 0)
    with pytest.raises(ValueError):
        family("banana", 4)


def test_neighborhood_no13():
    # vertex 2 is qubit 3 of the figure; S_3 = Z_2 X_3 Z_4 Z_6
    assert sorted(neighborhood(no13(), 2)) == [1, 3, 5]


def test_neighborhood_simple_cases():
    assert list(neighborhood(from_edges(2, [(0, 1)]), 0)) == [1]
    star = family("star", 5)
    assert sorted(neighborhood(star, 0)) == [1, 2, 3, 4]
    with pytest.raises(ValueError):
        neighborhood(star, 9)


def test_biadjacency_no13():
    g = no13()
    a = QubitSet.from_members(6, [3, 5])  # qubits 4 and 6
    b = QubitSet.from_members(6, [0, 1, 2, 4])  # qubits 1, 2, 3, 5
    m = biadjacency(g, a, b)
    assert m.row(0) == GF2Vector.from_string("0011")
    assert m.row(1) == GF2Vector.from_string("0010")


def test_biadjacency_edge_cases():
    g = from_edges(2, [(0, 1)])
    empty = QubitSet(2, 0)
    m = biadjacency(g, empty, QubitSet.from_members(2, [0, 1]))
    assert m.rows == 0 and m.cols == 2
    single = biadjacency(g, QubitSet.from_members(2, [0]), QubitSet.from_members(2, [1]))
    assert single.row(0) == GF2Vector.from_string("1")
    with pytest.raises(ValueError):
        biadjacency(g, QubitSet.from_members(2, [0]), QubitSet.from_members(2, [0, 1]))


def test_biadjacency_transpose_symmetry():
    rng = random.Random(3)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 9), rng)
        members = [v for v in range(g.n) if rng.random() < 0.5]
        a = QubitSet.from_members(g.n, members)
        b = a.complement()
        assert biadjacency(g, a, b) == biadjacency(g, b, a).transpose()


def test_is_connected():
    assert is_connected(from_edges(2, [(0, 1)]))
    assert not is_connected(from_edges(2, []))
    assert is_connected(family("snowflake", 4))


def test_graph6_known_encodings():
    assert write_graph6(from_edges(2, [(0, 1)])) == "A_"
    assert write_graph6(from_edges(3, [(0, 1), (0, 2), (1, 2)])) == "Bw"
    assert parse_graph6("A_") == from_edges(2, [(0, 1)])
    assert parse_graph6("Bw") == from_edges(3, [(0, 1), (0, 2), (1, 2)])


def test_graph6_path_roundtrip():
    assert write_graph6(parse_graph6("Bg")) == "Bg"
    assert parse_graph6("Bg") == from_edges(3, [(0, 1), (1, 2)])


def test_graph6_random_roundtrip():
    rng = random.Random(17)
    for _ in range(1000):
        n = rng.randint(1, 16)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = from_edges(n, edges)
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_header_stripped():
    assert parse_graph6(">>graph6<<A_") == from_edges(2, [(0, 1)])


def test_graph6_malformed():
    with pytest.raises(Graph6Error):
        parse_graph6("A\x1f")  # character below printable range
    with pytest.raises(Graph6Error):
        parse_graph6("A")  # missing body byte
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("A" + chr(63 + 1))  # padding bit set for K2 body
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error):
        parse_graph6(chr(126))  # long-form length byte unsupported


def test_edge_list_roundtrip():
    g = no13()
    assert parse_edge_list(write_edge_list(g)) == g


def test_edge_list_validation():
    with pytest.raises(ValueError):
        parse_edge_list("3\n0 1\n")  # labels are 1-indexed
    with pytest.raises(ValueError):
        parse_edge_list("")


def test_canonical_form_relabelled_paths():
    p1 = from_edges(3, [(0, 1), (1, 2)])
    p2 = from_edges(3, [(1, 0), (0, 2)])  # path 1-0-2
    assert canonical_form(p1) == canonical_form(p2)


def test_canonical_form_distinguishes():
    path = from_edges(3, [(0, 1), (1, 2)])
    triangle = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert canonical_form(path) != canonical_form(triangle)


def test_canonical_form_all_path_labelings():
    import itertools

    path = from_edges(3, [(0, 1), (1, 2)])
    keys = {canonical_form(permute(path, order)) for order in itertools.permutations(range(3))}
    assert len(keys) == 1


def test_canonical_form_permutation_invariance():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(2, 8)
        g = random_connected_graph(n, rng)
        order = list(range(n))
        rng.shuffle(order)
        assert canonical_form(g) == canonical_form(permute(g, order))


def test_canonical_form_matches_brute_force_min():
    import itertools

    from graphce.graphs import graph_to_mask, mask_to_graph, pair_count

    for mask in range(1 << pair_count(4)):
        g = mask_to_graph(mask, 4)
        brute = min(graph_to_mask(permute(g, order)) for order in itertools.permutations(range(4)))
        assert canonical_form(g) == bytes([4]) + brute.to_bytes(1, "big")


def test_canonical_form_bound():
    with pytest.raises(ValueError):
        canonical_form(family("complete", 9))


def test_canonical_form_symmetric_graphs_fast():
    # fully symmetric worst cases must not blow up the ordering search
    for n in (6, 7, 8):
        canonical_form(family("complete", n))
        canonical_form(family("ring", n))


def test_family_vertex_counts():
    assert family("linear", 1).n == 1
    assert family("snowflake", 1).n == 2
    assert math.comb(5, 2) == family("complete", 5).edge_count()
