"""Generators, products, predicates, expression parsing, file format."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from hfrac.errors import GraphParseError, GuardExceeded, PreconditionError
from hfrac.graphs import (
    alon,
    complement,
    complete,
    cycle,
    empty,
    generate,
    graph_from_edges,
    is_clique,
    is_independent_set,
    johnson,
    lex_product,
    parse_expr,
    read_graph_file,
    strong_product,
    universal_graph,
    write_graph_file,
)


def random_graph(rng, n, prob=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob]
    return graph_from_edges(n, edges)


def test_cycle_basics():
    c5 = cycle(5)
    assert c5.n == 5 and c5.m == 5
    assert c5.check_symmetric()
    assert c5.has_edge(0, 1) and not c5.has_edge(0, 2)


def test_johnson_2_4_is_empty():
    g = johnson(2, 4)
    assert g.n == 4 and g.m == 0
    # oracle: all pairs of distinct 3-subsets of [4] intersect in exactly 2
    for x, y in combinations(combinations(range(4), 3), 2):
        assert len(set(x) & set(y)) == 2


def test_alon_2_3_7_counts_match_exhaustive_oracle():
    g = alon(2, 3, 7)
    assert g.n == 21
    subsets = list(combinations(range(7), 5))
    expected = sum(
        1
        for x, y in combinations(subsets, 2)
        if len(set(x) & set(y)) % 2 == 1  # -1 mod 2
    )
    assert g.m == expected == 105


def test_johnson_adjacency_matches_labels():
    g = johnson(2, 6)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            expected = len(set(g.labels[u]) & set(g.labels[v])) % 2 != 0
            assert g.has_edge(u, v) == expected


def test_subset_vertex_order_is_lexicographic():
    g = johnson(2, 5)
    assert list(g.labels) == sorted(g.labels)


def test_complement_examples():
    assert complement(empty(4)).adj == complete(4).adj
    c7 = cycle(7)
    assert complement(complement(c7)).adj == c7.adj
    cc5 = complement(cycle(5))
    assert cc5.n == 5 and cc5.m == 5  # self-complementary


def test_strong_product_c5_c5():
    g = strong_product(cycle(5), cycle(5))
    assert g.n == 25 and g.m == 100
    assert all(g.degree(v) == 8 for v in range(25))
    # oracle: adjacency from coordinate rule
    c5 = cycle(5)
    for a in range(25):
        for b in range(a + 1, 25):
            u1, u2 = divmod(a, 5)
            v1, v2 = divmod(b, 5)
            expected = (u1 == v1 or c5.has_edge(u1, v1)) and (u2 == v2 or c5.has_edge(u2, v2))
            assert g.has_edge(a, b) == expected


def test_strong_product_identity_and_empty():
    h = cycle(6)
    assert strong_product(complete(1), h).adj == h.adj
    assert strong_product(empty(2), empty(3)).adj == empty(6).adj


def test_lex_product_examples():
    g = lex_product(cycle(5), empty(2))
    assert g.n == 10 and g.m == 20
    h = cycle(6)
    assert lex_product(h, complete(1)).adj == h.adj


def test_lex_complement_identity():
    g, h = cycle(5), empty(2)
    assert complement(lex_product(g, h)).adj == lex_product(complement(g), complement(h)).adj
    rng = random.Random(11)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 6))
        h = random_graph(rng, rng.randint(2, 6))
        assert complement(lex_product(g, h)).adj == lex_product(complement(g), complement(h)).adj


def test_product_cardinalities():
    rng = random.Random(5)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 6))
        h = random_graph(rng, rng.randint(2, 6))
        assert strong_product(g, h).n == g.n * h.n
        assert lex_product(g, h).n == g.n * h.n


def test_universal_graph_counts():
    assert universal_graph(2, 2, 1).n == 6
    assert universal_graph(2, 3, 1).n == 28


def test_universal_graph_nonadjacency_rule():
    g = universal_graph(2, 2, 1)
    # the standard-basis pairs (e1,e1), (e2,e2) are non-adjacent
    i = g.labels.index(((1, 0), (1, 0)))
    j = g.labels.index(((0, 1), (0, 1)))
    assert not g.has_edge(i, j)
    assert is_independent_set(g, [i, j])


def test_independent_set_and_clique_predicates():
    c5 = cycle(5)
    assert is_independent_set(c5, {0, 2})
    assert not is_independent_set(c5, {0, 1})
    assert is_clique(complete(4), [0, 1, 2])
    assert is_clique(c5, [0, 1])
    assert not is_clique(c5, [0, 1, 2])
    with pytest.raises(ValueError):
        is_independent_set(c5, [7])


def test_coded_diagonal_in_strong_square():
    g = strong_product(cycle(5), cycle(5))
    assert not is_independent_set(g, [i * 5 + i for i in range(5)])
    assert is_independent_set(g, [i * 5 + (2 * i) % 5 for i in range(5)])


@pytest.mark.parametrize("p,n", [(2, 4), (2, 8), (3, 5)])
def test_johnson_block_independent_set(p, n):
    # blocks of size p+2 give an independent set of size n
    assert n % (p + 2) == 0
    g = johnson(p, n)
    label_index = {lab: i for i, lab in enumerate(g.labels)}
    verts = []
    for b in range(n // (p + 2)):
        block = range(b * (p + 2), (b + 1) * (p + 2))
        verts.extend(label_index[x] for x in combinations(block, p + 1))
    assert len(verts) == n
    assert is_independent_set(g, verts)


def test_parse_roundtrip_and_errors():
    expr = parse_expr("strong(complement(cycle:5),lex(empty:2,complete:3))")
    assert str(expr) == "strong(complement(cycle:5),lex(empty:2,complete:3))"
    assert generate(expr).n == 5 * 6
    for bad in ["", "cycle", "cycle:", "unknown:3", "strong(cycle:5)", "cycle:5)", "johnson:4,6"]:
        with pytest.raises((GraphParseError, PreconditionError)):
            generate(bad)


def test_guards():
    with pytest.raises(GuardExceeded):
        generate("complete:100", max_vertices=50)
    with pytest.raises(GuardExceeded):
        universal_graph(2, 6, 2)  # 2^24 candidate pairs exceeds the cap
    with pytest.raises(PreconditionError):
        johnson(4, 8)  # 4 is not prime
    with pytest.raises(PreconditionError):
        alon(2, 4, 7)  # q not prime


def test_graph_file_roundtrip(tmp_path):
    g = strong_product(cycle(5), cycle(3))
    path = tmp_path / "g.txt"
    write_graph_file(g, str(path))
    h = read_graph_file(str(path))
    assert h.adj == g.adj
    assert generate(f"file:{path}").adj == g.adj


def test_graph_file_errors(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 1\n1 0\n")  # u >= v
    with pytest.raises(GraphParseError):
        read_graph_file(str(path))
    path.write_text("2 2\n0 1\n0 1\n")  # duplicate
    with pytest.raises(GraphParseError):
        read_graph_file(str(path))
    with pytest.raises(GraphParseError):
        read_graph_file(str(tmp_path / "missing.txt"))


def test_labels_are_unique_and_counted():
    g = johnson(2, 5)
    assert g.labels is not None and len(set(g.labels)) == g.n
    gp = strong_product(g, cycle(3))
    assert len(set(gp.labels)) == gp.n
