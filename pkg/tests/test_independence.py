"""Exact stable sets, clique covers, and the weighted oracle."""

from __future__ import annotations

import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from hfrac.budget import Budget
from hfrac.errors import SearchCutoff
from hfrac.graphs import (
    complement,
    complete,
    cycle,
    generate,
    graph_from_edges,
    is_clique,
    is_independent_set,
    lex_product,
    strong_product,
)
from hfrac.independence import (
    CliqueCover,
    alpha,
    clique_cover_leq,
    clique_cover_violation,
    greedy_clique_cover,
    max_weight_independent_set,
    maximal_cliques,
)


def random_graph(rng, n, prob=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob]
    return graph_from_edges(n, edges)


def alpha_bruteforce(g):
    best = 0
    for size in range(g.n, -1, -1):
        for s in combinations(range(g.n), size):
            if is_independent_set(g, s):
                return size
    return best


def test_alpha_examples():
    size, witness = alpha(cycle(5))
    assert size == 2 and is_independent_set(cycle(5), witness)
    g = strong_product(cycle(5), cycle(5))
    size, witness = alpha(g)
    assert size == 5 and is_independent_set(g, witness)


def test_alpha_matches_bruteforce_on_small_graphs():
    rng = random.Random(21)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        assert alpha(g)[0] == alpha_bruteforce(g)


def test_alpha_budget_cutoff_carries_interval():
    g = generate("johnson:2,10")
    with pytest.raises(SearchCutoff) as info:
        alpha(g, Budget(nodes=40))
    cut = info.value
    assert cut.lower <= cut.upper
    assert is_independent_set(g, cut.witness)
    assert len(cut.witness) == cut.lower
    # the cutoff interval must bracket the exact value (known for C5 x C5)
    g2 = strong_product(cycle(5), cycle(5))
    with pytest.raises(SearchCutoff) as info2:
        alpha(g2, Budget(nodes=3))
    assert info2.value.lower <= 5 <= info2.value.upper


def test_max_weight_independent_set():
    c5 = cycle(5)
    _, w = max_weight_independent_set(c5, [F(1)] * 5)
    assert w == 2
    verts, w = max_weight_independent_set(c5, [F(0), F(1), F(0), F(0), F(0)])
    assert w == 1 and 1 in verts
    _, w = max_weight_independent_set(c5, [F(1, 2)] * 5)
    assert w == 1
    with pytest.raises(ValueError):
        max_weight_independent_set(c5, [F(-1)] * 5)


def test_max_weight_matches_unweighted_alpha():
    rng = random.Random(22)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 8))
        _, w = max_weight_independent_set(g, [F(1)] * g.n)
        assert w == alpha(g)[0]


def test_clique_cover_examples():
    assert clique_cover_leq(complete(4), 1).classes == ((0, 1, 2, 3),)
    cover = clique_cover_leq(cycle(5), 3)
    assert cover is not None and clique_cover_violation(cycle(5), cover) is None
    sizes = sorted(len(c) for c in cover.classes)
    assert sizes == [1, 2, 2]  # two edges and one vertex
    assert clique_cover_leq(cycle(5), 2) is None


def test_clique_cover_violations_reported():
    c5 = cycle(5)
    assert clique_cover_violation(c5, CliqueCover(((0, 1, 2), (3, 4)))) is not None  # not a clique
    assert clique_cover_violation(c5, CliqueCover(((0, 1), (3, 4)))) is not None  # misses vertex 2
    assert clique_cover_violation(c5, CliqueCover(((0, 1), (1, 2), (3, 4)))) is not None  # reuse


def test_greedy_cover_is_valid_and_bounds_alpha():
    rng = random.Random(23)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 9))
        cover = greedy_clique_cover(g)
        assert clique_cover_violation(g, cover) is None
        assert len(cover) >= alpha(g)[0]


def test_alpha_multiplicative_under_lex():
    rng = random.Random(24)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 5))
        h = random_graph(rng, rng.randint(2, 5))
        assert alpha(lex_product(g, h))[0] == alpha(g)[0] * alpha(h)[0]


def test_alpha_strong_with_complement_diagonal():
    rng = random.Random(25)
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 5))
        prod = strong_product(g, complement(g))
        diag = [i * g.n + i for i in range(g.n)]
        assert is_independent_set(prod, diag)
        assert alpha(prod)[0] >= g.n


def test_maximal_cliques_bruteforce():
    rng = random.Random(26)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 7))
        found = set(maximal_cliques(g))
        # oracle: a set is a maximal clique iff clique and no strict clique superset
        expected = set()
        for size in range(1, g.n + 1):
            for s in combinations(range(g.n), size):
                if not is_clique(g, s):
                    continue
                if any(is_clique(g, set(s) | {v}) for v in range(g.n) if v not in s):
                    continue
                expected.add(s)
        assert found == expected
