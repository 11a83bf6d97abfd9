"""Certificate forms for the fractional bound: verification, conversion,
tensoring, cover blow-ups, span independence, interval search."""

from __future__ import annotations

import random
from fractions import Fraction as F

import numpy as np
import pytest

from hfrac.errors import PreconditionError, VerificationError
from hfrac.fraccover import fractional_clique_cover
from hfrac.gfmat import FMatrix, rank
from hfrac.graphs import (
    complete,
    cycle,
    empty,
    generate,
    graph_from_edges,
    strong_product,
)
from hfrac.independence import alpha, greedy_clique_cover
from hfrac.minrank import cover_certificate
from hfrac.reps import (
    DRep,
    PairRep,
    RankRRep,
    SubspaceRep,
    cycle_drep,
    drep_from_fractional_cover,
    drep_from_pairrep,
    drep_violation,
    hfrac_upper_search,
    linind_check,
    pairrep_from_drep,
    rankr_to_drep,
    subspace_from_pairrep,
    tensor_dreps,
    verify_drep,
    verify_pairrep,
    verify_rankrrep,
    verify_subspacerep,
)


def random_graph(rng, n, prob=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob]
    return graph_from_edges(n, edges)


def drep_for(g, p=2):
    """A valid certificate for any graph: clique-partition matrix at d=1."""
    return DRep(1, cover_certificate(g, greedy_clique_cover(g), p).matrix)


def test_verify_drep_identity_on_empty_graph():
    assert verify_drep(empty(4), DRep(1, FMatrix.identity(2, 4)))


def test_verify_drep_pinpoints_bad_block():
    c5 = cycle(5)
    rep = cycle_drep(2, 2)
    a = rep.matrix.a.copy()
    a[0, 4] = 1  # vertices 0 and 2 are non-adjacent; block (0,2) spans cols 4..5
    failure = drep_violation(c5, DRep(2, FMatrix(2, a)))
    assert failure is not None and "(0, 2)" in failure


def test_pairrep_from_cycle_certificate():
    c5 = cycle(5)
    rep = cycle_drep(2, 2)
    pair = pairrep_from_drep(rep)
    assert (pair.n, pair.d) == (5, 2)
    assert verify_pairrep(c5, pair)
    assert pair.ratio() == F(5, 2) == rep.ratio()


def test_pairrep_roundtrip_preserves_certificate():
    for p in (2, 3):
        rep = cycle_drep(3, p)
        pair = pairrep_from_drep(rep)
        back = drep_from_pairrep(pair)
        assert verify_drep(cycle(7), back)
        assert rank(back.matrix) == rank(rep.matrix)
        assert pair.n == rank(rep.matrix)


def test_pairrep_identity_example():
    g = empty(4)
    pair = pairrep_from_drep(DRep(1, FMatrix.identity(3, 4)))
    assert pair.n == 4 and pair.d == 1
    assert verify_pairrep(g, pair)


def test_pairrep_violation_detected():
    c5 = cycle(5)
    pair = pairrep_from_drep(cycle_drep(2, 2))
    bad_pairs = list(pair.pairs)
    a0, b0 = bad_pairs[0]
    bad_pairs[0] = (FMatrix(2, np.zeros_like(a0.a)), b0)
    assert not verify_pairrep(c5, PairRep(pair.n, pair.d, tuple(bad_pairs)))


def test_subspace_representations():
    # coordinate lines on the empty graph
    plane = FMatrix.identity(2, 3)
    rep = SubspaceRep(3, 1, tuple(plane.block(0, 3, v, v + 1) for v in range(3)))
    assert verify_subspacerep(empty(3), rep)
    # all subspaces equal on a complete graph: no non-neighbors to avoid
    same = FMatrix(2, [[1], [0], [0]])
    assert verify_subspacerep(complete(3), SubspaceRep(3, 1, (same, same, same)))
    # derived from a verified pair representation of the 5-cycle
    pair = pairrep_from_drep(cycle_drep(2, 3))
    sub = subspace_from_pairrep(pair)
    assert verify_subspacerep(cycle(5), sub)
    assert sub.d == 2 and sub.n == 5


def test_subspace_violation():
    same = FMatrix(2, [[1], [0], [0]])
    rep = SubspaceRep(3, 1, (same, same, same))
    assert not verify_subspacerep(empty(3), rep)


def random_rankr_rep(rng, g, r, p):
    sizes = tuple(rng.randint(r, r + 1) for _ in range(g.n))
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    a = np.zeros((offs[-1], offs[-1]), dtype=np.int64)
    for u in range(g.n):
        for v in range(g.n):
            if u == v or g.has_edge(u, v):
                a[offs[u]:offs[u + 1], offs[v]:offs[v + 1]] = [
                    [rng.randrange(p) for _ in range(sizes[v])] for _ in range(sizes[u])
                ]
    for v in range(g.n):
        while rank(FMatrix(p, a[offs[v]:offs[v + 1], offs[v]:offs[v + 1]])) < r:
            a[offs[v]:offs[v + 1], offs[v]:offs[v + 1]] = [
                [rng.randrange(p) for _ in range(sizes[v])] for _ in range(sizes[v])
            ]
    return RankRRep(r, sizes, FMatrix(p, a))


def test_rankr_to_drep_identity_blocks():
    g = empty(3)
    rep = RankRRep(2, (2, 2, 2), FMatrix(3, np.kron(np.eye(3, dtype=np.int64), np.eye(2, dtype=np.int64))))
    out = rankr_to_drep(g, rep)
    assert out.matrix == rep.matrix  # already an r-representation


def test_rankr_to_drep_selects_nonzero_corner():
    g = empty(1)
    rep = RankRRep(1, (2,), FMatrix(2, [[0, 0], [0, 1]]))
    out = rankr_to_drep(g, rep)
    assert out.d == 1 and out.matrix == FMatrix.identity(2, 1)


def test_rankr_to_drep_random_monotone():
    rng = random.Random(51)
    for _ in range(15):
        g = random_graph(rng, rng.randint(3, 5))
        p = rng.choice((2, 3))
        r = rng.choice((1, 2))
        rep = random_rankr_rep(rng, g, r, p)
        assert verify_rankrrep(g, rep)
        out = rankr_to_drep(g, rep)
        assert out.d == r
        assert verify_drep(g, out)
        assert rank(out.matrix) <= rank(rep.matrix)


def test_rankr_rejects_invalid_input():
    g = cycle(5)
    bad = RankRRep(2, (1,) * 5, FMatrix.identity(2, 5))  # diagonal rank 1 < 2
    with pytest.raises(VerificationError):
        rankr_to_drep(g, bad)


def test_tensor_identity_certificates():
    a = DRep(1, FMatrix.identity(2, 2))
    b = DRep(1, FMatrix.identity(2, 3))
    t = tensor_dreps(a, b)
    assert verify_drep(empty(6), t)
    assert t.matrix == FMatrix.identity(2, 6)


def test_tensor_cycle_certificates():
    rep = cycle_drep(2, 2)
    sq = strong_product(cycle(5), cycle(5))
    t2 = tensor_dreps(rep, rep)
    assert t2.d == 4
    assert verify_drep(sq, t2)
    assert rank(t2.matrix) == 25
    assert t2.ratio() == rep.ratio() ** 2


def test_tensor_ratio_multiplies_on_random_certificates():
    rng = random.Random(52)
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 4))
        h = random_graph(rng, rng.randint(2, 4))
        p = rng.choice((2, 3))
        rg, rh = drep_for(g, p), drep_for(h, p)
        t = tensor_dreps(rg, rh)
        assert verify_drep(strong_product(g, h), t)
        assert t.ratio() == rg.ratio() * rh.ratio()


def test_drep_from_fractional_cover_examples():
    c5 = cycle(5)
    rep = drep_from_fractional_cover(c5, fractional_clique_cover(c5), 2)
    assert rep.d == 2 and rep.ratio() == F(5, 2)
    assert verify_drep(c5, rep)

    k4 = complete(4)
    rep = drep_from_fractional_cover(k4, fractional_clique_cover(k4), 3)
    assert rep.d == 1 and rank(rep.matrix) == 1
    assert rep.matrix == FMatrix.ones(3, 4, 4)

    c7 = cycle(7)
    rep = drep_from_fractional_cover(c7, fractional_clique_cover(c7), 2)
    assert rep.ratio() == F(7, 2)


def test_cycle_drep_k1_is_the_triangle_clique():
    rep = cycle_drep(1, 2)
    assert verify_drep(cycle(3), rep)
    assert rep.ratio() == 1  # complete graph: a single clique, not (2k+1)/2


@pytest.mark.parametrize("k", [2, 3, 4, 5])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_cycle_drep_values(k, p):
    rep = cycle_drep(k, p)
    g = cycle(2 * k + 1)
    assert verify_drep(g, rep)
    assert rep.ratio() == F(2 * k + 1, 2)
    assert rep.ratio() >= alpha(g)[0]


def test_drep_ratio_at_least_alpha_for_verified_reps():
    rng = random.Random(53)
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 6))
        rep = drep_for(g, 2)
        assert verify_drep(g, rep)
        assert rep.ratio() >= alpha(g)[0]


def test_linind_examples():
    c7 = cycle(7)
    pair = pairrep_from_drep(cycle_drep(3, 2))
    assert linind_check(pair, c7, {3, 5}, {0, 1})
    assert linind_check(pair, c7, set(), {0})
    with pytest.raises(PreconditionError):
        linind_check(pair, c7, {0, 1}, {3})  # S not independent
    with pytest.raises(PreconditionError):
        linind_check(pair, c7, {0}, {0, 2})  # not disjoint
    with pytest.raises(PreconditionError):
        linind_check(pair, c7, {0}, {1})  # S-T edge


def test_search_cycle5():
    report = hfrac_upper_search(cycle(5), 2, dmax=2)
    assert (report.lower, report.upper) == (2, F(5, 2))
    assert report.runtime_ms is not None


def test_search_empty_graph_is_tight():
    report = hfrac_upper_search(empty(4), 2)
    assert report.lower == report.upper == 4


def test_search_strong_square_uses_tensor_route():
    g = generate("strong(cycle:5,cycle:5)")
    report = hfrac_upper_search(g, 2, dmax=4)
    assert report.lower == 5
    assert report.upper <= F(25, 4)


def test_search_report_json_is_witnessed():
    report = hfrac_upper_search(cycle(7), 2, dmax=2)
    obj = report.to_json()
    assert obj["lower"] == "3" and obj["upper"] == "7/2"
    kinds = [w.get("kind") for w in obj["witness_refs"]]
    assert "independent_set" in kinds and "drep" in kinds
