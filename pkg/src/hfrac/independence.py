"""Exact independence numbers, clique covers, and a weighted stable-set oracle.

All searches are deterministic bitset branch-and-bound: the branch vertex
comes from a static descending-degree order and the pruning bound is a
greedy clique cover of the remaining candidates, recomputed at every node.
When a budget runs out the searches surface a certified interval instead
of failing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .budget import Budget
from .errors import BudgetExhausted, SearchCutoff
from .graphs import Graph, is_clique


@dataclass(frozen=True)
class CliqueCover:
    """A partition of the vertex set into cliques."""

    classes: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def to_json(self, graph_expr: str | None = None) -> dict:
        out = {"kind": "cliquecover", "classes": [list(c) for c in self.classes]}
        if graph_expr:
            out["graph"] = graph_expr
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CliqueCover":
        return cls(tuple(tuple(int(v) for v in c) for c in obj["classes"]))


def clique_cover_violation(g: Graph, cover: CliqueCover) -> str | None:
    """None if the cover partitions V(g) into cliques, else the first defect."""
    seen: set[int] = set()
    for idx, cls in enumerate(cover.classes):
        if not is_clique(g, cls):
            return f"class {idx} is not a clique: {sorted(cls)}"
        for v in cls:
            if v in seen:
                return f"vertex {v} covered twice"
            seen.add(v)
    if len(seen) != g.n:
        missing = next(v for v in range(g.n) if v not in seen)
        return f"vertex {missing} is uncovered"
    return None


def _static_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def _greedy_cover_masks(g: Graph, cand: int, order: Sequence[int]) -> list[int]:
    """Greedy partition of the candidate set into cliques (masks)."""
    classes: list[int] = []
    for v in order:
        if not cand >> v & 1:
            continue
        placed = False
        for k, cm in enumerate(classes):
            if cm & ~g.adj[v] == 0:  # v adjacent to the whole class
                classes[k] = cm | 1 << v
                placed = True
                break
        if not placed:
            classes.append(1 << v)
    return classes


def greedy_clique_cover(g: Graph) -> CliqueCover:
    masks = _greedy_cover_masks(g, (1 << g.n) - 1, _static_order(g))
    return CliqueCover(tuple(tuple(_bits(m)) for m in masks))


def alpha(g: Graph, budget: Budget | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set: (size, witness).

    Raises SearchCutoff carrying the certified interval [best found, root
    bound] and the best witness when the budget runs out.
    """
    if g.n == 0:
        return 0, ()
    budget = budget or Budget()
    order = _static_order(g)
    full = (1 << g.n) - 1
    root_bound = len(_greedy_cover_masks(g, full, order))
    best_size = 0
    best_set = 0

    def dfs(cand: int, cur: int, size: int) -> None:
        nonlocal best_size, best_set
        budget.spend()
        if size > best_size:
            best_size = size
            best_set = cur
        if not cand:
            return
        if size + len(_greedy_cover_masks(g, cand, order)) <= best_size:
            return
        for v in order:
            if cand >> v & 1:
                break
        dfs(cand & ~(g.adj[v] | 1 << v), cur | 1 << v, size + 1)
        dfs(cand & ~(1 << v), cur, size)

    try:
        dfs(full, 0, 0)
    except BudgetExhausted:
        raise SearchCutoff("alpha", best_size, root_bound, tuple(_bits(best_set))) from None
    return best_size, tuple(_bits(best_set))


def max_weight_independent_set(
    g: Graph, weights: Sequence[Fraction], budget: Budget | None = None
) -> tuple[tuple[int, ...], Fraction]:
    """Exact maximum-weight independent set for nonnegative rational weights."""
    if len(weights) != g.n:
        raise ValueError("one weight per vertex required")
    w = [Fraction(x) for x in weights]
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    budget = budget or Budget()
    order = sorted(range(g.n), key=lambda v: (-w[v], -g.degree(v), v))
    zero = Fraction(0)
    best_weight = zero
    best_set = 0

    def bound(cand: int) -> Fraction:
        # weighted clique-cover bound: one max weight per greedy class
        total = zero
        for cm in _greedy_cover_masks(g, cand, order):
            total += max(w[v] for v in _bits(cm))
        return total

    def dfs(cand: int, cur: int, weight: Fraction) -> None:
        nonlocal best_weight, best_set
        budget.spend()
        if weight > best_weight:
            best_weight = weight
            best_set = cur
        if not cand:
            return
        if weight + bound(cand) <= best_weight:
            return
        for v in order:
            if cand >> v & 1:
                break
        dfs(cand & ~(g.adj[v] | 1 << v), cur | 1 << v, weight + w[v])
        dfs(cand & ~(1 << v), cur, weight)

    try:
        dfs((1 << g.n) - 1, 0, zero)
    except BudgetExhausted:
        raise SearchCutoff(
            "max_weight_independent_set", best_weight, bound((1 << g.n) - 1),
            tuple(_bits(best_set)),
        ) from None
    return tuple(_bits(best_set)), best_weight


def clique_cover_leq(g: Graph, k: int, budget: Budget | None = None) -> CliqueCover | None:
    """A partition of V(g) into at most k cliques, or None if impossible.

    Equivalent to properly coloring the complement with k colors; the
    search is exact (DSATUR-ordered backtracking).  Raises BudgetExhausted
    if the budget trips before the search resolves.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n == 0:
        return CliqueCover(())
    budget = budget or Budget()
    full = (1 << g.n) - 1
    comp = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]  # complement rows
    colors = [-1] * g.n

    def dfs() -> bool:
        budget.spend()
        best_v = -1
        best_key = (-1, -1)
        for v in range(g.n):
            if colors[v] != -1:
                continue
            sat = len({colors[u] for u in _bits(comp[v]) if colors[u] != -1})
            key = (sat, comp[v].bit_count())
            if key > best_key:
                best_key = key
                best_v = v
        if best_v == -1:
            return True
        used = {colors[u] for u in _bits(comp[best_v]) if colors[u] != -1}
        max_used = max((c for c in colors if c != -1), default=-1)
        for c in range(min(max_used + 1, k - 1) + 1):
            if c in used:
                continue
            colors[best_v] = c
            if dfs():
                return True
            colors[best_v] = -1
        return False

    if not dfs():
        return None
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return CliqueCover(tuple(tuple(sorted(cls)) for _, cls in sorted(classes.items())))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting); test-scale oracle."""
    out: list[tuple[int, ...]] = []
    full = (1 << g.n) - 1

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(_bits(r)))
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda u: (g.adj[u] & p).bit_count())
        ext = p & ~g.adj[pivot]
        for v in _bits(ext):
            expand(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return sorted(out)
