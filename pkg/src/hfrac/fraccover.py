"""Exact fractional clique cover number with rational certificates.

``fractional_clique_cover(g)`` minimizes total clique weight subject to
covering every vertex with weight at least one.  The master problem is the
LP dual (maximize vertex weights subject to one unit per known clique);
rows are generated by pricing with the exact maximum-weight stable-set
oracle on the complement, and pricing stops only when the best reduced
cost is <= 0 exactly.  The cover itself is read off the dual vector of
the final solve, so the certificate is exact end to end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .budget import Budget
from .errors import VerificationError
from .graphs import Graph, complement, is_clique
from .independence import max_weight_independent_set
from .lp import F0, F1, LinearProgram, simplex_solve
from .serialize import frac_str, parse_frac


@dataclass(frozen=True)
class FractionalCover:
    """Weighted cliques covering every vertex with total weight >= 1.

    ``d`` is the least common denominator of the weights: scaling by d
    turns the cover into >= d integral clique-slots per vertex, which is
    what blow-up representation constructions consume downstream.
    """

    classes: tuple[tuple[tuple[int, ...], Fraction], ...]
    value: Fraction
    d: int

    def to_json(self, graph_expr: str | None = None) -> dict:
        out = {
            "kind": "fraccover",
            "value": frac_str(self.value),
            "d": self.d,
            "classes": [
                {"clique": list(cl), "weight": frac_str(w)} for cl, w in self.classes
            ],
        }
        if graph_expr:
            out["graph"] = graph_expr
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FractionalCover":
        classes = tuple(
            (tuple(int(v) for v in item["clique"]), parse_frac(item["weight"]))
            for item in obj["classes"]
        )
        return cls(classes, parse_frac(obj["value"]), int(obj["d"]))


def cover_violation(g: Graph, cover: FractionalCover) -> str | None:
    """None if every invariant holds exactly, else the first defect found."""
    total = F0
    coverage = [F0] * g.n
    for idx, (cl, w) in enumerate(cover.classes):
        if not is_clique(g, cl):
            return f"class {idx} is not a clique: {sorted(cl)}"
        if w < 0:
            return f"class {idx} has negative weight {w}"
        for v in cl:
            coverage[v] += w
        total += w
    for v in range(g.n):
        if coverage[v] < 1:
            return f"vertex {v} is undercovered: total weight {coverage[v]}"
    if total != cover.value:
        return f"declared value {cover.value} != weight sum {total}"
    d = lcm(*(w.denominator for _, w in cover.classes)) if cover.classes else 1
    if cover.d % d != 0 or cover.d < 1:
        return f"declared denominator {cover.d} incompatible with weights (lcm {d})"
    return None


def verify_cover(g: Graph, cover: FractionalCover) -> bool:
    return cover_violation(g, cover) is None


def _master_lp(n: int, cliques: list[tuple[int, ...]]) -> LinearProgram:
    rows = []
    for cl in cliques:
        members = set(cl)
        rows.append((tuple(F1 if v in members else F0 for v in range(n)), "<=", F1))
    return LinearProgram(
        objective=tuple(F1 for _ in range(n)),
        constraints=tuple(rows),
        bounds=tuple((F0, None) for _ in range(n)),
    )


def fractional_clique_cover(g: Graph, budget: Budget | None = None) -> FractionalCover:
    """Exact optimal fractional clique cover of g (equals the fractional
    chromatic number of the complement)."""
    if g.n == 0:
        return FractionalCover((), F0, 1)
    budget = budget or Budget()
    comp = complement(g)
    cliques: list[tuple[int, ...]] = [(v,) for v in range(g.n)]
    known = set(cliques)
    while True:
        sol = simplex_solve(_master_lp(g.n, cliques))
        assert sol.status == "optimal"  # master is bounded and feasible
        y = sol.assignment
        witness, weight = max_weight_independent_set(comp, y, budget)
        if weight <= 1:
            break
        new = tuple(sorted(witness))
        assert new not in known, "pricing returned a known clique"
        cliques.append(new)
        known.add(new)
    classes = tuple(
        (cl, w) for cl, w in zip(cliques, sol.dual) if w != 0
    )
    value = sol.value
    d = lcm(*(w.denominator for _, w in classes)) if classes else 1
    cover = FractionalCover(classes, value, d)
    failure = cover_violation(g, cover)
    if failure is not None:
        raise VerificationError(f"internal error: optimal cover invalid: {failure}")
    return cover


def full_lp_cover_value(g: Graph) -> Fraction:
    """Oracle for tests: solve the master over all maximal cliques at once."""
    from .independence import maximal_cliques

    if g.n == 0:
        return F0
    sol = simplex_solve(_master_lp(g.n, maximal_cliques(g)))
    assert sol.status == "optimal"
    return sol.value
