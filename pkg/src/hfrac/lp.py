"""Exact rational linear programming by dense two-phase simplex.

Everything is computed in ``fractions.Fraction``; a returned optimum comes
with a dual vector that certifies optimality exactly (checked by
``check_solution``).  Bland's rule is used in both phases, so the solver
terminates on every input.  Instances here are tiny (at most a few hundred
rows), so the dense tableau favors correctness over speed.

Variable bounds are folded away before the tableau is built: a finite
lower bound shifts the variable, an upper bound becomes an extra row, and
a fully free variable is split into a difference of two nonnegative ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .serialize import frac_str, parse_frac

REL_LE = "<="
REL_GE = ">="
REL_EQ = "="
_RELS = (REL_LE, REL_GE, REL_EQ)

F0 = Fraction(0)
F1 = Fraction(1)

Constraint = tuple[tuple[Fraction, ...], str, Fraction]
Bound = tuple[Fraction | None, Fraction | None]


@dataclass(frozen=True)
class LinearProgram:
    """Maximize ``objective . x + constant`` subject to constraints and bounds.

    Constraints are (coefficients, relation, rhs) triples with relation in
    {"<=", ">=", "="}.  ``bounds`` gives per-variable (lower, upper) with
    ``None`` for unbounded; omitted bounds mean every variable is free.
    """

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]
    constant: Fraction = F0
    bounds: tuple[Bound, ...] | None = None

    def __post_init__(self):
        nv = len(self.objective)
        for coeffs, rel, _ in self.constraints:
            if len(coeffs) != nv:
                raise DimensionMismatch(f"constraint width {len(coeffs)} != {nv} variables")
            if rel not in _RELS:
                raise ValueError(f"relation must be one of {_RELS}, got {rel!r}")
        if self.bounds is not None and len(self.bounds) != nv:
            raise DimensionMismatch("bounds length must equal variable count")

    def bound(self, j: int) -> Bound:
        return self.bounds[j] if self.bounds is not None else (None, None)


@dataclass(frozen=True)
class LpSolution:
    """status in {"optimal", "unbounded", "infeasible"}; on "optimal" the
    assignment is exactly feasible and the dual vector certifies optimality."""

    status: str
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    prow = tab[r]
    piv = prow[c]
    if piv != 1:
        inv = F1 / piv
        for j, x in enumerate(prow):
            if x:
                prow[j] = x * inv
    nz = [j for j, x in enumerate(prow) if x]
    for i, row in enumerate(tab):
        if i == r:
            continue
        f = row[c]
        if f:
            for j in nz:
                row[j] -= f * prow[j]
    basis[r] = c


def _optimize(tab: list[list[Fraction]], basis: list[int], cost: list[Fraction],
              enterable: list[bool]) -> str:
    m = len(tab)
    ncols = len(cost)
    while True:
        rows_y = [(i, cost[b]) for i, b in enumerate(basis) if cost[b]]
        entering = -1
        for j in range(ncols):
            if not enterable[j]:
                continue
            red = cost[j] - sum(yi * tab[i][j] for i, yi in rows_y if tab[i][j])
            if red > 0:
                entering = j  # Bland: lowest eligible index
                break
        if entering == -1:
            return "optimal"
        leaving = -1
        best: Fraction | None = None
        for i in range(m):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving == -1:
            return "unbounded"
        _pivot(tab, basis, leaving, entering)


def simplex_solve(lp: LinearProgram) -> LpSolution:
    """Exact optimum with primal assignment and certifying dual vector."""
    nv = len(lp.objective)

    # Map each variable onto nonnegative tableau columns.
    var_terms: list[list[tuple[int, int]]] = []  # var -> [(column, sign)]
    var_offset: list[Fraction] = []
    upper_rows: list[tuple[int, Fraction]] = []  # (column, bound on the shifted var)
    ncol = 0
    for j in range(nv):
        lo, up = lp.bound(j)
        if lo is None and up is None:
            var_terms.append([(ncol, 1), (ncol + 1, -1)])
            var_offset.append(F0)
            ncol += 2
        elif lo is not None:
            var_terms.append([(ncol, 1)])
            var_offset.append(Fraction(lo))
            if up is not None:
                if up < lo:
                    return LpSolution("infeasible")
                upper_rows.append((ncol, Fraction(up) - Fraction(lo)))
            ncol += 1
        else:
            var_terms.append([(ncol, -1)])
            var_offset.append(Fraction(up))
            ncol += 1

    # Internal rows: (structural coefficients, relation, rhs, original index, flipped)
    rows: list[tuple[list[Fraction], str, Fraction, int | None, bool]] = []
    for i, (coeffs, rel, rhs) in enumerate(lp.constraints):
        row = [F0] * ncol
        shift = Fraction(rhs) - sum(Fraction(coeffs[j]) * var_offset[j] for j in range(nv))
        for j in range(nv):
            cj = Fraction(coeffs[j])
            if cj:
                for col, sign in var_terms[j]:
                    row[col] += cj * sign
        rows.append((row, rel, shift, i, False))
    for col, ub in upper_rows:
        row = [F0] * ncol
        row[col] = F1
        rows.append((row, REL_LE, ub, None, False))

    norm_rows = []
    for row, rel, rhs, oi, _ in rows:
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
            rel = {REL_LE: REL_GE, REL_GE: REL_LE, REL_EQ: REL_EQ}[rel]
            norm_rows.append((row, rel, rhs, oi, True))
        else:
            norm_rows.append((row, rel, rhs, oi, False))

    m = len(norm_rows)
    n_aux = sum(2 if rel == REL_GE else 1 for _, rel, _, _, _ in norm_rows)
    width = ncol + n_aux
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    unit_col: list[int] = []  # column of the +e_i unit vector for each row
    artificial = [False] * width
    aux = ncol
    for row, rel, rhs, _, _ in norm_rows:
        full = row + [F0] * n_aux + [rhs]
        if rel == REL_LE:
            full[aux] = F1
            unit_col.append(aux)
            basis.append(aux)
            aux += 1
        elif rel == REL_GE:
            full[aux] = Fraction(-1)
            full[aux + 1] = F1
            artificial[aux + 1] = True
            unit_col.append(aux + 1)
            basis.append(aux + 1)
            aux += 2
        else:
            full[aux] = F1
            artificial[aux] = True
            unit_col.append(aux)
            basis.append(aux)
            aux += 1
        tab.append(full)

    if any(artificial):
        cost1 = [Fraction(-1) if artificial[j] else F0 for j in range(width)]
        enterable1 = [not artificial[j] for j in range(width)]
        status = _optimize(tab, basis, cost1, enterable1)
        assert status == "optimal"  # phase 1 is always bounded
        if any(tab[i][-1] for i in range(m) if artificial[basis[i]]):
            return LpSolution("infeasible")
        # Drive artificials out of the basis; rows that resist are redundant
        # and stay pinned at zero for the rest of the run.
        for i in range(m):
            if artificial[basis[i]]:
                for j in range(width):
                    if not artificial[j] and tab[i][j]:
                        _pivot(tab, basis, i, j)
                        break

    cost2 = [F0] * width
    for j in range(nv):
        oj = Fraction(lp.objective[j])
        if oj:
            for col, sign in var_terms[j]:
                cost2[col] += oj * sign
    enterable2 = [not artificial[j] for j in range(width)]
    status = _optimize(tab, basis, cost2, enterable2)
    if status == "unbounded":
        return LpSolution("unbounded")

    col_val = [F0] * width
    for i in range(m):
        col_val[basis[i]] = tab[i][-1]
    assignment = []
    for j in range(nv):
        x = var_offset[j]
        for col, sign in var_terms[j]:
            x += sign * col_val[col]
        assignment.append(x)
    value = sum(Fraction(lp.objective[j]) * assignment[j] for j in range(nv)) + Fraction(lp.constant)

    ybase = [cost2[b] for b in basis]
    dual = [F0] * len(lp.constraints)
    for i, (_, _, _, oi, flipped) in enumerate(norm_rows):
        if oi is None:
            continue
        c = unit_col[i]
        y = sum(ybase[r] * tab[r][c] for r in range(m) if tab[r][c])
        dual[oi] = -y if flipped else y

    sol = LpSolution("optimal", value, tuple(assignment), tuple(dual))
    assert check_solution(lp, sol), "internal error: optimum failed its own certificate"
    return sol


def check_solution(lp: LinearProgram, sol: LpSolution) -> bool:
    """Exact feasibility of the assignment, and, when a dual is present,
    exact optimality certification (signs, reduced costs, value equality)."""
    if sol.assignment is None:
        return False
    if len(sol.assignment) != len(lp.objective):
        raise DimensionMismatch("assignment length does not match variable count")
    x = [Fraction(v) for v in sol.assignment]
    nv = len(x)
    for coeffs, rel, rhs in lp.constraints:
        lhs = sum(Fraction(coeffs[j]) * x[j] for j in range(nv))
        if rel == REL_LE and not lhs <= rhs:
            return False
        if rel == REL_GE and not lhs >= rhs:
            return False
        if rel == REL_EQ and lhs != rhs:
            return False
    for j in range(nv):
        lo, up = lp.bound(j)
        if lo is not None and x[j] < lo:
            return False
        if up is not None and x[j] > up:
            return False
    primal = sum(Fraction(lp.objective[j]) * x[j] for j in range(nv)) + Fraction(lp.constant)
    if sol.value is not None and sol.value != primal:
        return False
    if sol.dual is None:
        return True
    if len(sol.dual) != len(lp.constraints):
        raise DimensionMismatch("dual length does not match constraint count")
    y = [Fraction(v) for v in sol.dual]
    for (_, rel, _), yi in zip(lp.constraints, y):
        if rel == REL_LE and yi < 0:
            return False
        if rel == REL_GE and yi > 0:
            return False
    dual_value = sum(yi * Fraction(rhs) for yi, (_, _, rhs) in zip(y, lp.constraints)) + Fraction(lp.constant)
    for j in range(nv):
        r = Fraction(lp.objective[j]) - sum(
            yi * Fraction(coeffs[j]) for yi, (coeffs, _, _) in zip(y, lp.constraints)
        )
        if r == 0:
            continue
        lo, up = lp.bound(j)
        if r > 0:
            if up is None:
                return False
            dual_value += r * up
        else:
            if lo is None:
                return False
            dual_value += r * lo
    return dual_value == primal


def lp_to_json(lp: LinearProgram) -> dict:
    out = {
        "objective": [frac_str(c) for c in lp.objective],
        "constant": frac_str(lp.constant),
        "constraints": [
            {"coeffs": [frac_str(c) for c in coeffs], "rel": rel, "rhs": frac_str(rhs)}
            for coeffs, rel, rhs in lp.constraints
        ],
    }
    if lp.bounds is not None:
        out["bounds"] = [
            [None if lo is None else frac_str(lo), None if up is None else frac_str(up)]
            for lo, up in lp.bounds
        ]
    return out


def lp_from_json(obj: dict) -> LinearProgram:
    objective = tuple(parse_frac(c) for c in obj["objective"])
    constraints = tuple(
        (tuple(parse_frac(c) for c in row["coeffs"]), row["rel"], parse_frac(row["rhs"]))
        for row in obj["constraints"]
    )
    bounds = None
    if obj.get("bounds") is not None:
        bounds = tuple(
            (None if lo is None else parse_frac(lo), None if up is None else parse_frac(up))
            for lo, up in obj["bounds"]
        )
    return LinearProgram(objective, constraints, parse_frac(obj.get("constant", "0")), bounds)


def solution_to_json(sol: LpSolution) -> dict:
    return {
        "status": sol.status,
        "value": None if sol.value is None else frac_str(sol.value),
        "assignment": None if sol.assignment is None else [frac_str(v) for v in sol.assignment],
        "dual": None if sol.dual is None else [frac_str(v) for v in sol.dual],
    }
