"""Exact simplex: optima, certificates, and a floating-point cross-check."""

from __future__ import annotations

import random
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.optimize import linprog

from hfrac.errors import DimensionMismatch
from hfrac.lp import (
    LinearProgram,
    LpSolution,
    check_solution,
    lp_from_json,
    lp_to_json,
    simplex_solve,
    solution_to_json,
)


def test_single_variable_box():
    lp = LinearProgram((F(1),), (((F(1),), "<=", F(3, 2)),))
    sol = simplex_solve(lp)
    assert sol.status == "optimal" and sol.value == F(3, 2)
    assert check_solution(lp, sol)


def test_two_variable_cap():
    lp = LinearProgram(
        (F(1), F(1)),
        (
            ((F(1), F(0)), "<=", F(1)),
            ((F(0), F(1)), "<=", F(1)),
            ((F(1), F(1)), "<=", F(3, 2)),
        ),
    )
    sol = simplex_solve(lp)
    assert sol.value == F(3, 2)
    assert check_solution(lp, sol)


def test_infeasible_and_unbounded():
    lp = LinearProgram((F(1),), (((F(1),), ">=", F(2)), ((F(1),), "<=", F(1))))
    assert simplex_solve(lp).status == "infeasible"
    lp = LinearProgram((F(1),), (((F(1),), ">=", F(0)),))
    assert simplex_solve(lp).status == "unbounded"


def test_check_solution_catches_tiny_violation():
    lp = LinearProgram((F(1),), (((F(1),), "<=", F(1)),))
    inside = LpSolution("optimal", None, (F(1, 2),), None)
    assert check_solution(lp, inside)
    violated = LpSolution("optimal", None, (F(1) + F(1, 10**9),), None)
    assert not check_solution(lp, violated)


def test_check_solution_dimension_mismatch():
    lp = LinearProgram((F(1), F(1)), ())
    with pytest.raises(DimensionMismatch):
        check_solution(lp, LpSolution("optimal", None, (F(0),), None))


def test_equality_and_bounds():
    lp = LinearProgram(
        (F(2), F(3)),
        (((F(1), F(1)), "=", F(4)),),
        bounds=((F(0), F(3)), (F(0), F(3))),
    )
    sol = simplex_solve(lp)
    assert sol.status == "optimal" and sol.value == F(11)
    assert check_solution(lp, sol)


def test_negative_rhs_rows():
    # max -x subject to -x <= -2  (so x >= 2)
    lp = LinearProgram((F(-1),), (((F(-1),), "<=", F(-2)),))
    sol = simplex_solve(lp)
    assert sol.status == "optimal" and sol.value == F(-2)
    assert check_solution(lp, sol)


def random_lp(rng):
    nv = rng.randint(1, 4)
    nc = rng.randint(1, 5)
    objective = tuple(F(rng.randint(-5, 5)) for _ in range(nv))
    constraints = []
    for _ in range(nc):
        coeffs = tuple(F(rng.randint(-4, 4)) for _ in range(nv))
        rel = rng.choice(("<=", ">=", "="))
        constraints.append((coeffs, rel, F(rng.randint(-6, 6))))
    bounds = tuple(
        rng.choice(
            (
                (None, None),
                (F(0), None),
                (F(-10), F(10)),
                (None, F(5)),
            )
        )
        for _ in range(nv)
    )
    return LinearProgram(objective, tuple(constraints), F(rng.randint(-3, 3)), bounds)


def scipy_status(lp, presolve=True):
    nv = len(lp.objective)
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for coeffs, rel, rhs in lp.constraints:
        row = [float(c) for c in coeffs]
        if rel == "<=":
            a_ub.append(row)
            b_ub.append(float(rhs))
        elif rel == ">=":
            a_ub.append([-x for x in row])
            b_ub.append(-float(rhs))
        else:
            a_eq.append(row)
            b_eq.append(float(rhs))
    bounds = [
        (None if lo is None else float(lo), None if up is None else float(up))
        for lo, up in (lp.bound(j) for j in range(nv))
    ]
    res = linprog(
        [-float(c) for c in lp.objective],
        A_ub=np.array(a_ub) if a_ub else None,
        b_ub=np.array(b_ub) if b_ub else None,
        A_eq=np.array(a_eq) if a_eq else None,
        b_eq=np.array(b_eq) if b_eq else None,
        bounds=bounds,
        method="highs",
        options={"presolve": presolve},
    )
    if res.status == 0:
        return "optimal", -res.fun + float(lp.constant)
    if res.status == 2:
        return "infeasible", None
    if res.status == 3:
        return "unbounded", None
    raise RuntimeError(f"solver status {res.status}")


def test_random_lps_against_float_solver():
    rng = random.Random(12)
    solved = 0
    for _ in range(120):
        lp = random_lp(rng)
        mine = simplex_solve(lp)
        ref_status, ref_value = scipy_status(lp)
        if mine.status != ref_status:
            # HiGHS presolve can only conclude infeasible-or-unbounded and
            # labels it infeasible; rerun without presolve to adjudicate
            ref_status, ref_value = scipy_status(lp, presolve=False)
        assert mine.status == ref_status, (lp, mine.status, ref_status)
        if mine.status == "optimal":
            solved += 1
            assert abs(float(mine.value) - ref_value) < 1e-6
            assert check_solution(lp, mine)
    assert solved > 30  # the batch must actually exercise the optimal path


def test_strong_duality_is_exact():
    rng = random.Random(13)
    for _ in range(60):
        lp = random_lp(rng)
        sol = simplex_solve(lp)
        if sol.status != "optimal":
            continue
        # check_solution recomputes the dual objective and compares exactly
        assert check_solution(lp, sol)
        assert sol.dual is not None


def test_row_permutation_invariance():
    rng = random.Random(14)
    for _ in range(40):
        lp = random_lp(rng)
        base = simplex_solve(lp)
        perm = list(range(len(lp.constraints)))
        rng.shuffle(perm)
        permuted = LinearProgram(
            lp.objective,
            tuple(lp.constraints[i] for i in perm),
            lp.constant,
            lp.bounds,
        )
        other = simplex_solve(permuted)
        assert base.status == other.status
        if base.status == "optimal":
            assert base.value == other.value


def test_json_roundtrip():
    lp = LinearProgram(
        (F(1), F(-2, 3)),
        (((F(1), F(1)), "<=", F(5, 2)), ((F(1), F(0)), ">=", F(-1))),
        F(1),
        ((F(0), None), (F(-3), F(3))),
    )
    assert lp_from_json(lp_to_json(lp)) == lp
    sol = simplex_solve(lp)
    out = solution_to_json(sol)
    assert out["status"] == "optimal" and out["value"] == str(sol.value)
