"""Minimum rank of fit matrices over GF(p), with certificate constructors.

A matrix fits a graph when its diagonal is all ones and both entries of
every non-adjacent pair vanish; edge entries are free and may be
asymmetric.  ``minrank_exact`` searches the free entries exhaustively with
incremental-rank pruning.  The constructors build the classical
certificates: set-incidence Gram matrices for the intersection-parity
graphs, clique-partition matrices, and multilinear polynomial
representations with their evaluation matrices.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

import numpy as np

from .budget import Budget
from .errors import (
    BudgetExhausted,
    DimensionMismatch,
    PreconditionError,
    SearchCutoff,
    VerificationError,
)
from .gfmat import FMatrix, matmul, rank
from .graphs import Graph, alon, complement, is_prime, johnson
from .independence import CliqueCover, alpha, clique_cover_violation, greedy_clique_cover

DEFAULT_SEARCH_CAP = 2**30


def graph_hash(g: Graph) -> str:
    h = hashlib.sha256()
    h.update(f"{g.n};".encode())
    h.update(";".join(f"{u},{v}" for u, v in g.edges()).encode())
    return h.hexdigest()


def fit_violation(g: Graph, m: FMatrix) -> str | None:
    if m.rows != g.n or m.cols != g.n:
        raise DimensionMismatch(f"matrix is {m.rows}x{m.cols}, graph has {g.n} vertices")
    a = m.a
    diag_bad = np.nonzero(np.diag(a) != 1)[0]
    if diag_bad.size:
        return f"diagonal entry at vertex {int(diag_bad[0])} is not 1"
    mask = ~g.adjacency_matrix()
    np.fill_diagonal(mask, False)
    bad = np.nonzero((a != 0) & mask)
    if bad[0].size:
        return f"nonzero entry at non-edge ({int(bad[0][0])}, {int(bad[1][0])})"
    return None


def verify_fits(g: Graph, m: FMatrix) -> bool:
    """Unit diagonal and zeros on both sides of every non-edge."""
    return fit_violation(g, m) is None


@dataclass(frozen=True)
class FitCertificate:
    """A fit matrix together with the graph hash and its exact rank."""

    graph_hash: str
    matrix: FMatrix
    claimed_rank: int

    def check(self, g: Graph) -> bool:
        return (
            self.graph_hash == graph_hash(g)
            and verify_fits(g, self.matrix)
            and rank(self.matrix) == self.claimed_rank
        )

    def to_json(self, graph_expr: str | None = None) -> dict:
        out = self.matrix.to_json()
        out["kind"] = "fit"
        out["claimed_rank"] = self.claimed_rank
        out["graph_hash"] = self.graph_hash
        if graph_expr:
            out["graph"] = graph_expr
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FitCertificate":
        return cls(obj["graph_hash"], FMatrix.from_json(obj), int(obj["claimed_rank"]))


@dataclass(frozen=True)
class MinrankResult:
    """Certified bracket on the minimum fit rank; exact when the search ran
    to completion (then lower == upper == the minrank).  For interval
    results the lower end comes from an independent set (kept as witness)."""

    lower: int
    upper: int
    certificate: FitCertificate
    exact: bool
    alpha_witness: tuple[int, ...] | None = None


def cover_certificate(g: Graph, cover: CliqueCover, p: int) -> FitCertificate:
    """Rank-|cover| certificate: 1 exactly on same-class pairs.

    Realizes the clique-cover upper bound on the minrank constructively.
    """
    failure = clique_cover_violation(g, cover)
    if failure is not None:
        raise VerificationError(f"invalid clique cover: {failure}")
    cls_of = [0] * g.n
    for idx, cls in enumerate(cover.classes):
        for v in cls:
            cls_of[v] = idx
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        for v in range(g.n):
            if cls_of[u] == cls_of[v]:
                a[u, v] = 1
    mat = FMatrix(p, a, copy=False)
    r = rank(mat)
    assert r == len(cover.classes)
    cert = FitCertificate(graph_hash(g), mat, r)
    assert verify_fits(g, mat)
    return cert


def minrank_exact(
    g: Graph,
    p: int,
    budget: Budget | None = None,
    search_cap: int = DEFAULT_SEARCH_CAP,
) -> MinrankResult:
    """Exact minimum rank over all fit matrices by depth-first assignment
    of the 2|E| free entries with incremental-rank pruning.

    If the assignment space p^(2|E|) exceeds ``search_cap`` (or the budget
    trips mid-search) the result is the certified interval
    [independence-number lower bound, best certificate rank found].
    """
    if not is_prime(p):
        raise PreconditionError(f"modulus {p} is not prime")
    budget = budget or Budget()
    incumbent = cover_certificate(g, greedy_clique_cover(g), p)

    def interval_result() -> MinrankResult:
        try:
            lower, witness = alpha(g, budget)
        except SearchCutoff as cut:
            lower, witness = cut.lower, tuple(cut.witness or ())
        lower = min(lower, incumbent.claimed_rank)
        # a closed interval pins the value without exhausting the search
        return MinrankResult(lower, incumbent.claimed_rank, incumbent,
                             exact=lower == incumbent.claimed_rank, alpha_witness=witness)

    if g.m > 0 and p ** (2 * g.m) > search_cap:
        return interval_result()

    n = g.n
    template: list[list[int | None]] = []
    free_cols: list[list[int]] = []
    for v in range(n):
        row: list[int | None] = [0] * n
        row[v] = 1
        cols = []
        mask = g.adj[v]
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            row[u] = None
            cols.append(u)
        template.append(row)
        free_cols.append(cols)

    best_rank = incumbent.claimed_rank
    best_matrix: list[tuple[int, ...]] | None = None

    def reduce_row(row: tuple[int, ...], ech: list[tuple[int, ...]], piv: list[int]):
        vals = list(row)
        for er, pc in zip(ech, piv):
            f = vals[pc]
            if f:
                vals = [(a - f * b) % p for a, b in zip(vals, er)]
        for c, x in enumerate(vals):
            if x:
                inv = pow(x, -1, p)
                return tuple(a * inv % p for a in vals), c
        return None

    def dfs(v: int, rows: list[tuple[int, ...]], ech: list[tuple[int, ...]], piv: list[int]):
        nonlocal best_rank, best_matrix
        if len(ech) >= best_rank:
            return
        if v == n:
            # rank(full matrix) == len(ech) < best_rank here
            best_rank = len(ech)
            best_matrix = list(rows)
            return
        base = template[v]
        cols = free_cols[v]
        for assignment in product(range(p), repeat=len(cols)):
            budget.spend()
            row = list(base)
            for c, val in zip(cols, assignment):
                row[c] = val
            row_t = tuple(row)
            red = reduce_row(row_t, ech, piv)
            if red is None:
                dfs(v + 1, rows + [row_t], ech, piv)
            else:
                new_row, new_col = red
                dfs(v + 1, rows + [row_t], ech + [new_row], piv + [new_col])

    try:
        dfs(0, [], [], [])
    except BudgetExhausted:
        if best_matrix is not None:
            mat = FMatrix(p, best_matrix)
            incumbent = FitCertificate(graph_hash(g), mat, rank(mat))
        return interval_result()

    if best_matrix is not None:
        mat = FMatrix(p, best_matrix)
        cert = FitCertificate(graph_hash(g), mat, best_rank)
        assert verify_fits(g, mat) and rank(mat) == best_rank
    else:
        cert = incumbent
        best_rank = incumbent.claimed_rank
    return MinrankResult(best_rank, best_rank, cert, exact=True)


def johnson_certificate(p: int, n: int) -> FitCertificate:
    """Gram matrix of the subset-incidence matrix over GF(p): fits the
    intersection-parity graph on (p+1)-subsets because the subset size
    p+1 is 1 mod p; rank is at most n."""
    g = johnson(p, n)
    subsets = list(combinations(range(n), p + 1))
    inc = np.zeros((n, len(subsets)), dtype=np.int64)
    for col, x in enumerate(subsets):
        for i in x:
            inc[i, col] = 1
    m = FMatrix(p, inc, copy=False)
    gram = matmul(m.transpose(), m)
    cert = FitCertificate(graph_hash(g), gram, rank(gram))
    if not verify_fits(g, gram):
        raise VerificationError("incidence Gram matrix does not fit the graph")
    assert cert.claimed_rank <= n
    return cert


# ---------------------------------------------------------------------------
# Multilinear polynomial representations


def _ml_mul(f: dict, g: dict, m: int) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for s, a in f.items():
        for t, b in g.items():
            key = tuple(sorted(set(s) | set(t)))  # x^2 = x on 0/1 points
            out[key] = (out.get(key, 0) + a * b) % m
    return {k: v for k, v in out.items() if v}


def _ml_eval(f: dict, members: frozenset, m: int) -> int:
    return sum(c for k, c in f.items() if members.issuperset(k)) % m


def _linear_factor(x: tuple[int, ...], c: int, m: int) -> dict:
    f = {(): (-c) % m}
    for j in x:
        f[(j,)] = 1 % m
    return {k: v for k, v in f.items() if v}


@dataclass(frozen=True)
class PolyRep:
    """Per-vertex (multilinear polynomial, 0/1 point) pairs representing a
    graph: nonzero at the own point, zero at every non-neighbor's point."""

    modulus: int
    degree: int
    nvars: int
    factor_constants: tuple[int, ...]
    polys: tuple[tuple[tuple[tuple[int, ...], int], ...], ...]
    points: tuple[tuple[int, ...], ...]

    def poly(self, v: int) -> dict:
        return dict(self.polys[v])

    def members(self, v: int) -> frozenset:
        return frozenset(j for j, bit in enumerate(self.points[v]) if bit)

    def evaluate(self, u: int, v: int) -> int:
        """Reduced polynomial of u evaluated at the point of v."""
        return _ml_eval(self.poly(u), self.members(v), self.modulus)

    def unreduced_value(self, u: int, v: int) -> int:
        """Original product (before the x^2 = x reduction) at v's point."""
        s = len(self.members(u) & self.members(v))
        val = 1
        for c in self.factor_constants:
            val = val * (s - c) % self.modulus
        return val

    def violation(self, g: Graph) -> str | None:
        for v in range(g.n):
            if self.evaluate(v, v) == 0:
                return f"polynomial of vertex {v} vanishes at its own point"
        for u in range(g.n):
            for v in range(g.n):
                if u != v and not g.has_edge(u, v) and self.evaluate(u, v) != 0:
                    return f"polynomial of {u} is nonzero at non-neighbor {v}"
        return None

    def check(self, g: Graph) -> bool:
        return self.violation(g) is None


def next_prime(p: int) -> int:
    q = p + 1
    while not is_prime(q):
        q += 1
    return q


def alon_certificate(
    variant: str,
    p: int,
    q: int,
    n: int,
    modulus: int | None = None,
) -> tuple[FitCertificate, PolyRep]:
    """Polynomial-representation certificates for the intersection graphs
    on (pq-1)-subsets of [n].

    variant "P": over GF(p), fits the graph itself; degree p-1.
    variant "Q": requires q != p, over GF(q), fits the complement; degree q-1.
    variant "R": requires q == p, over a prime field with characteristic
        exceeding p (default: the next prime), fits the complement;
        degree p-1.  Characteristic-zero statements are realized over the
        chosen large prime and reported as such, never as char 0.
    """
    if variant == "P":
        modulus = p if modulus is None else modulus
        if modulus != p:
            raise PreconditionError("variant P must use the field of characteristic p")
        constants = tuple(range(p - 1))
    elif variant == "Q":
        if q == p:
            raise PreconditionError("variant Q needs q != p")
        modulus = q if modulus is None else modulus
        if modulus != q:
            raise PreconditionError("variant Q must use the field of characteristic q")
        constants = tuple(range(q - 1))
    elif variant == "R":
        if q != p:
            raise PreconditionError("variant R needs q == p")
        modulus = next_prime(p) if modulus is None else modulus
        if modulus <= p or not is_prime(modulus):
            raise PreconditionError("variant R needs a prime modulus exceeding p")
        constants = tuple(i * p - 1 for i in range(1, p))
    else:
        raise PreconditionError(f"unknown variant {variant!r}")

    base = alon(p, q, n)
    target = base if variant == "P" else complement(base)
    subsets = [tuple(x) for x in combinations(range(n), p * q - 1)]

    polys = []
    points = []
    for x in subsets:
        f: dict = {(): 1 % modulus}
        for c in constants:
            f = _ml_mul(f, _linear_factor(x, c, modulus), modulus)
        polys.append(tuple(sorted(f.items())))
        points.append(tuple(1 if j in set(x) else 0 for j in range(n)))
    rep = PolyRep(
        modulus=modulus,
        degree=len(constants),
        nvars=n,
        factor_constants=constants,
        polys=tuple(polys),
        points=tuple(points),
    )
    failure = rep.violation(target)
    if failure is not None:
        raise VerificationError(f"polynomial representation invalid: {failure}")

    nv = target.n
    a = np.zeros((nv, nv), dtype=np.int64)
    for u in range(nv):
        own = rep.evaluate(u, u)
        inv = pow(own, -1, modulus)
        for v in range(nv):
            a[u, v] = inv * rep.evaluate(u, v) % modulus
    mat = FMatrix(modulus, a, copy=False)
    cert = FitCertificate(graph_hash(target), mat, rank(mat))
    if not verify_fits(target, mat):
        raise VerificationError("evaluation matrix does not fit the target graph")
    span_bound = sum(comb(n, i) for i in range(len(constants) + 1))
    assert cert.claimed_rank <= span_bound
    return cert, rep
