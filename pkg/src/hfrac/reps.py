"""The fractional minrank bound through its four certificate forms.

A block fit matrix with identity diagonal blocks and zero non-edge blocks
(``DRep``) witnesses the bound rank/d.  The equivalent forms (per-vertex
factor pairs (``PairRep``), variable block sizes with full-rank diagonal
blocks (``RankRRep``), and per-vertex subspaces in general position
(``SubspaceRep``)) come with constructive conversions that never worsen
the certified ratio.  Tensoring certificates multiplies ratios exactly,
which is what makes the bound multiplicative over strong products.

Certificates are the unit of truth here: every constructor verifies its
output, and the search orchestrator only ever reports intervals whose two
ends are witnessed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .budget import Budget
from .errors import (
    DimensionMismatch,
    GraphParseError,
    PreconditionError,
    SearchCutoff,
    VerificationError,
)
from .fraccover import FractionalCover, fractional_clique_cover
from .gfmat import FMatrix, hstack, inverse, matmul, rank, select_full_rank_submatrix, solve_right
from .graphs import Graph, cycle, generate, is_independent_set, parse_expr
from .independence import alpha
from .minrank import minrank_exact
from .report import BoundReport


@dataclass(frozen=True)
class DRep:
    """d-block fit matrix: identity diagonal blocks, zero non-edge blocks."""

    d: int
    matrix: FMatrix

    @property
    def nvertices(self) -> int:
        return self.matrix.rows // self.d

    def ratio(self) -> Fraction:
        return Fraction(rank(self.matrix), self.d)

    def to_json(self, graph_expr: str | None = None) -> dict:
        out = self.matrix.to_json()
        out["kind"] = "drep"
        out["d"] = self.d
        if graph_expr:
            out["graph"] = graph_expr
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "DRep":
        return cls(int(obj["d"]), FMatrix.from_json(obj))


@dataclass(frozen=True)
class PairRep:
    """Per-vertex factor pairs (A_v, B_v), n x d each, with A_vᵀB_v = I_d
    and vanishing cross products on non-edges."""

    n: int
    d: int
    pairs: tuple[tuple[FMatrix, FMatrix], ...]

    @property
    def p(self) -> int:
        return self.pairs[0][0].p

    def ratio(self) -> Fraction:
        return Fraction(self.n, self.d)

    def to_json(self, graph_expr: str | None = None) -> dict:
        out = {
            "kind": "pairrep",
            "n": self.n,
            "d": self.d,
            "p": self.p,
            "pairs": [
                {"A": [int(x) for x in a.a.ravel()], "B": [int(x) for x in b.a.ravel()]}
                for a, b in self.pairs
            ],
        }
        if graph_expr:
            out["graph"] = graph_expr
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "PairRep":
        n, d, p = int(obj["n"]), int(obj["d"]), int(obj["p"])
        pairs = tuple(
            (
                FMatrix(p, np.array(item["A"], dtype=np.int64).reshape(n, d)),
                FMatrix(p, np.array(item["B"], dtype=np.int64).reshape(n, d)),
            )
            for item in obj["pairs"]
        )
        return cls(n, d, pairs)


@dataclass(frozen=True)
class RankRRep:
    """Variable block sizes d_v; diagonal blocks of rank >= r, zero
    non-edge blocks."""

    r: int
    sizes: tuple[int, ...]
    matrix: FMatrix

    def offsets(self) -> list[int]:
        out = [0]
        for s in self.sizes:
            out.append(out[-1] + s)
        return out

    def to_json(self, graph_expr: str | None = None) -> dict:
        out = self.matrix.to_json()
        out["kind"] = "rankrrep"
        out["r"] = self.r
        out["sizes"] = list(self.sizes)
        if graph_expr:
            out["graph"] = graph_expr
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "RankRRep":
        return cls(int(obj["r"]), tuple(int(s) for s in obj["sizes"]), FMatrix.from_json(obj))


@dataclass(frozen=True)
class SubspaceRep:
    """Per-vertex d-dimensional subspaces of GF(p)^n, each meeting the span
    of its non-neighbors' subspaces trivially."""

    n: int
    d: int
    bases: tuple[FMatrix, ...]

    def to_json(self, graph_expr: str | None = None) -> dict:
        out = {
            "kind": "subspacerep",
            "n": self.n,
            "d": self.d,
            "p": self.bases[0].p,
            "bases": [[int(x) for x in b.a.ravel()] for b in self.bases],
        }
        if graph_expr:
            out["graph"] = graph_expr
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SubspaceRep":
        n, d, p = int(obj["n"]), int(obj["d"]), int(obj["p"])
        bases = tuple(
            FMatrix(p, np.array(item, dtype=np.int64).reshape(n, d)) for item in obj["bases"]
        )
        return cls(n, d, bases)


# ---------------------------------------------------------------------------
# Verifiers


def drep_violation(g: Graph, rep: DRep) -> str | None:
    d = rep.d
    if d < 1 or rep.matrix.rows != rep.matrix.cols or rep.matrix.rows != g.n * d:
        raise DimensionMismatch(
            f"matrix is {rep.matrix.rows}x{rep.matrix.cols}, expected {g.n * d} square"
        )
    blocks = rep.matrix.a.reshape(g.n, d, g.n, d).transpose(0, 2, 1, 3)
    eye = np.eye(d, dtype=np.int64)
    for v in range(g.n):
        if not np.array_equal(blocks[v, v], eye):
            return f"diagonal block of vertex {v} is not the identity"
    nonedge = ~g.adjacency_matrix()
    np.fill_diagonal(nonedge, False)
    us, vs = np.nonzero(nonedge)
    if us.size and np.any(blocks[us, vs]):
        bad = int(np.nonzero(np.any(blocks[us, vs], axis=(1, 2)))[0][0])
        return f"nonzero block at non-edge ({int(us[bad])}, {int(vs[bad])})"
    return None


def verify_drep(g: Graph, rep: DRep) -> bool:
    return drep_violation(g, rep) is None


def pairrep_violation(g: Graph, rep: PairRep) -> str | None:
    if len(rep.pairs) != g.n:
        raise DimensionMismatch(f"{len(rep.pairs)} pairs for {g.n} vertices")
    for v, (a, b) in enumerate(rep.pairs):
        if a.shape != (rep.n, rep.d) or b.shape != (rep.n, rep.d):
            raise DimensionMismatch(f"pair of vertex {v} has shape {a.shape}, {b.shape}")
    ident = FMatrix.identity(rep.p, rep.d)
    for v, (a, b) in enumerate(rep.pairs):
        if matmul(a.transpose(), b) != ident:
            return f"A_vᵀB_v is not the identity at vertex {v}"
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                au, bu = rep.pairs[u]
                av, bv = rep.pairs[v]
                if np.any(matmul(au.transpose(), bv).a) or np.any(matmul(av.transpose(), bu).a):
                    return f"nonzero cross product at non-edge ({u}, {v})"
    return None


def verify_pairrep(g: Graph, rep: PairRep) -> bool:
    return pairrep_violation(g, rep) is None


def rankrrep_violation(g: Graph, rep: RankRRep) -> str | None:
    if len(rep.sizes) != g.n:
        raise DimensionMismatch(f"{len(rep.sizes)} block sizes for {g.n} vertices")
    off = rep.offsets()
    total = off[-1]
    if rep.matrix.rows != total or rep.matrix.cols != total:
        raise DimensionMismatch(f"matrix is {rep.matrix.rows}x{rep.matrix.cols}, expected {total}")
    for v in range(g.n):
        block = rep.matrix.block(off[v], off[v + 1], off[v], off[v + 1])
        if rank(block) < rep.r:
            return f"diagonal block of vertex {v} has rank below {rep.r}"
    a = rep.matrix.a
    for u in range(g.n):
        for v in range(g.n):
            if u != v and not g.has_edge(u, v):
                if np.any(a[off[u]:off[u + 1], off[v]:off[v + 1]]):
                    return f"nonzero block at non-edge ({u}, {v})"
    return None


def verify_rankrrep(g: Graph, rep: RankRRep) -> bool:
    return rankrrep_violation(g, rep) is None


def subspacerep_violation(g: Graph, rep: SubspaceRep) -> str | None:
    if len(rep.bases) != g.n:
        raise DimensionMismatch(f"{len(rep.bases)} subspaces for {g.n} vertices")
    for v, b in enumerate(rep.bases):
        if b.shape != (rep.n, rep.d):
            raise DimensionMismatch(f"basis of vertex {v} has shape {b.shape}")
    for v, b in enumerate(rep.bases):
        if rank(b) != rep.d:
            return f"subspace of vertex {v} has dimension below {rep.d}"
    for v in range(g.n):
        others = [rep.bases[u] for u in range(g.n) if u != v and not g.has_edge(u, v)]
        if not others:
            continue
        span = hstack(others)
        r_span = rank(span)
        if rank(hstack([rep.bases[v], span])) != rep.d + r_span:
            return f"subspace of vertex {v} meets its non-neighbors' span nontrivially"
    return None


def verify_subspacerep(g: Graph, rep: SubspaceRep) -> bool:
    return subspacerep_violation(g, rep) is None


# ---------------------------------------------------------------------------
# Conversions


def pairrep_from_drep(rep: DRep) -> PairRep:
    """Factor the block matrix as AᵀB with as many rows as its rank, so the
    pair form certifies exactly rank/d."""
    m = rep.matrix
    r = rank(m)
    _, piv_cols = select_full_rank_submatrix(m, r)
    c = m.submatrix(range(m.rows), piv_cols)  # N x r column-space basis
    x = solve_right(c, m)  # r x N with C X = M
    a_full = c.transpose()
    pairs = []
    for v in range(rep.nvertices):
        lo, hi = v * rep.d, (v + 1) * rep.d
        pairs.append((a_full.block(0, r, lo, hi), x.block(0, r, lo, hi)))
    return PairRep(r, rep.d, tuple(pairs))


def drep_from_pairrep(rep: PairRep) -> DRep:
    nv = len(rep.pairs)
    d = rep.d
    a = np.zeros((nv * d, nv * d), dtype=np.int64)
    for u in range(nv):
        au = rep.pairs[u][0]
        for v in range(nv):
            bv = rep.pairs[v][1]
            a[u * d:(u + 1) * d, v * d:(v + 1) * d] = matmul(au.transpose(), bv).a
    return DRep(d, FMatrix(rep.p, a, copy=False))


def subspace_from_pairrep(rep: PairRep) -> SubspaceRep:
    """Column spaces of the A_v matrices.  The general-position property of
    the result is checked by callers/tests rather than assumed."""
    return SubspaceRep(rep.n, rep.d, tuple(a for a, _ in rep.pairs))


def rankr_to_drep(g: Graph, rep: RankRRep) -> DRep:
    """Extract an r-representation: keep a full-rank r x r corner of every
    diagonal block, then normalize each block row by that corner's inverse.
    Row operations stay within one vertex, so zero non-edge blocks survive
    and the rank never increases."""
    failure = rankrrep_violation(g, rep)
    if failure is not None:
        raise VerificationError(f"invalid input representation: {failure}")
    off = rep.offsets()
    r = rep.r
    row_idx: list[int] = []
    col_idx: list[int] = []
    for v in range(g.n):
        block = rep.matrix.block(off[v], off[v + 1], off[v], off[v + 1])
        rows, cols = select_full_rank_submatrix(block, r)
        row_idx.extend(off[v] + i for i in rows)
        col_idx.extend(off[v] + j for j in cols)
    sub = rep.matrix.submatrix(row_idx, col_idx)
    out = np.zeros_like(sub.a)
    for v in range(g.n):
        lo, hi = v * r, (v + 1) * r
        inv = inverse(sub.block(lo, hi, lo, hi))
        out[lo:hi, :] = (inv.a @ sub.a[lo:hi, :]) % sub.p
    result = DRep(r, FMatrix(sub.p, out, copy=False))
    failure = drep_violation(g, result)
    if failure is not None:
        raise VerificationError(f"extraction produced an invalid certificate: {failure}")
    return result


def tensor_dreps(rep_g: DRep, rep_h: DRep) -> DRep:
    """Kronecker product of certificates, reindexed to the row-major vertex
    order of the strong product.  Ratios multiply exactly."""
    mg, mh = rep_g.matrix, rep_h.matrix
    if mg.p != mh.p:
        raise DimensionMismatch(f"modulus mismatch: {mg.p} vs {mh.p}")
    d1, d2 = rep_g.d, rep_h.d
    ng, nh = rep_g.nvertices, rep_h.nvertices
    kron = np.kron(mg.a, mh.a) % mg.p
    perm = np.empty(ng * nh * d1 * d2, dtype=np.int64)
    for u in range(ng):
        for i in range(d1):
            base_k = (u * d1 + i) * nh * d2
            for x in range(nh):
                base_t = ((u * nh + x) * d1 + i) * d2
                perm[base_t:base_t + d2] = np.arange(base_k + x * d2, base_k + (x + 1) * d2)
    return DRep(d1 * d2, FMatrix(mg.p, kron[np.ix_(perm, perm)], copy=False))


def drep_from_fractional_cover(g: Graph, cover: FractionalCover, p: int = 2) -> DRep:
    """Blow-up certificate from an exact fractional clique cover.

    Scaling the weights by the cover denominator d gives every vertex at
    least d integral clique-slots; each of the d copies of a vertex is
    assigned to one slot (class order, slack slots dropped), and the 0/1
    same-slot matrix is a d-representation with rank at most the number of
    slots, hence ratio at most the cover value.
    """
    d = cover.d
    slot_count = 0
    slot_ids: list[list[int]] = [[] for _ in range(g.n)]
    for cl, w in cover.classes:
        mult = w * d
        if mult.denominator != 1:
            raise VerificationError(f"weight {w} does not scale to an integer by d={d}")
        for _ in range(int(mult)):
            for v in cl:
                slot_ids[v].append(slot_count)
            slot_count += 1
    for v in range(g.n):
        if len(slot_ids[v]) < d:
            raise VerificationError(f"vertex {v} has {len(slot_ids[v])} slots, needs {d}")
    assignment = np.array([slot_ids[v][i] for v in range(g.n) for i in range(d)], dtype=np.int64)
    a = (assignment[:, None] == assignment[None, :]).astype(np.int64)
    rep = DRep(d, FMatrix(p, a, copy=False))
    failure = drep_violation(g, rep)
    if failure is not None:
        raise VerificationError(f"cover produced an invalid certificate: {failure}")
    return rep


def cycle_drep(k: int, p: int) -> DRep:
    """Verified certificate for the odd cycle on 2k+1 vertices, built from
    its optimal fractional clique cover.

    For k >= 2 the cover is the edge cover at weight 1/2 and the certified
    ratio is exactly (2k+1)/2.  For k = 1 the cycle is a triangle, the
    optimal cover is the single 3-clique, and the ratio is 1.
    """
    if k < 1:
        raise PreconditionError(f"need k >= 1, got {k}")
    g = cycle(2 * k + 1)
    rep = drep_from_fractional_cover(g, fractional_clique_cover(g), p)
    if k >= 2 and rep.ratio() != Fraction(2 * k + 1, 2):
        raise VerificationError(f"odd-cycle certificate has ratio {rep.ratio()}")
    return rep


def linind_check(rep: PairRep, g: Graph, s: set[int] | frozenset[int], t: set[int] | frozenset[int]) -> bool:
    """Whether the spans of {A_v : v in S} and {A_v : v in T} intersect
    trivially, i.e. dim(sum over S+T) = dim(sum over S) + dim(sum over T).

    Preconditions (reported distinctly): S and T disjoint, S independent,
    and no edges between S and T.  On verified representations the answer
    is guaranteed to be True; on unverified input it is just a rank fact.
    """
    s, t = set(s), set(t)
    if s & t:
        raise PreconditionError(f"S and T intersect: {sorted(s & t)}")
    if not is_independent_set(g, s):
        raise PreconditionError("S is not an independent set")
    for u in s:
        for v in t:
            if g.has_edge(u, v):
                raise PreconditionError(f"edge between S and T: ({u}, {v})")
    if not s or not t:
        return True
    stack_s = hstack([rep.pairs[v][0] for v in sorted(s)])
    stack_t = hstack([rep.pairs[v][0] for v in sorted(t)])
    return rank(hstack([stack_s, stack_t])) == rank(stack_s) + rank(stack_t)


# ---------------------------------------------------------------------------
# Upper/lower search


def hfrac_upper_search(
    g: Graph,
    p: int,
    dmax: int = 8,
    budget: Budget | None = None,
) -> BoundReport:
    """Best certified interval for the fractional minrank bound over GF(p).

    Upper candidates (certificates with block size at most dmax): the
    budgeted d = 1 minrank search, the blow-up of the optimal fractional
    clique cover, and, when the graph expression is a strong product,
    the tensor product of the factors' best certificates.  The lower end
    is the independence number (or its certified lower bound under
    budget).  The interval never claims the parameter exactly unless the
    two ends meet.
    """
    if dmax < 1:
        raise PreconditionError(f"dmax must be >= 1, got {dmax}")
    t0 = time.perf_counter()
    budget = budget or Budget()
    report, _ = _search(g, p, dmax, budget)
    report.runtime_ms = (time.perf_counter() - t0) * 1000.0
    return report


def _search(g: Graph, p: int, dmax: int, budget: Budget) -> tuple[BoundReport, DRep]:
    try:
        a, wit = alpha(g, budget)
        lower = Fraction(a)
    except SearchCutoff as cut:
        lower, wit = Fraction(cut.lower), tuple(cut.witness or ())
    lower_witness = {"kind": "independent_set", "vertices": [int(v) for v in wit]}

    candidates: list[tuple[Fraction, DRep]] = []
    res = minrank_exact(g, p, budget)
    candidates.append((Fraction(res.upper), DRep(1, res.certificate.matrix)))

    cover = fractional_clique_cover(g, budget)
    if cover.d <= dmax:
        rep = drep_from_fractional_cover(g, cover, p)
        candidates.append((rep.ratio(), rep))

    if g.expr:
        try:
            ex = parse_expr(g.expr)
        except GraphParseError:
            ex = None
        if ex is not None and ex.op == "strong":
            sub = [_search(generate(child), p, dmax, budget) for child in ex.args]
            (_, rep1), (_, rep2) = sub
            if rep1.d * rep2.d <= dmax:
                tens = tensor_dreps(rep1, rep2)
                candidates.append((tens.ratio(), tens))

    upper, best = min(candidates, key=lambda c: c[0])
    report = BoundReport(
        parameter=f"hfrac[gf({p})]",
        graph=g.expr or f"n={g.n},m={g.m}",
        lower=lower,
        upper=upper,
        witnesses=(lower_witness, best),
    )
    return report, best
