"""Dense exact linear algebra over prime fields GF(p).

Matrices are numpy int64 arrays with entries reduced to [0, p).  All
elimination uses the deterministic first-nonzero pivot rule so that ranks,
pivot selections, and factorizations are byte-for-byte reproducible.
Only prime moduli are supported; every construction downstream needs the
field characteristic only, which prime fields realize.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, GuardExceeded, PreconditionError
from .graphs import is_prime

KRON_ENTRY_CAP = 16_000_000


class FMatrix:
    """Immutable-by-convention dense matrix over GF(p)."""

    __slots__ = ("p", "a")

    def __init__(self, p: int, entries, copy: bool = True):
        if not is_prime(p):
            raise PreconditionError(f"modulus {p} is not prime")
        a = np.array(entries, dtype=np.int64, copy=copy)
        if a.ndim != 2:
            raise DimensionMismatch(f"matrix must be 2-dimensional, got shape {a.shape}")
        if a.size == 0:
            raise DimensionMismatch("matrix dimensions must be positive")
        self.p = p
        self.a = a % p

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64), copy=False)

    @classmethod
    def identity(cls, p: int, n: int) -> "FMatrix":
        return cls(p, np.eye(n, dtype=np.int64), copy=False)

    @classmethod
    def ones(cls, p: int, rows: int, cols: int) -> "FMatrix":
        return cls(p, np.ones((rows, cols), dtype=np.int64), copy=False)

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def transpose(self) -> "FMatrix":
        return FMatrix(self.p, self.a.T)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "FMatrix":
        return FMatrix(self.p, self.a[r0:r1, c0:c1])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "FMatrix":
        return FMatrix(self.p, self.a[np.ix_(list(row_idx), list(col_idx))])

    def __getitem__(self, key) -> int:
        return int(self.a[key])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FMatrix)
            and self.p == other.p
            and self.shape == other.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.p, self.shape, self.a.tobytes()))

    def __repr__(self) -> str:
        return f"FMatrix(p={self.p}, shape={self.rows}x{self.cols})"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [int(x) for x in self.a.ravel()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FMatrix":
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = np.array(obj["entries"], dtype=np.int64)
        if entries.size != rows * cols:
            raise DimensionMismatch("entry count does not match rows*cols")
        return cls(int(obj["p"]), entries.reshape(rows, cols), copy=False)


def matmul(a: FMatrix, b: FMatrix) -> FMatrix:
    if a.p != b.p:
        raise DimensionMismatch(f"modulus mismatch: {a.p} vs {b.p}")
    if a.cols != b.rows:
        raise DimensionMismatch(f"inner dimensions disagree: {a.shape} @ {b.shape}")
    # int64 is safe: entries < p and inner dimension stay far below 2^63 / p^2
    return FMatrix(a.p, (a.a @ b.a) % a.p, copy=False)


def kronecker(a: FMatrix, b: FMatrix) -> FMatrix:
    if a.p != b.p:
        raise DimensionMismatch(f"modulus mismatch: {a.p} vs {b.p}")
    entries = a.rows * b.rows * a.cols * b.cols
    if entries > KRON_ENTRY_CAP:
        raise GuardExceeded(f"kronecker result has {entries} entries (cap {KRON_ENTRY_CAP})")
    return FMatrix(a.p, np.kron(a.a, b.a) % a.p, copy=False)


def _eliminate(a: np.ndarray, p: int) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Forward elimination; returns (echelon copy, pivots).

    Pivots are (original_row, column) pairs in elimination order, chosen by
    the first-nonzero rule.
    """
    a = a % p
    rows, cols = a.shape
    origin = list(range(rows))
    r = 0
    pivots: list[tuple[int, int]] = []
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
            origin[r], origin[i] = origin[i], origin[r]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        below = np.nonzero(a[r + 1:, c])[0]
        if below.size:
            idx = below + r + 1
            a[idx] = (a[idx] - a[idx, c:c + 1] * a[r]) % p
        pivots.append((origin[r], c))
        r += 1
        if r == rows:
            break
    return a, pivots


def _rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    a, pivots = _eliminate(a, p)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r][1]
        above = np.nonzero(a[:r, c])[0]
        if above.size:
            a[above] = (a[above] - a[above, c:c + 1] * a[r]) % p
    return a, [c for _, c in pivots]


def rank(m: FMatrix) -> int:
    """Rank over GF(p) by fraction-free Gaussian elimination; input unchanged."""
    return len(_eliminate(m.a, m.p)[1])


def select_full_rank_submatrix(m: FMatrix, r: int) -> tuple[list[int], list[int]]:
    """Deterministic r row indices and r column indices whose induced
    submatrix is invertible (the first r elimination pivots)."""
    if r < 0:
        raise PreconditionError(f"r must be nonnegative, got {r}")
    _, pivots = _eliminate(m.a, m.p)
    if len(pivots) < r:
        raise PreconditionError(f"matrix has rank {len(pivots)} < {r}")
    chosen = pivots[:r]
    return [pr for pr, _ in chosen], [pc for _, pc in chosen]


def solve_right(c: FMatrix, m: FMatrix) -> FMatrix:
    """Solve C X = M exactly, requiring C to have full column rank."""
    if c.p != m.p:
        raise DimensionMismatch(f"modulus mismatch: {c.p} vs {m.p}")
    if c.rows != m.rows:
        raise DimensionMismatch(f"row counts disagree: {c.shape} vs {m.shape}")
    aug = np.hstack([c.a, m.a])
    red, piv_cols = _rref(aug, c.p)
    if piv_cols != list(range(c.cols)):
        raise PreconditionError("system is rank-deficient or inconsistent")
    x = FMatrix(c.p, red[: c.cols, c.cols:])
    return x


def inverse(m: FMatrix) -> FMatrix:
    if m.rows != m.cols:
        raise DimensionMismatch(f"inverse needs a square matrix, got {m.shape}")
    return solve_right(m, FMatrix.identity(m.p, m.rows))


def hstack(mats: Sequence[FMatrix]) -> FMatrix:
    p = mats[0].p
    if any(m.p != p for m in mats):
        raise DimensionMismatch("modulus mismatch in hstack")
    return FMatrix(p, np.hstack([m.a for m in mats]), copy=False)


def vstack(mats: Sequence[FMatrix]) -> FMatrix:
    p = mats[0].p
    if any(m.p != p for m in mats):
        raise DimensionMismatch("modulus mismatch in vstack")
    return FMatrix(p, np.vstack([m.a for m in mats]), copy=False)
