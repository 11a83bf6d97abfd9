"""Search budgets: wall-clock and node-count limits for exact searches."""

from __future__ import annotations

import os
import time

from .errors import BudgetExhausted

BUDGET_ENV_VAR = "CAPACITY_BUDGET_MS"


class Budget:
    """Cooperative budget checked inside branch-and-bound loops.

    A budget with no limits never trips.  ``spend`` is cheap enough to call
    once per search node; the clock is only consulted every 256 nodes.
    """

    def __init__(self, ms: float | None = None, nodes: int | None = None):
        self.ms = ms
        self.max_nodes = nodes
        self.nodes = 0
        self._t0 = time.monotonic()

    @classmethod
    def from_env(cls, nodes: int | None = None) -> "Budget":
        raw = os.environ.get(BUDGET_ENV_VAR)
        ms = float(raw) if raw else None
        return cls(ms=ms, nodes=nodes)

    def spend(self, n: int = 1) -> None:
        self.nodes += n
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted(f"node budget {self.max_nodes} exhausted")
        if self.ms is not None and self.nodes % 256 == 0:
            if (time.monotonic() - self._t0) * 1000.0 > self.ms:
                raise BudgetExhausted(f"time budget {self.ms} ms exhausted")
