"""Named bound intervals with re-verifiable witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .serialize import frac_str


def _bound_json(x):
    if isinstance(x, (Fraction, int)):
        return frac_str(x)
    return float(x)


@dataclass
class BoundReport:
    """Interval [lower, upper] for a graph parameter, with witnesses.

    Witnesses are certificate objects (anything with ``to_json``) or plain
    dicts.  ``runtime_ms`` is informational and deliberately left out of
    the JSON form so identical runs serialize identically.
    """

    parameter: str
    graph: str
    lower: Fraction | float
    upper: Fraction | float
    witnesses: tuple = ()
    runtime_ms: float | None = None
    tol: float | None = None

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")

    def to_json(self) -> dict:
        refs = []
        for w in self.witnesses:
            refs.append(w.to_json() if hasattr(w, "to_json") else w)
        out = {
            "param": self.parameter,
            "graph": self.graph,
            "lower": _bound_json(self.lower),
            "upper": _bound_json(self.upper),
            "witness_refs": refs,
        }
        if self.tol is not None:
            out["tol"] = self.tol
        return out
