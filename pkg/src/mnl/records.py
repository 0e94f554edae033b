"""Result records shared by the matrix, sequence, and ordered-graph engines."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

DEFAULT_NODE_BUDGET = 10**8

KINDS = ("matrix", "sequence", "ordered-graph")


@dataclass(frozen=True)
class ExRecord:
    """One extremal-value computation.

    exact=True means the search tree was exhausted, so value is the proven
    optimum.  exact=False means the node budget ran out and value is only the
    best lower bound found.
    """

    pattern_key: str
    kind: str
    n: int
    value: int
    exact: bool
    nodes_explored: int
    elapsed_ms: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.n < 1 or self.value < 0 or self.nodes_explored < 0 or self.elapsed_ms < 0:
            raise ValueError("negative field in ExRecord")
        if self.kind == "matrix" and self.value > self.n * self.n:
            raise ValueError(f"matrix value {self.value} exceeds n^2 = {self.n * self.n}")
        if self.kind == "ordered-graph" and self.value > self.n * (self.n - 1) // 2:
            raise ValueError(f"graph value {self.value} exceeds n(n-1)/2")

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "key": self.pattern_key,
            "kind": self.kind,
            "n": self.n,
            "value": self.value,
            "exact": self.exact,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "ExRecord":
        return cls(
            pattern_key=str(d["key"]),
            kind=str(d["kind"]),
            n=int(d["n"]),
            value=int(d["value"]),
            exact=bool(d["exact"]),
            nodes_explored=int(d["nodes_explored"]),
            elapsed_ms=int(d["elapsed_ms"]),
        )


@dataclass(frozen=True)
class GrowthReport:
    """Exact values of an extremal function for n = 1..n_max plus a crude
    trend classification.

    The classification looks at the last three first differences: all equal
    means apparently-linear, strictly increasing means superlinear-suspect,
    anything else (including any inexact value) is inconclusive.  At desk
    scale an inverse-Ackermann factor is indistinguishable from a constant,
    so apparently-linear is a statement about the computed window only.
    """

    pattern_key: str
    values: tuple[tuple[int, int], ...]
    increments: tuple[int, ...]
    classification: str

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "key": self.pattern_key,
            "values": [[n, v] for n, v in self.values],
            "increments": list(self.increments),
            "classification": self.classification,
        }


def classify_increments(increments: tuple[int, ...], all_exact: bool) -> str:
    """Trend rule shared by growth reports.

    Uses the last three increments; with only two available (n_max = 3) the
    equality rule still applies but strict growth cannot be certified.
    """
    if not all_exact:
        return "inconclusive"
    tail = increments[-3:]
    if len(tail) >= 2 and len(set(tail)) == 1:
        return "apparently-linear"
    if len(tail) == 3 and tail[0] < tail[1] < tail[2]:
        return "superlinear-suspect"
    return "inconclusive"
