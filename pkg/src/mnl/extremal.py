"""Exact computation of the forbidden-pattern extremal value for 0-1 matrices.

ex(n, p) is the maximum number of ones in an n x n 0-1 matrix containing no
copy of p.  Two engines are provided:

- ex_exhaustive: plain enumeration of all 2^(n*n) matrices, restricted to
  n <= 4.  It exists as the independent cross-check for the search engine.
- ex_branch_bound: depth-first search filling the matrix column by column,
  each column a row bitmask.  Candidate masks are tried in decreasing
  population count; a branch dies when its optimistic completion cannot beat
  the best matrix found, or when the partial matrix already contains p
  (checked incrementally: a new copy must use the newest column).

For single-row needles the optimistic completion is sharpened by an exact
per-row subsequence-automaton table; for anything else the trivial
remaining-columns-times-n bound applies.  Both bounds are admissible, so
exactness is never at stake, only speed.

The search is deterministic and single threaded; records say exact=False
instead of failing when the node budget runs out.
"""
from __future__ import annotations

import time
from itertools import product

from .errors import InvalidInputError
from .patterns import Pattern01, _embed, canonical_key
from .records import DEFAULT_NODE_BUDGET, ExRecord, GrowthReport, classify_increments

_ORACLE_MAX_N = 4


def _require_nonempty(p: Pattern01) -> None:
    if not p.ones:
        raise InvalidInputError("pattern with no ones is rejected by extremal operations")


def ex_exhaustive(n: int, p: Pattern01) -> int:
    """Exact ex(n, p) by enumerating every n x n 0-1 matrix.  Only for
    n <= 4; larger boards are the search engine's job."""
    if not 1 <= n <= _ORACLE_MAX_N:
        raise InvalidInputError(
            f"ex_exhaustive enumerates 2^(n^2) matrices and accepts 1 <= n <= {_ORACLE_MAX_N}, got {n}"
        )
    _require_nonempty(p)
    pcs = [bin(m).count("1") for m in range(1 << n)]
    best = 0
    for cols in product(range(1 << n), repeat=n):
        total = sum(pcs[c] for c in cols)
        if total <= best:
            continue
        if not _embed(cols, n, p):
            best = total
    return best


class _BudgetExhausted(Exception):
    pass


def _single_row_tables(p: Pattern01, n: int) -> tuple[list[list[int]], list[list[int]]]:
    """Subsequence-automaton tables for a 1-row needle.

    adv[s][b]: state after reading a column whose bit in this row is b, where
    state s counts needle columns already embeddable; state m means the row
    completes a copy.  comp[t][s]: the most ones this row can still take over
    t remaining columns without completing, or -1 when every continuation
    completes (the branch is dead because all n columns must be filled).
    """
    bits = [1 if (1, c) in p.ones else 0 for c in range(1, p.num_cols + 1)]
    m = len(bits)
    adv = [[0, 0] for _ in range(m)]
    for s in range(m):
        for b in (0, 1):
            adv[s][b] = s + 1 if (bits[s] == 0 or b == 1) else s
    comp = [[0] * m for _ in range(n + 1)]
    for t in range(1, n + 1):
        for s in range(m):
            best = -1
            for b in (0, 1):
                s2 = adv[s][b]
                if s2 == m:
                    continue
                sub = comp[t - 1][s2]
                if sub >= 0 and b + sub > best:
                    best = b + sub
            comp[t][s] = best
    return adv, comp


def ex_branch_bound(
    n: int, p: Pattern01, node_budget: int = DEFAULT_NODE_BUDGET
) -> ExRecord:
    """Branch-and-bound ex(n, p).  exact=True iff the tree was exhausted."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    _require_nonempty(p)
    start = time.monotonic()
    pcs = [bin(m).count("1") for m in range(1 << n)]
    candidates = sorted(range(1 << n), key=lambda m: (-pcs[m], m))
    single_row = p.num_rows == 1
    if single_row:
        adv, comp = _single_row_tables(p, n)
        needle_cols = p.num_cols

    best = 0  # the all-zero matrix avoids any nonempty pattern
    nodes = 0
    cols: list[int] = []

    def rec(ones: int, states: tuple[int, ...] | None) -> None:
        nonlocal best, nodes
        placed = len(cols)
        remaining = n - placed
        if remaining == 0:
            if ones > best:
                best = ones
            return
        if single_row:
            bound = ones
            for s in states:  # type: ignore[union-attr]
                row_max = comp[remaining][s]
                if row_max < 0:
                    return
                bound += row_max
            if bound <= best:
                return
        elif ones + remaining * n <= best:
            return
        rem_after = (remaining - 1) * n
        for mask in candidates:
            if nodes >= node_budget:
                raise _BudgetExhausted
            nodes += 1
            if ones + pcs[mask] + rem_after <= best:
                break  # candidates sorted by popcount, nothing later can win
            if single_row:
                new_states = tuple(
                    adv[s][(mask >> r) & 1] for r, s in enumerate(states)  # type: ignore[arg-type]
                )
                if any(s == needle_cols for s in new_states):
                    continue
                cols.append(mask)
                rec(ones + pcs[mask], new_states)
                cols.pop()
            else:
                cols.append(mask)
                if not _embed(cols, n, p, pin_last_col=True):
                    rec(ones + pcs[mask], None)
                cols.pop()

    exact = True
    try:
        rec(0, (0,) * n if single_row else None)
    except _BudgetExhausted:
        exact = False
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return ExRecord(
        pattern_key=canonical_key(p),
        kind="matrix",
        n=n,
        value=best,
        exact=exact,
        nodes_explored=nodes,
        elapsed_ms=elapsed_ms,
    )


def growth_records(
    p: Pattern01, n_max: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[ExRecord]:
    """Search records for n = 1..n_max."""
    if n_max < 3:
        raise InvalidInputError(f"n_max must be >= 3, got {n_max}")
    return [ex_branch_bound(n, p, node_budget) for n in range(1, n_max + 1)]


def growth_report_from_records(key: str, records: list[ExRecord]) -> GrowthReport:
    values = tuple((rec.n, rec.value) for rec in records)
    increments = tuple(values[i + 1][1] - values[i][1] for i in range(len(values) - 1))
    classification = classify_increments(increments, all(rec.exact for rec in records))
    return GrowthReport(
        pattern_key=key,
        values=values,
        increments=increments,
        classification=classification,
    )


def growth_report(
    p: Pattern01, n_max: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> GrowthReport:
    """ex(n, p) for n = 1..n_max plus the trend classification.

    Any inexact value forces 'inconclusive'.  The classification is a
    desk-scale heuristic only: a genuine n * alpha(n) growth term is far
    below the resolution of first differences at these sizes and may
    legitimately read as apparently-linear.
    """
    return growth_report_from_records(canonical_key(p), growth_records(p, n_max, node_budget))
