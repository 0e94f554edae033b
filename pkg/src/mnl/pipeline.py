"""Candidate enumeration for minimally non-linear patterns.

The structural filters below are necessary conditions extracted from the
ratio, ones-count, and reduction theorems for minimally non-linear 0-1
matrices and bipartite ordered graphs.  A pattern that survives them is a
structural-candidate, nothing stronger: deciding non-linearity is open, and
no verdict here ever claims it.  The seven known 2-row minimally non-linear
matrices are recognized exactly (reflections counted as distinct patterns,
matching how they are usually listed).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, Union

from .errors import InvalidInputError
from .ordered_graphs import (
    Bipartition,
    OrderedGraph,
    check_bipartition,
    go_family,
    og_bipartite_reduce,
    og_contains,
    realizing_bipartitions,
    underlying_is_k22,
)
from .patterns import (
    Pattern01,
    contains,
    parse_pattern,
    reduce_leftmost,
    reflect_vertical,
    scan_reduction,
)
from .records import GrowthReport
from .sequences import Sequence, blocks, seq_contains

ABAB = Sequence((1, 2, 1, 2))


@dataclass(frozen=True)
class FilterCheck:
    name: str
    status: str  # pass | fail | exception
    detail: str


@dataclass(frozen=True)
class CandidateReport:
    pattern: Union[Pattern01, OrderedGraph]
    checks: tuple[FilterCheck, ...]
    verdict: str  # rejected | structural-candidate | known-mnl
    growth: GrowthReport | None = field(default=None)

    def to_json_dict(self) -> dict:
        out = {
            "pattern": str(self.pattern),
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
            "verdict": self.verdict,
        }
        if self.growth is not None:
            out["growth"] = self.growth.to_json_dict()
        return out


def _col_range(k: int) -> tuple[int, int]:
    return -((k + 2) // -4), 4 * k - 2


@lru_cache(maxsize=1)
def known_mnl_2row() -> frozenset[Pattern01]:
    """The seven known 2-row minimally non-linear matrices: the 2x2 all-ones
    block, two three-column matrices, one four-column matrix, and the
    vertical reflections of the last three."""
    base = [
        parse_pattern("11/11"),
        parse_pattern("101/011"),
        parse_pattern("011/101"),
        parse_pattern("1010/0101"),
    ]
    return frozenset(base + [reflect_vertical(p) for p in base[1:]])


@lru_cache(maxsize=1)
def _leftmost_exceptions() -> frozenset[Pattern01]:
    return frozenset(
        {parse_pattern("11/11"), parse_pattern("101/011"), parse_pattern("011/101")}
    )


@lru_cache(maxsize=1)
def _scan_exceptions() -> frozenset[Pattern01]:
    p = parse_pattern("1010/0101")
    return frozenset({p, reflect_vertical(p)})


def structural_filter(p: Pattern01) -> CandidateReport:
    """Run the matrix candidate checks in order, recording each verdict.
    Failures are reported, never raised."""
    if not p.ones:
        raise InvalidInputError("empty pattern")
    k, c = p.num_rows, p.num_cols
    checks: list[FilterCheck] = []

    rows_with = {r for r, _ in p.ones}
    cols_with = {cc for _, cc in p.ones}
    zero_free = len(rows_with) == k and len(cols_with) == c
    checks.append(
        FilterCheck(
            "zero-lines",
            "pass" if zero_free else "fail",
            "no all-zero row or column" if zero_free else "has an all-zero row or column",
        )
    )

    lo, hi = _col_range(k)
    ok = lo <= c <= hi
    checks.append(
        FilterCheck(
            "column-range",
            "pass" if ok else "fail",
            f"columns {c} vs allowed [{lo}, {hi}] for {k} rows",
        )
    )

    ones = len(p.ones)
    ok = k <= ones <= 5 * k - 3
    checks.append(
        FilterCheck(
            "ones-range",
            "pass" if ok else "fail",
            f"ones {ones} vs allowed [{k}, {5 * k - 3}]",
        )
    )

    if not zero_free:
        skipped = "skipped: needs a pattern without zero lines"
        checks.append(FilterCheck("leftmost-reduction", "exception", skipped))
        checks.append(FilterCheck("scan-word", "exception", skipped))
    else:
        reduced = reduce_leftmost(p)
        col_loads = [0] * c
        for _, cc in reduced.ones:
            col_loads[cc - 1] += 1
        ok = all(load <= 1 for load in col_loads)
        if ok:
            checks.append(
                FilterCheck("leftmost-reduction", "pass", "at most one one per column after removing leftmost ones")
            )
        elif p in _leftmost_exceptions():
            checks.append(
                FilterCheck("leftmost-reduction", "exception", "multi-one column allowed for this exceptional matrix")
            )
        else:
            checks.append(
                FilterCheck("leftmost-reduction", "fail", "a column keeps multiple ones after removing leftmost ones")
            )

        word = scan_reduction(p)
        longest_run = max(length for _, length in blocks(word).runs)
        has_abab = seq_contains(word, ABAB)
        if longest_run < 3 and not has_abab:
            checks.append(FilterCheck("scan-word", "pass", f"scan word {word} has short runs and no abab"))
        elif p in _scan_exceptions():
            checks.append(FilterCheck("scan-word", "exception", "abab scan word allowed for this exceptional matrix"))
        else:
            reason = "a run of length 3" if longest_run >= 3 else "an abab alternation"
            checks.append(FilterCheck("scan-word", "fail", f"scan word {word} has {reason}"))

    strict_hits = [
        m for m in known_mnl_2row() if m != p and contains(p, m)
    ]
    checks.append(
        FilterCheck(
            "strict-2row-containment",
            "fail" if strict_hits else "pass",
            f"strictly contains {strict_hits[0]}" if strict_hits else "contains no known 2-row matrix strictly",
        )
    )

    if any(ch.status == "fail" for ch in checks):
        verdict = "rejected"
    elif p in known_mnl_2row():
        verdict = "known-mnl"
    else:
        verdict = "structural-candidate"
    return CandidateReport(pattern=p, checks=tuple(checks), verdict=verdict)


def construction_patterns(k: int, num_cols: int) -> Iterator[Pattern01]:
    """Raw generator behind the counting bound: pick each row's leftmost-one
    column (column 1 must host at least one of them), then give every later
    column at most one extra one in a row whose leftmost lies further left.
    Each generated pattern arises exactly once."""
    i = num_cols
    for profile in product(range(1, i + 1), repeat=k):
        if 1 not in profile:
            continue
        options: list[list[int | None]] = []
        for c in range(2, i + 1):
            opts: list[int | None] = [row + 1 for row in range(k) if profile[row] < c]
            if any(lc == c for lc in profile):
                opts.append(None)
            options.append(opts)
        base = frozenset((row + 1, lc) for row, lc in enumerate(profile))
        for extras in product(*options):
            ones = set(base)
            for c, row in enumerate(extras, start=2):
                if row is not None:
                    ones.add((row, c))
            yield Pattern01(k, i, frozenset(ones))


def enumerate_candidates(
    k: int, col_min: int, col_max: int
) -> Iterator[CandidateReport]:
    """Stream non-rejected candidate reports for k-row patterns with column
    counts in [col_min, col_max], in column-count-then-row-string order.

    The leftmost-one reconstruction cannot reach the three known matrices
    whose reduced form keeps a multi-one column, so for k = 2 the known
    seven are seeded into the stream alongside the construction.
    """
    if k < 2:
        raise InvalidInputError(f"k must be >= 2, got {k}")
    lo, hi = _col_range(k)
    if not lo <= col_min <= col_max <= hi:
        raise InvalidInputError(
            f"column range [{col_min}, {col_max}] must sit inside [{lo}, {hi}] for k={k}"
        )
    for i in range(col_min, col_max + 1):
        batch = set(construction_patterns(k, i))
        if k == 2:
            batch.update(m for m in known_mnl_2row() if m.num_cols == i)
        for p in sorted(batch, key=str):
            report = structural_filter(p)
            if report.verdict != "rejected":
                yield report


def matrix_count_bound(k: int) -> int:
    """Upper bound on the number of minimally non-linear 0-1 matrices with
    k rows, summed over the admissible column counts."""
    if k < 2:
        raise InvalidInputError(f"k must be >= 2, got {k}")
    lo, hi = _col_range(k)
    return sum((i**k - (i - 1) ** k) * k ** (i - 1) for i in range(lo, hi + 1))


def seq_count_bound(k: int, ex_ababa_k: int) -> int:
    """Upper bound on the number of minimally non-linear sequences with k
    distinct letters, given a cap on the number of runs."""
    if k < 2:
        raise InvalidInputError(f"k must be >= 2, got {k}")
    if ex_ababa_k < 1:
        raise InvalidInputError(f"cap must be >= 1, got {ex_ababa_k}")
    return 2 * k * sum((2 * k - 2) ** (i - 1) for i in range(1, ex_ababa_k + 1))


def og_count_bound(k: int) -> int:
    """Upper bound on the number of minimally non-linear bipartite ordered
    graphs with k vertices in one part; the binomial factor counts the
    interleavings of the two parts."""
    if k < 2:
        raise InvalidInputError(f"k must be >= 2, got {k}")
    lo, hi = _col_range(k)
    return sum(
        comb(k + i, k) * (i**k - (i - 1) ** k) * k ** (i - 1)
        for i in range(lo, hi + 1)
    )


@lru_cache(maxsize=1)
def _known_og_members() -> frozenset[OrderedGraph]:
    out: set[OrderedGraph] = set()
    for m in known_mnl_2row():
        out.update(go_family(m))
    return frozenset(out)


@lru_cache(maxsize=1)
def _q_family() -> frozenset[OrderedGraph]:
    return go_family(parse_pattern("101/011"))


def og_structural_filter(g: OrderedGraph, parts: Bipartition) -> CandidateReport:
    """Ordered-graph analogue of structural_filter for a bipartite graph with
    a chosen bipartition."""
    check_bipartition(g, parts)
    checks: list[FilterCheck] = []
    small = min(len(parts.part_u), len(parts.part_v))
    large = max(len(parts.part_u), len(parts.part_v))
    is_k22 = underlying_is_k22(g)

    ok = large <= 4 * small - 2
    checks.append(
        FilterCheck(
            "part-ratio",
            "pass" if ok else "fail",
            f"parts {len(parts.part_u)} and {len(parts.part_v)}: larger {large} vs cap {4 * small - 2}",
        )
    )

    edges = len(g.edges)
    cap = len(parts.part_u) + len(parts.part_v) - 1
    if edges <= cap:
        checks.append(FilterCheck("edge-count-bipartite", "pass", f"{edges} edges within {cap}"))
    elif is_k22:
        checks.append(
            FilterCheck("edge-count-bipartite", "exception", "edge excess allowed: underlying graph is K22")
        )
    else:
        checks.append(FilterCheck("edge-count-bipartite", "fail", f"{edges} edges exceed {cap}"))

    cap = 2 * g.num_vertices - 2
    ok = edges <= cap
    checks.append(
        FilterCheck(
            "edge-count-total",
            "pass" if ok else "fail",
            f"{edges} edges vs cap {cap} for {g.num_vertices} vertices",
        )
    )

    reduced = og_bipartite_reduce(g, parts)
    heavy = [v for v in sorted(parts.part_v) if reduced.degree(v) > 1]
    if not heavy:
        checks.append(
            FilterCheck("bipartite-reduction", "pass", "every second-part vertex keeps at most one neighbor")
        )
    elif is_k22 or g in _q_family():
        checks.append(
            FilterCheck("bipartite-reduction", "exception", "multi-neighbor vertex allowed for this exceptional graph")
        )
    else:
        checks.append(
            FilterCheck("bipartite-reduction", "fail", f"vertex {heavy[0]} keeps several neighbors after reduction")
        )

    strict_hits = [m for m in _known_og_members() if m != g and og_contains(g, m)]
    checks.append(
        FilterCheck(
            "strict-known-containment",
            "fail" if strict_hits else "pass",
            f"strictly contains {strict_hits[0]}" if strict_hits else "contains no known family member strictly",
        )
    )

    if any(ch.status == "fail" for ch in checks):
        verdict = "rejected"
    elif g in _known_og_members():
        verdict = "known-mnl"
    else:
        verdict = "structural-candidate"
    return CandidateReport(pattern=g, checks=tuple(checks), verdict=verdict)


def enumerate_og_candidates(
    k: int, col_min: int, col_max: int
) -> Iterator[CandidateReport]:
    """Bipartite ordered-graph candidates: every realization of every
    non-rejected k-row matrix candidate, run through og_structural_filter
    with its unique realizing bipartition (the part holding vertex 1 plays
    the role of part_u).  Each graph is emitted once."""
    seen: set[OrderedGraph] = set()
    for report in enumerate_candidates(k, col_min, col_max):
        p = report.pattern
        assert isinstance(p, Pattern01)
        for g in sorted(go_family(p), key=str):
            if g in seen:
                continue
            seen.add(g)
            parts = realizing_bipartitions(g, p)[0]
            og_report = og_structural_filter(g, parts)
            if og_report.verdict != "rejected":
                yield og_report
