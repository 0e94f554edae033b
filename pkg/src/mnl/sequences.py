"""Generalized Davenport-Schinzel machinery.

A sequence is a word over symbols 1..s kept in normalized form: the first
occurrence of symbol t+1 comes after the first occurrence of t (a restricted
growth string).  Containment, block structure, exact extremal lengths, the
repeat-insertion transformation, and the candidate stream for minimally
non-linear sequences all live here.

Text format: lowercase letters a-z (a=1, b=2, ...) for alphabets up to 26,
comma-separated positive integers otherwise.  Parsing normalizes, so "bab"
and "aba" denote the same value.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidInputError, InvalidTransformationError
from .records import DEFAULT_NODE_BUDGET, ExRecord

ABABA = (1, 2, 1, 2, 1)


@dataclass(frozen=True)
class Sequence:
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise InvalidInputError("empty sequence")
        top = 0
        for x in self.letters:
            if not isinstance(x, int) or x < 1:
                raise InvalidInputError(f"bad symbol {x!r}")
            if x > top + 1:
                raise InvalidInputError(
                    f"not normalized: symbol {x} appears before {top + 1}"
                )
            top = max(top, x)

    @property
    def alphabet_size(self) -> int:
        return max(self.letters)

    @classmethod
    def normalized(cls, letters: Iterable[int]) -> "Sequence":
        """Rename symbols by first occurrence so the result is normalized."""
        mapping: dict[int, int] = {}
        out = []
        for x in letters:
            if x not in mapping:
                mapping[x] = len(mapping) + 1
            out.append(mapping[x])
        return cls(tuple(out))

    def __str__(self) -> str:
        return format_sequence(self)


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal runs of equal adjacent letters, as (symbol, run_length)."""

    runs: tuple[tuple[int, int], ...]

    @property
    def num_runs(self) -> int:
        return len(self.runs)


def parse_sequence(text: str) -> Sequence:
    s = text.strip()
    if not s:
        raise InvalidInputError("empty sequence text")
    if "," in s or s.isdigit():
        try:
            letters = [int(tok) for tok in s.split(",")]
        except ValueError as exc:
            raise InvalidInputError(f"bad sequence text {text!r}") from exc
        if any(x < 1 for x in letters):
            raise InvalidInputError("sequence symbols must be positive")
    else:
        if not all("a" <= ch <= "z" for ch in s):
            raise InvalidInputError(f"bad sequence text {text!r}")
        letters = [ord(ch) - 96 for ch in s]
    return Sequence.normalized(letters)


def format_sequence(u: Sequence) -> str:
    if u.alphabet_size <= 26:
        return "".join(chr(96 + x) for x in u.letters)
    return ",".join(str(x) for x in u.letters)


def seq_contains(u: Sequence, v: Sequence) -> bool:
    """True iff some subsequence of u is isomorphic to v.

    Backtracks over an injective symbol map v-symbol -> u-symbol; positions
    are matched greedily at the earliest feasible occurrence, which is
    complete for subsequence matching.
    """
    lu, lv = u.letters, v.letters
    m, big = len(lv), len(lu)
    if m > big or v.alphabet_size > u.alphabet_size:
        return False
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def rec(i: int, j: int) -> bool:
        if i == m:
            return True
        limit = big - (m - i)  # last start index leaving room for the rest
        vs = lv[i]
        if vs in mapping:
            target = mapping[vs]
            for jj in range(j, limit + 1):
                if lu[jj] == target:
                    return rec(i + 1, jj + 1)
            return False
        tried: set[int] = set()
        for jj in range(j, limit + 1):
            us = lu[jj]
            if us in used or us in tried:
                continue
            tried.add(us)
            mapping[vs] = us
            used.add(us)
            if rec(i + 1, jj + 1):
                del mapping[vs]
                used.discard(us)
                return True
            del mapping[vs]
            used.discard(us)
        return False

    return rec(0, 0)


def blocks(u: Sequence) -> BlockDecomposition:
    runs: list[tuple[int, int]] = []
    for x in u.letters:
        if runs and runs[-1][0] == x:
            runs[-1] = (x, runs[-1][1] + 1)
        else:
            runs.append((x, 1))
    return BlockDecomposition(tuple(runs))


def _extends_copy(letters: list[int], v: tuple[int, ...]) -> bool:
    """True iff v embeds into letters with v's final element mapped to the
    final position.  Used incrementally: if a prefix avoided v, appending a
    letter creates a copy only through the new position."""
    big, m = len(letters), len(v)
    if m > big:
        return False
    last = letters[-1]
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def rec(i: int, j: int) -> bool:
        vs = v[i]
        if i == m - 1:
            if vs in mapping:
                return mapping[vs] == last
            return last not in used
        limit = big - 1 - (m - 1 - i)
        if vs in mapping:
            target = mapping[vs]
            for jj in range(j, limit + 1):
                if letters[jj] == target:
                    return rec(i + 1, jj + 1)
            return False
        tried: set[int] = set()
        for jj in range(j, limit + 1):
            us = letters[jj]
            if us in used or us in tried:
                continue
            tried.add(us)
            mapping[vs] = us
            used.add(us)
            if rec(i + 1, jj + 1):
                del mapping[vs]
                used.discard(us)
                return True
            del mapping[vs]
            used.discard(us)
        return False

    return rec(0, 0)


class _BudgetExhausted(Exception):
    pass


def seq_ex_exact(u: Sequence, n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> ExRecord:
    """Exact maximum length of a u-avoiding sequence over at most n symbols
    in which every r consecutive letters are distinct (r = u's alphabet).

    Depth-first extension over normalized sequences; normalization breaks
    the symbol-renaming symmetry, which is sound because both the window
    constraint and containment are isomorphism-invariant.
    """
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    start = time.monotonic()
    r = u.alphabet_size
    vlett = u.letters
    best = 0
    nodes = 0
    exact = True
    seq: list[int] = []

    def rec(max_sym: int) -> None:
        nonlocal best, nodes
        for x in range(1, min(max_sym + 1, n) + 1):
            if nodes >= node_budget:
                raise _BudgetExhausted
            nodes += 1
            if len(seq) >= r - 1:
                window = seq[len(seq) - (r - 1):]
                window.append(x)
                if len(set(window)) != r:
                    continue
            seq.append(x)
            if _extends_copy(seq, vlett):
                seq.pop()
                continue
            if len(seq) > best:
                best = len(seq)
            rec(max(max_sym, x))
            seq.pop()

    try:
        rec(0)
    except _BudgetExhausted:
        exact = False
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return ExRecord(
        pattern_key=format_sequence(u),
        kind="sequence",
        n=n,
        value=best,
        exact=exact,
        nodes_explored=nodes,
        elapsed_ms=elapsed_ms,
    )


def insert_repeat(u: Sequence, symbol: int, gap_index: int) -> Sequence:
    """Insert one copy of symbol between two consecutive occurrences of it.

    gap_index counts letters before the insertion point, so the new letter
    lands between positions gap_index and gap_index+1 (1-indexed).
    """
    letters = u.letters
    occ = [i for i, x in enumerate(letters) if x == symbol]
    if len(occ) < 2:
        raise InvalidTransformationError(
            f"symbol {symbol} does not occur twice in {format_sequence(u)}"
        )
    if not any(p1 < gap_index <= p2 for p1, p2 in zip(occ, occ[1:])):
        raise InvalidTransformationError(
            f"gap {gap_index} is not between consecutive occurrences of {symbol}"
        )
    return Sequence(letters[:gap_index] + (symbol,) + letters[gap_index:])


def _candidates_of_length(length: int, k: int, segment_cap: int) -> Iterator[tuple[int, ...]]:
    """Lexicographic stream of normalized words of the given length over
    exactly k symbols with runs of length <= 2, at most segment_cap runs,
    and no copy of ababa."""
    seq: list[int] = []

    def rec(used: int, num_runs: int) -> Iterator[tuple[int, ...]]:
        if len(seq) == length:
            if used == k:
                yield tuple(seq)
            return
        remaining = length - len(seq)
        if k - used > remaining:
            return
        for x in range(1, min(used + 1, k) + 1):
            if seq and x == seq[-1]:
                if len(seq) >= 2 and seq[-2] == x:
                    continue  # run of 3
                new_runs = num_runs
            else:
                new_runs = num_runs + 1
                if new_runs > segment_cap:
                    continue
            seq.append(x)
            if not _extends_copy(seq, ABABA):
                yield from rec(max(used, x), new_runs)
            seq.pop()

    yield from rec(0, 0)


def mnl_seq_candidates(k: int, segment_cap: int) -> Iterator[Sequence]:
    """Stream every sequence satisfying the structural conditions a minimally
    non-linear sequence with k distinct letters must satisfy: runs of length
    at most 2, at most segment_cap runs, and avoidance of ababa.

    ababa itself is the one known exception to its own conditions, so for
    k = 2 it is injected into the stream (when its length fits the stated
    2 * segment_cap length cap).  Emission is in length-then-lexicographic
    order.  This is a superset search tool: emitted sequences are candidates,
    not certified minimally non-linear.
    """
    if k < 2:
        raise InvalidInputError(f"k must be >= 2, got {k}")
    if segment_cap < 1:
        raise InvalidInputError(f"segment_cap must be >= 1, got {segment_cap}")
    for length in range(1, 2 * segment_cap + 1):
        inject = k == 2 and length == 5 and 5 <= 2 * segment_cap
        done_inject = False
        for word in _candidates_of_length(length, k, segment_cap):
            if inject and not done_inject and word > ABABA:
                yield Sequence(ABABA)
                done_inject = True
            yield Sequence(word)
        if inject and not done_inject:
            yield Sequence(ABABA)
