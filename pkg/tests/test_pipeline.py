from itertools import product

import pytest

from mnl.errors import InvalidInputError
from mnl.ordered_graphs import (
    Bipartition,
    go_family,
    parse_ordered_graph,
    realizing_bipartitions,
)
from mnl.patterns import Pattern01, parse_pattern
from mnl.pipeline import (
    construction_patterns,
    enumerate_candidates,
    enumerate_og_candidates,
    known_mnl_2row,
    matrix_count_bound,
    og_count_bound,
    og_structural_filter,
    seq_count_bound,
    structural_filter,
)

from oracles import sum_matrix_bound, sum_og_bound, sum_seq_bound

P = parse_pattern
G = parse_ordered_graph


def check_status(report, name):
    return next(c.status for c in report.checks if c.name == name)


class TestKnownSet:
    def test_exactly_seven(self):
        assert len(known_mnl_2row()) == 7

    def test_block_member(self):
        assert P("11/11") in known_mnl_2row()

    def test_vertical_reflection_member(self):
        assert P("0101/1010") in known_mnl_2row()

    def test_expected_roster(self):
        expected = {"11/11", "101/011", "011/101", "101/110", "110/101", "1010/0101", "0101/1010"}
        assert {str(p) for p in known_mnl_2row()} == expected


class TestStructuralFilter:
    def test_diag_trips_scan_exception(self):
        rep = structural_filter(P("1010/0101"))
        assert rep.verdict == "known-mnl"
        assert check_status(rep, "scan-word") == "exception"
        assert check_status(rep, "strict-2row-containment") == "pass"
        assert [c.status for c in rep.checks[:4]] == ["pass"] * 4

    def test_triple_run_rejected(self):
        rep = structural_filter(P("1110/0001"))
        assert rep.verdict == "rejected"
        assert check_status(rep, "scan-word") == "fail"

    def test_plain_candidate(self):
        rep = structural_filter(P("110/011"))
        assert rep.verdict == "structural-candidate"
        assert all(c.status == "pass" for c in rep.checks)

    def test_all_seven_known(self):
        for m in known_mnl_2row():
            assert structural_filter(m).verdict == "known-mnl"

    def test_zero_line_skips_derived_checks(self):
        rep = structural_filter(P("10/10"))
        assert rep.verdict == "rejected"
        assert check_status(rep, "zero-lines") == "fail"
        assert check_status(rep, "leftmost-reduction") == "exception"
        assert check_status(rep, "scan-word") == "exception"

    def test_column_range_rejection(self):
        rep = structural_filter(P("1111111/1111111"))
        assert check_status(rep, "column-range") == "fail"
        assert rep.verdict == "rejected"

    def test_leftmost_exception_only_for_named_matrices(self):
        rep = structural_filter(P("11/11"))
        assert check_status(rep, "leftmost-reduction") == "exception"
        rep = structural_filter(P("111/111"))
        assert check_status(rep, "leftmost-reduction") == "fail"

    def test_strict_containment_rejection(self):
        # two stacked all-ones rows of width 3 strictly contain the block
        rep = structural_filter(P("111/111"))
        assert check_status(rep, "strict-2row-containment") == "fail"
        assert rep.verdict == "rejected"


class TestEnumerate:
    def test_range_validation(self):
        with pytest.raises(InvalidInputError):
            list(enumerate_candidates(2, 0, 6))
        with pytest.raises(InvalidInputError):
            list(enumerate_candidates(2, 1, 7))
        with pytest.raises(InvalidInputError):
            list(enumerate_candidates(1, 1, 2))

    def test_emits_all_seven_for_k2(self):
        reports = list(enumerate_candidates(2, 1, 6))
        known = {str(r.pattern) for r in reports if r.verdict == "known-mnl"}
        assert known == {str(m) for m in known_mnl_2row()}

    def test_emitted_bounds(self):
        for rep in enumerate_candidates(2, 1, 6):
            p = rep.pattern
            assert 1 <= p.num_cols <= 6
            assert 2 <= len(p.ones) <= 7
            assert rep.verdict != "rejected"

    def test_reports_are_reproducible(self):
        reports = list(enumerate_candidates(2, 1, 4))
        for rep in reports:
            again = structural_filter(rep.pattern)
            assert again == rep

    def test_stream_deterministic(self):
        a = [str(r.pattern) for r in enumerate_candidates(2, 1, 6)]
        b = [str(r.pattern) for r in enumerate_candidates(2, 1, 6)]
        assert a == b

    def test_k3_slice_ones_bound(self):
        for rep in enumerate_candidates(3, 2, 4):
            p = rep.pattern
            assert len(p.ones) <= 12
            if p not in known_mnl_2row():
                assert len(p.ones) <= p.num_rows + p.num_cols - 1

    def test_construction_injective_and_within_term(self):
        for k, i in ((2, 2), (2, 3), (2, 6), (3, 2), (3, 4)):
            pats = list(construction_patterns(k, i))
            term = (i**k - (i - 1) ** k) * k ** (i - 1)
            assert len(set(pats)) == len(pats)
            assert len(pats) <= term

    def test_prefilter_total_within_bound_k2(self):
        total = set()
        for i in range(1, 7):
            total.update(construction_patterns(2, i))
        total.update(known_mnl_2row())
        assert len(total) <= matrix_count_bound(2)

    @staticmethod
    def _construction_count(k, i):
        """Arithmetic mirror of construction_patterns: number of generated
        patterns, without materializing them (generation is injective)."""
        total = 0
        for profile in product(range(1, i + 1), repeat=k):
            if 1 not in profile:
                continue
            combos = 1
            for c in range(2, i + 1):
                opts = sum(1 for row in range(k) if profile[row] < c)
                if c in profile:
                    opts += 1
                combos *= opts
            total += combos
        return total

    def test_prefilter_total_within_bound_k3(self):
        # full-range pre-filter count for k=3; the count formula is checked
        # against materialized generation on two slices first
        for i in (3, 4):
            assert self._construction_count(3, i) == len(set(construction_patterns(3, i)))
        total = sum(self._construction_count(3, i) for i in range(2, 11))
        assert total <= matrix_count_bound(3)

    def test_rejects_empty_pattern(self):
        with pytest.raises(InvalidInputError):
            structural_filter(Pattern01(2, 2, frozenset()))


class TestBounds:
    def test_matrix_known_value(self):
        assert matrix_count_bound(2) == 579

    def test_matrix_first_term(self):
        # the i=1 term for two rows contributes exactly one matrix shape
        assert (1**2 - 0**2) * 2**0 == 1

    def test_seq_known_value(self):
        assert seq_count_bound(2, 4) == 60

    def test_seq_single_term(self):
        assert seq_count_bound(2, 1) == 4

    def test_og_known_value(self):
        assert og_count_bound(2) == 13959

    def test_og_binomial_factor(self):
        from math import comb

        assert comb(8, 2) == 28
        assert og_count_bound(2) >= 28 * (6**2 - 5**2) * 2**5

    def test_matches_independent_summation(self):
        for k in (2, 3, 4):
            assert matrix_count_bound(k) == sum_matrix_bound(k)
            assert og_count_bound(k) == sum_og_bound(k)
            for cap in (1, 4, 7):
                assert seq_count_bound(k, cap) == sum_seq_bound(k, cap)

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            matrix_count_bound(1)
        with pytest.raises(InvalidInputError):
            seq_count_bound(2, 0)
        with pytest.raises(InvalidInputError):
            og_count_bound(1)


class TestOgStructuralFilter:
    def test_k22_trips_exceptions(self):
        g = G("n=4;1 3;1 4;2 3;2 4")
        rep = og_structural_filter(g, Bipartition(frozenset({1, 2}), frozenset({3, 4})))
        assert rep.verdict == "known-mnl"
        assert check_status(rep, "edge-count-bipartite") == "exception"
        assert check_status(rep, "bipartite-reduction") == "exception"

    def test_single_edge_candidate(self):
        rep = og_structural_filter(
            G("n=2;1 2"), Bipartition(frozenset({1}), frozenset({2}))
        )
        assert rep.verdict == "structural-candidate"
        assert all(c.status == "pass" for c in rep.checks)

    def test_diag_member_known(self):
        diag = P("1010/0101")
        g = G("n=6;1 3;1 5;2 4;2 6")
        parts = realizing_bipartitions(g, diag)[0]
        assert {len(parts.part_u), len(parts.part_v)} == {2, 4}
        rep = og_structural_filter(g, parts)
        assert rep.verdict == "known-mnl"
        assert check_status(rep, "part-ratio") == "pass"

    def test_bad_bipartition_raises(self):
        with pytest.raises(InvalidInputError):
            og_structural_filter(
                G("n=3;1 2"), Bipartition(frozenset({1, 2}), frozenset({3}))
            )

    def test_unbalanced_parts_rejected(self):
        # a star with one center and four leaves: parts 1 and 4 exceed 4*1-2
        g = G("n=5;1 2;1 3;1 4;1 5")
        rep = og_structural_filter(
            g, Bipartition(frozenset({1}), frozenset({2, 3, 4, 5}))
        )
        assert check_status(rep, "part-ratio") == "fail"
        assert rep.verdict == "rejected"


class TestOgEnumeration:
    def test_stream_covers_known_families(self):
        reports = list(enumerate_og_candidates(2, 1, 6))
        known = {str(r.pattern) for r in reports if r.verdict == "known-mnl"}
        expected = set()
        for m in known_mnl_2row():
            expected.update(str(g) for g in go_family(m))
        assert known == expected

    def test_no_duplicates(self):
        reports = list(enumerate_og_candidates(2, 2, 4))
        names = [str(r.pattern) for r in reports]
        assert len(names) == len(set(names))
