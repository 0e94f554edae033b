import pytest

from mnl.errors import InvalidInputError
from mnl.extremal import ex_branch_bound, ex_exhaustive, growth_report
from mnl.patterns import (
    Pattern01,
    canonical_key,
    contains,
    insert_split_column,
    insert_zero_line,
    parse_pattern,
    rotate90,
    symmetry_variants,
)
from mnl.records import ExRecord

from oracles import naive_ex

P = parse_pattern


class TestExhaustive:
    def test_row_pair(self):
        assert ex_exhaustive(3, P("11")) == 3

    def test_tiny_board(self):
        assert ex_exhaustive(1, P("11")) == 1

    def test_all_ones_block(self):
        assert ex_exhaustive(2, P("11/11")) == 3

    def test_matches_independent_oracle(self):
        for text in ("11", "111", "11/11", "101/011", "1010/0101"):
            for n in (2, 3):
                assert ex_exhaustive(n, P(text)) == naive_ex(n, P(text))

    def test_refuses_out_of_range(self):
        with pytest.raises(InvalidInputError, match="1 <= n <= 4"):
            ex_exhaustive(5, P("11"))

    def test_rejects_empty_pattern(self):
        with pytest.raises(InvalidInputError):
            ex_exhaustive(2, Pattern01(1, 1, frozenset()))


class TestBranchBound:
    def test_row_pair_identity(self):
        rec = ex_branch_bound(5, P("11"))
        assert rec.value == 5 and rec.exact

    def test_one_by_three(self):
        rec = ex_branch_bound(4, P("111"))
        assert rec.value == 8 and rec.exact

    def test_block_matches_oracle(self):
        rec = ex_branch_bound(4, P("11/11"))
        assert rec.value == ex_exhaustive(4, P("11/11")) == 9

    def test_oracle_equivalence_sample(self, suite_patterns):
        for p in suite_patterns[:4]:
            for n in range(1, 4):
                rec = ex_branch_bound(n, p)
                assert rec.exact
                assert rec.value == ex_exhaustive(n, p)

    def test_monotone_in_n(self, suite_patterns):
        for p in suite_patterns:
            values = [ex_branch_bound(n, p).value for n in range(1, 5)]
            assert values == sorted(values)

    def test_containment_monotonicity(self, suite_patterns):
        pool = suite_patterns
        for p in pool:
            for q in pool:
                if contains(q, p):
                    for n in (2, 3):
                        assert ex_branch_bound(n, p).value <= ex_branch_bound(n, q).value

    def test_symmetry_invariance(self):
        for text in ("11", "101/011", "11/10"):
            p = P(text)
            base = [ex_branch_bound(n, p).value for n in (2, 3, 4)]
            for image in symmetry_variants(p):
                assert [ex_branch_bound(n, image).value for n in (2, 3, 4)] == base

    def test_zero_line_monotonicity(self):
        for text in ("11", "11/11", "101/011"):
            p = P(text)
            for axis, index in (("row", 0), ("column", p.num_cols)):
                bigger = insert_zero_line(p, axis, index)
                for n in range(1, 5):
                    assert ex_branch_bound(n, p).value <= ex_branch_bound(n, bigger).value

    def test_budget_exhaustion(self):
        rec = ex_branch_bound(4, P("11/11"), node_budget=10)
        assert not rec.exact
        assert rec.value <= 9
        assert rec.nodes_explored == 10

    def test_record_shape(self):
        rec = ex_branch_bound(3, P("11"))
        assert rec.kind == "matrix"
        assert rec.pattern_key == canonical_key(P("11"))
        assert rec.value <= 9

    def test_rejects_empty_pattern(self):
        with pytest.raises(InvalidInputError):
            ex_branch_bound(3, Pattern01(2, 2, frozenset()))

    def test_single_row_bound_agrees_with_general_path(self):
        # single-row needles take the automaton-pruned path; the rotation is
        # multi-row, takes the general path, and must agree on square boards
        for text in ("11", "101", "1011"):
            p = P(text)
            for n in range(1, 5):
                assert ex_branch_bound(n, p).value == ex_branch_bound(n, rotate90(p)).value


class TestSplitColumnSandwich:
    def test_sandwich_small_n(self, suite_patterns):
        for p in suite_patterns:
            spots = [
                (r, c)
                for (r, c) in p.ones
                if (r, c + 1) in p.ones
            ]
            for r, c in spots:
                bigger = insert_split_column(p, r, c)
                for n in range(1, 5):
                    low = ex_branch_bound(n, p).value
                    high = ex_branch_bound(n, bigger).value
                    assert low <= high <= 2 * low


class TestGrowthReport:
    def test_row_pair_linear(self):
        rep = growth_report(P("11"), 6)
        assert rep.increments == (1, 1, 1, 1, 1)
        assert rep.classification == "apparently-linear"

    def test_single_one_all_zero(self):
        rep = growth_report(P("1"), 3)
        assert [v for _, v in rep.values] == [0, 0, 0]
        assert rep.classification == "apparently-linear"

    def test_block_values(self):
        rep = growth_report(P("11/11"), 5)
        assert [v for _, v in rep.values] == [1, 3, 6, 9, 12]

    def test_inexact_forces_inconclusive(self):
        rep = growth_report(P("11/11"), 4, node_budget=20)
        assert rep.classification == "inconclusive"

    def test_n_max_validation(self):
        with pytest.raises(InvalidInputError):
            growth_report(P("11"), 2)


class TestExRecord:
    def test_json_round_trip(self):
        rec = ex_branch_bound(3, P("11"))
        assert ExRecord.from_json_dict(rec.to_json_dict()) == rec

    def test_value_cap_matrix(self):
        with pytest.raises(ValueError):
            ExRecord("x", "matrix", 2, 5, True, 0, 0)

    def test_value_cap_graph(self):
        with pytest.raises(ValueError):
            ExRecord("x", "ordered-graph", 3, 4, True, 0, 0)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            ExRecord("x", "widget", 2, 1, True, 0, 0)
