import pytest

from mnl.ordered_graphs import parse_ordered_graph
from mnl.patterns import parse_pattern
from mnl.pipeline import known_mnl_2row

EXTRA_PATTERNS = ("11", "1/1", "111", "10/01", "11/10", "1")

SUITE_GRAPH_TEXTS = (
    "n=2;1 2",                      # single edge
    "n=3;1 2;2 3",                  # consecutive path
    "n=3;1 3;2 3",                  # cherry
    "n=4;1 3;2 4",                  # crossing pair
    "n=4;1 4;2 3",                  # nested pair
    "n=4;1 2;3 4",                  # disjoint pair
    "n=4;1 3;1 4;2 3;2 4",          # K22, parts first
    "n=4;1 2;2 3;3 4;1 4",          # K22 as a 4-cycle
    "n=3;1 2;1 3;2 3",              # triangle
    "n=4;1 4;2 4;3 4",              # star into the last vertex
)


@pytest.fixture(scope="session")
def suite_patterns():
    """The fixed regression suite: the seven known 2-row matrices plus
    assorted small patterns."""
    return sorted(known_mnl_2row(), key=str) + [parse_pattern(s) for s in EXTRA_PATTERNS]


@pytest.fixture(scope="session")
def suite_graphs():
    return [parse_ordered_graph(s) for s in SUITE_GRAPH_TEXTS]
