from .corpus import (
    clique_in_complete,
    connected_graphs,
    random_connected_graph,
    set_partitions,
    spanning_subgraphs,
)
from .models import Counterexample, SuiteReport
from .suites import SUITES, run_suite

__all__ = [
    "SUITES",
    "Counterexample",
    "SuiteReport",
    "clique_in_complete",
    "connected_graphs",
    "random_connected_graph",
    "run_suite",
    "set_partitions",
    "spanning_subgraphs",
]
