"""Custom metrics for chromacover solvers."""

from prometheus_client import Counter, Histogram

solver_runs_total = Counter(
    "chromacover_solver_runs_total",
    "Exact solver invocations",
    ["solver"],
)

search_nodes_total = Counter(
    "chromacover_search_nodes_total",
    "Branch-and-bound nodes expanded",
    ["solver"],
)

solve_duration_seconds = Histogram(
    "chromacover_solve_duration_seconds",
    "Wall time of one exact solve",
    ["solver"],
    buckets=[0.001, 0.01, 0.1, 0.5, 1, 5, 30, 120],
)

verify_failures_total = Counter(
    "chromacover_verify_failures_total",
    "Counterexamples reported by verification suites",
    ["suite"],
)
