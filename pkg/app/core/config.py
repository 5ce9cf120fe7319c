import os
from dataclasses import dataclass, field


@dataclass(slots=True)
class Settings:
    # Logging
    log_level: str = "INFO"
    log_compact: bool = True

    # Exact solver size guard (vertices of the graph actually colored)
    exact_vertex_limit: int = 64
    allow_large: bool = False

    # Enumeration limits
    switching_class_limit: int = 16
    exhaustive_edge_limit: int = 14

    # Bound budgets
    class_budget: int = 4096
    coloring_budget: int = 64
    search_budget: int = 2000

    # Seeded sampling
    seed: int = 0
    verify_samples: int = 200

    # Oracle limits
    oracle_chromatic_limit: int = 10
    oracle_chi_rel_limit: int = 7
    oracle_switch_limit: int = 10

    # CORS
    cors_origins: list[str] = field(
        default_factory=lambda: [
            "http://localhost:3000",
            "http://127.0.0.1:3000",
        ]
    )


def _to_int(value: str | None, default: int) -> int:
    try:
        return int(value) if value is not None else default
    except ValueError:
        return default


def _to_bool(value: str | None, default: bool) -> bool:
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def load_settings() -> Settings:
    s = Settings()
    s.log_level = os.getenv("LOG_LEVEL", s.log_level)
    s.log_compact = _to_bool(os.getenv("CHROMACOVER_LOG_COMPACT"), s.log_compact)
    s.exact_vertex_limit = _to_int(
        os.getenv("CHROMACOVER_EXACT_VERTEX_LIMIT"), s.exact_vertex_limit
    )
    s.allow_large = _to_bool(os.getenv("CHROMACOVER_ALLOW_LARGE"), s.allow_large)
    s.switching_class_limit = _to_int(
        os.getenv("CHROMACOVER_SWITCHING_CLASS_LIMIT"), s.switching_class_limit
    )
    s.exhaustive_edge_limit = _to_int(
        os.getenv("CHROMACOVER_EXHAUSTIVE_EDGE_LIMIT"), s.exhaustive_edge_limit
    )
    s.class_budget = _to_int(os.getenv("CHROMACOVER_CLASS_BUDGET"), s.class_budget)
    s.coloring_budget = _to_int(
        os.getenv("CHROMACOVER_COLORING_BUDGET"), s.coloring_budget
    )
    s.search_budget = _to_int(os.getenv("CHROMACOVER_SEARCH_BUDGET"), s.search_budget)
    s.seed = _to_int(os.getenv("CHROMACOVER_SEED"), s.seed)
    s.verify_samples = _to_int(
        os.getenv("CHROMACOVER_VERIFY_SAMPLES"), s.verify_samples
    )
    s.oracle_chromatic_limit = _to_int(
        os.getenv("CHROMACOVER_ORACLE_CHROMATIC_LIMIT"), s.oracle_chromatic_limit
    )
    s.oracle_chi_rel_limit = _to_int(
        os.getenv("CHROMACOVER_ORACLE_CHI_REL_LIMIT"), s.oracle_chi_rel_limit
    )
    s.oracle_switch_limit = _to_int(
        os.getenv("CHROMACOVER_ORACLE_SWITCH_LIMIT"), s.oracle_switch_limit
    )
    # Parse CORS origins: comma-separated list
    cors_env = os.getenv("CHROMACOVER_CORS_ORIGINS")
    if cors_env:
        s.cors_origins = [o.strip() for o in cors_env.split(",") if o.strip()]
    return s


# Module-level singleton for convenience imports
settings = load_settings()
