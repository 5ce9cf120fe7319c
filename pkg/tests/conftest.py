"""Global pytest configuration and fixtures."""

import pytest
from fastapi.testclient import TestClient

from tests.builders import (
    diamond_graph,
    fourfold_voltage,
    inequivalent_subgraphs,
    paw_subgraph,
    star_subgraph,
)


@pytest.fixture
def diamond():
    """K_4 minus the edge 1-3."""
    return diamond_graph()


@pytest.fixture
def paw():
    return paw_subgraph()


@pytest.fixture
def star():
    return star_subgraph()


@pytest.fixture
def inequivalent_pair():
    return inequivalent_subgraphs()


@pytest.fixture
def fourfold():
    return fourfold_voltage()


@pytest.fixture
def client():
    """FastAPI test client."""
    from app.main import app

    return TestClient(app)
