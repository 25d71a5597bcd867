"""
Pytest configuration and common fixtures for the spectral density tests.
"""

import os
from unittest.mock import patch

import pytest

from src.models import MultiGraph, VoltageGraph


@pytest.fixture(autouse=True)
def quiet_environment():
    """Keep logging at WARNING for every test."""
    with patch.dict(os.environ, {"LOG_LEVEL": "WARNING", "LOG_JSON": ""}):
        yield


@pytest.fixture
def triangle():
    """C_3 with edges in cyclic order."""
    return MultiGraph(vertex_count=3, edges=((0, 1), (1, 2), (2, 0)))


@pytest.fixture
def path3():
    """Path on three vertices 0 - 1 - 2."""
    return MultiGraph(vertex_count=3, edges=((0, 1), (1, 2)))


@pytest.fixture
def star3():
    """K_{1,3} centred at vertex 0."""
    return MultiGraph(vertex_count=4, edges=((0, 1), (0, 2), (0, 3)))


@pytest.fixture
def square():
    """C_4."""
    return MultiGraph(vertex_count=4, edges=((0, 1), (1, 2), (2, 3), (3, 0)))


@pytest.fixture
def single_edge():
    return MultiGraph(vertex_count=2, edges=((0, 1),))


@pytest.fixture
def single_loop():
    return MultiGraph(vertex_count=1, edges=((0, 0),))


@pytest.fixture
def loop_voltage_graph(single_loop):
    """One vertex, one loop with voltage 1: its Z-cover is the integer line."""
    return VoltageGraph(base=single_loop, rank=1, voltages=((1,),))


@pytest.fixture
def torus_voltage_graph():
    """One vertex, two loops with voltages e_1 and e_2: its Z^2-cover is the square grid."""
    base = MultiGraph(vertex_count=1, edges=((0, 0), (0, 0)))
    return VoltageGraph(base=base, rank=2, voltages=((1, 0), (0, 1)))


@pytest.fixture
def graph_file(tmp_path):
    """Write graph text to a temporary file and return its path."""
    def write(text: str, name: str = "graph.g"):
        path = tmp_path / name
        path.write_text(text, encoding="ascii")
        return path
    return write
