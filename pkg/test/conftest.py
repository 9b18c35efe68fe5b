"""
Test configuration for the molkit test suite.
"""

import os
import sys
from pathlib import Path

import numpy as np
import pytest

# Add the parent directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.config.settings import Settings  # noqa: E402
from src.exactla import RationalMatrix  # noqa: E402
from src.finlat import build_lattice, random_product_specs  # noqa: E402
from src.subspaces import FormSpace  # noqa: E402

# Constants for testing
TEST_DIR = Path(__file__).resolve().parent
FIXTURES_DIR = TEST_DIR / "fixtures"
TEST_CONFIG_FILE = FIXTURES_DIR / "test_config.yaml"

# Small fixed corpus: MOLs first, then the non-examples
MOL_SPECS = [
    "bool:1", "bool:2", "bool:3", "mo:1", "mo:2", "mo:3", "mo:4",
    "prod:mo:2,bool:1", "prod:mo:2,mo:2", "prod:mo:3,bool:2",
]
NON_MOL_SPECS = ["o6", "chain:3"]
CORPUS_SEED = 2024


def pytest_configure(config):
    """Register the integration marker."""
    config.addinivalue_line(
        "markers", "integration: end-to-end suites over the lattice corpus and the command line")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test sees the shipped defaults, without MOLKIT_* overrides."""
    for key in list(os.environ):
        if key.startswith("MOLKIT_"):
            monkeypatch.delenv(key, raising=False)
    Settings.reset_instance()
    yield
    Settings.reset_instance()


@pytest.fixture(scope="session")
def mol_corpus():
    """Named finite MOLs."""
    return [(spec, build_lattice(spec)) for spec in MOL_SPECS]


@pytest.fixture(scope="session")
def random_corpus():
    """Twenty random products of Boolean(<=3) and MO_(<=4)."""
    rng = np.random.default_rng(CORPUS_SEED)
    specs = random_product_specs(20, rng)
    return [(spec, build_lattice(spec)) for spec in specs]


@pytest.fixture(scope="session")
def forms():
    """Three distinct positive definite forms on Q^4."""
    return [
        FormSpace.identity(4),
        FormSpace.diagonal([1, 2, 3, 5]),
        FormSpace(RationalMatrix.from_rows(
            [[2, 1, 0, 0], [1, 2, 1, 0], [0, 1, 2, 1], [0, 0, 1, 2]])),
    ]


@pytest.fixture
def rng():
    return np.random.default_rng(0)
