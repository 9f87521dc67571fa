from __future__ import annotations

import os
from pathlib import Path

import pytest

from bcsample import load_edge_list

FIXTURES = Path(__file__).parent / "fixtures"

# SNAP datasets are not bundled (size/licensing); tests that need them look
# under $BCSAMPLE_DATA_DIR (default <repo>/data) and skip when absent.
DATA_DIR = Path(os.environ.get("BCSAMPLE_DATA_DIR", Path(__file__).parent.parent / "data"))
DATASETS = {
    "oregon1-010331": ("oregon1_010331.txt", 10670, 22002),
    "ego-Facebook": ("facebook_combined.txt", 4039, 88234),
}


def dataset_file(name: str) -> Path | None:
    base, _, _ = DATASETS[name]
    for candidate in (DATA_DIR / base, DATA_DIR / (base + ".gz")):
        if candidate.exists():
            return candidate
    return None


def require_dataset(name: str) -> Path:
    path = dataset_file(name)
    if path is None:
        base = DATASETS[name][0]
        pytest.skip(f"SNAP dataset {name} not present (expected {DATA_DIR / base}; see README)")
    return path


@pytest.fixture(scope="session")
def path3():
    return load_edge_list(FIXTURES / "path3.txt")


@pytest.fixture(scope="session")
def star4():
    return load_edge_list(FIXTURES / "star4.txt")


@pytest.fixture(scope="session")
def cycle4():
    return load_edge_list(FIXTURES / "cycle4.txt")


@pytest.fixture(scope="session")
def random32():
    return load_edge_list(FIXTURES / "random32.txt")


@pytest.fixture(scope="session")
def hub32():
    return load_edge_list(FIXTURES / "hub32.txt")
