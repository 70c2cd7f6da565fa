import json
from pathlib import Path

import pytest

from hetconv import load_convmix, load_snapshot

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def snapshot_path():
    return FIXTURES / "got-mini"


@pytest.fixture(scope="session")
def corpus(snapshot_path):
    return load_snapshot(snapshot_path)


@pytest.fixture(scope="session")
def benchmark():
    return load_convmix(FIXTURES / "convmix-mini.json")


@pytest.fixture(scope="session")
def planted_conversations():
    return load_convmix(FIXTURES / "supervision-planted.json")


@pytest.fixture(scope="session")
def planted_expectations():
    with open(FIXTURES / "supervision-planted-expected.json", encoding="utf-8") as handle:
        return json.load(handle)


def write_snapshot(root: Path, entities, facts, pages, links):
    """Write a minimal snapshot directory for loader-level tests."""
    root.mkdir(parents=True, exist_ok=True)
    (root / "entities.json").write_text(json.dumps(entities), "utf-8")
    (root / "facts.json").write_text(json.dumps(facts), "utf-8")
    (root / "pages.json").write_text(json.dumps(pages), "utf-8")
    (root / "links.json").write_text(json.dumps(links), "utf-8")
    return root
