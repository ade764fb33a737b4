"""Test configuration and fixtures for latmat tests."""

import json
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

import pytest

from latmat.lattice import ValuedSet
from latmat.numtheory import HONG_SET, NINE_ELEMENT_SET
from latmat.posets import Poset, build_poset
from latmat.utils.config import Settings, get_settings


@pytest.fixture(autouse=True)
def clear_settings_cache() -> Iterator[None]:
    """Start and finish every test with freshly read settings."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings_env(monkeypatch: pytest.MonkeyPatch) -> Callable[..., Settings]:
    """Set LATMAT_* environment variables and reload the settings."""

    def apply(**values: Any) -> Settings:
        for key, value in values.items():
            monkeypatch.setenv(f"LATMAT_{key.upper()}", str(value))
        get_settings.cache_clear()
        return get_settings()

    return apply


@pytest.fixture
def diamond() -> Poset:
    """Bottom, two incomparable atoms and a top."""
    return build_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def pentagon() -> Poset:
    """The five-element non-modular lattice."""
    return build_poset(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


@pytest.fixture
def vee() -> Poset:
    """A bottom with two maximal elements: a meet semilattice, not a lattice."""
    return build_poset(3, [(0, 1), (0, 2)])


@pytest.fixture
def bowtie() -> Poset:
    """Two minimal elements both below two maximal ones."""
    return build_poset(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def hong_set() -> ValuedSet:
    return ValuedSet.divisor(HONG_SET)


@pytest.fixture
def nine_element_set() -> ValuedSet:
    return ValuedSet.divisor(NINE_ELEMENT_SET)


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], Path]:
    """Write a JSON document into the test's temporary directory."""

    def write(name: str, data: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write
