"""Shared helpers: catalog groups are built once per session and reused."""

from __future__ import annotations

import pytest

import fusionsys as fs

_cache: dict[str, fs.Group] = {}


def catalog_group(name: str) -> fs.Group:
    if name not in _cache:
        _cache[name] = fs.get_builtin(name).build()
    return _cache[name]


def cyc(degree: int, *cycles) -> fs.Permutation:
    return fs.Permutation.from_cycles(degree, [list(c) for c in cycles])


@pytest.fixture
def s4() -> fs.Group:
    return catalog_group("S4")


@pytest.fixture
def a4() -> fs.Group:
    return catalog_group("A4")


@pytest.fixture
def sl23() -> fs.Group:
    return catalog_group("SL23")


@pytest.fixture
def es27p() -> fs.Group:
    return catalog_group("ES27+")


@pytest.fixture
def wreath() -> fs.Group:
    return catalog_group("C3wrC3")
