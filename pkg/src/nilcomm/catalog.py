"""Packaged reference data: the commutative-triple catalogue and unit multiplication tables."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

__all__ = ["load_catalog", "load_multiplication_tables"]


def _load(name: str) -> dict:
    return json.loads(resources.files("nilcomm").joinpath("data", name).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def load_catalog() -> tuple[dict, ...]:
    """The eight catalogued commutative triples, in order.

    Only entries whose ``case`` is not ``None`` are backed by computation in
    :mod:`nilcomm.classifier`; the rest are documentation.
    """
    return tuple(_load("catalog.json")["items"])


def load_multiplication_tables() -> dict:
    """Signed-unit product tables for quaternions and octonions (row times column)."""
    return _load("multiplication_tables.json")
