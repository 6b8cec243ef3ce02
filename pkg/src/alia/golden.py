"""Baked-in verification corpora: tables, recipes, normal-form models.

Data files live in the `golden/` package directory, are schema-versioned,
and are integrity-checked against `golden/manifest.json` on first load.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

SCHEMA_VERSION = 1
DATA_DIR = Path(__file__).parent / "golden"
DATA_FILES = ("tables.json", "recipes.json", "chevalley.json", "worked.json")

_cache: dict[str, dict] = {}


class GoldenDataError(RuntimeError):
    pass


def file_sha256(name: str) -> str:
    return hashlib.sha256((DATA_DIR / name).read_bytes()).hexdigest()


def make_manifest() -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "sha256": {name: file_sha256(name) for name in DATA_FILES},
    }


def write_manifest() -> None:
    path = DATA_DIR / "manifest.json"
    path.write_text(json.dumps(make_manifest(), indent=2, sort_keys=True) + "\n")


def check_integrity() -> None:
    path = DATA_DIR / "manifest.json"
    if not path.exists():
        raise GoldenDataError("missing golden manifest")
    manifest = json.loads(path.read_text())
    if manifest.get("schema_version") != SCHEMA_VERSION:
        raise GoldenDataError("golden schema version mismatch")
    for name in DATA_FILES:
        want = manifest["sha256"].get(name)
        got = file_sha256(name)
        if want != got:
            raise GoldenDataError(f"golden checksum failure for {name}")


def load(name: str) -> dict:
    """Load one golden data file (integrity-checked once per process)."""
    if name not in _cache:
        if not _cache:
            check_integrity()
        data = json.loads((DATA_DIR / name).read_text())
        if data.get("schema_version") != SCHEMA_VERSION:
            raise GoldenDataError(f"schema version mismatch in {name}")
        _cache[name] = data
    return _cache[name]


def tables() -> dict:
    return load("tables.json")


def recipes() -> dict:
    return load("recipes.json")


def chevalley_data() -> dict:
    return load("chevalley.json")


def worked() -> dict:
    return load("worked.json")
