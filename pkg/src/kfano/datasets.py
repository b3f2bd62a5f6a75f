"""Embedded datasets shipped with the package, checksummed by a manifest."""

import hashlib
import json
from functools import lru_cache
from importlib import resources

from .polytope import Polytope

DATA_FILES = (
    "polytopes.json",
    "fano_catalog.json",
    "singularity_catalog.json",
    "actions.json",
    "scaffolding.json",
    "expected.json",
)


class ChecksumError(RuntimeError):
    pass


def _read_bytes(name):
    return resources.files("kfano.data").joinpath(name).read_bytes()


def sha256(name):
    return hashlib.sha256(_read_bytes(name)).hexdigest()


def manifest():
    return json.loads(_read_bytes("MANIFEST.json"))


def verify_checksums():
    """Compare every data file against the manifest; returns the checked names."""
    recorded = manifest()["sha256"]
    for name in DATA_FILES:
        if recorded.get(name) != sha256(name):
            raise ChecksumError(f"checksum mismatch for {name}")
    return sorted(DATA_FILES)


def write_manifest(path):
    """Regenerate the manifest (maintenance helper)."""
    data = {"version": 1, "sha256": {name: sha256(name) for name in DATA_FILES}}
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


@lru_cache(maxsize=None)
def load(name):
    return json.loads(_read_bytes(name))


def builtin_names():
    return sorted(load("polytopes.json")["polytopes"])


def builtin_polytope(name):
    entries = load("polytopes.json")["polytopes"]
    if name not in entries:
        raise KeyError(f"unknown builtin polytope {name!r}; choose from {', '.join(sorted(entries))}")
    return Polytope.from_dict(entries[name])


def expected(case):
    return load("expected.json")[case]


def group_action(case):
    return load("actions.json")[case]


def fano_rows():
    return load("fano_catalog.json")["rows"]
