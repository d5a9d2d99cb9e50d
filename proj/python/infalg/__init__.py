"""Finite information algebras: axioms, embeddings and conditional independence."""

import json
import os

from ._core import (
    Algebra,
    BoundExceeded,
    InputError,
    InvalidArgument,
    atom_class,
    atoms,
    fixture_names,
    independent,
    is_commutative,
    random_instance,
)
from . import _core

DEFAULT_MAX_CARRIER = 64


def load(source, max_carrier=DEFAULT_MAX_CARRIER):
    """Builds an algebra from a dict, a JSON string or a path to a JSON file."""
    if isinstance(source, dict):
        return _core._load_text(json.dumps(source), max_carrier)
    if isinstance(source, os.PathLike) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        return _core._load_file(os.fspath(source), max_carrier)
    return _core._load_text(source, max_carrier)


def fixture(name):
    return load({"kind": "fixture", "name": name})


def verify(algebra, strict_e4=True):
    return json.loads(_core._verify(algebra, strict_e4))


def embed(algebra, generating="atoms"):
    return json.loads(_core._embed(algebra, generating))


def separoid(lattice, relation="lattice"):
    return json.loads(_core._separoid(lattice, relation))


__all__ = [
    "Algebra",
    "BoundExceeded",
    "InputError",
    "InvalidArgument",
    "atom_class",
    "atoms",
    "embed",
    "fixture",
    "fixture_names",
    "independent",
    "is_commutative",
    "load",
    "random_instance",
    "separoid",
    "verify",
]
