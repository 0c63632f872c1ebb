"""Shared fixtures and helpers for the sncsym tests."""

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sncsym import combinat as sc  # noqa: E402
from sncsym.algebra import SymbolicElement  # noqa: E402
from sncsym.bases import Basis  # noqa: E402
from sncsym.notation import parse_index, parse_superpartition  # noqa: E402
from sncsym.superpartition import superpartitions  # noqa: E402


def idx(text):
    return parse_index(text)


def sp(text):
    return parse_superpartition(text)


def el(basis, text, coeff=1):
    return SymbolicElement.of(basis, idx(text), coeff)


def small_indices(max_total=3):
    result = []
    for total in range(max_total + 1):
        for m in range(total + 1):
            result.extend(sc.set_superpartitions(total - m, m))
    return result


def small_shapes(max_degree=3):
    result = []
    for n in range(max_degree + 1):
        for m in range(n + 2):
            result.extend(superpartitions(n, m))
    return result


indices = st.sampled_from(small_indices(3))
shapes = st.sampled_from(small_shapes(3))
classical = st.sampled_from([Basis.M, Basis.P, Basis.E, Basis.H])


@pytest.fixture
def running_example():
    """({0},{0,1},{2})"""
    return idx("({0},{0,1},{2})")


@pytest.fixture
def clean_env(monkeypatch):
    for key in ("SNCSYM_CONFIG", "SNCSYM_EXTRA_VARS", "SNCSYM_MAX_DEGREE", "SNCSYM_FORMAT",
                "SNCSYM_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
