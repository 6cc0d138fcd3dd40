"""Shared fixtures.

The multidegree tables are the expensive objects here (size 6 takes a few
seconds), so they are computed once per session and shared by every test
module through the `tables` fixture.
"""

import pytest

from brauerloop.psitable import MdegTable, compute_table

_TABLES: dict[int, MdegTable] = {}


def cached_table(n: int) -> MdegTable:
    if n not in _TABLES:
        _TABLES[n] = compute_table(n)
    return _TABLES[n]


def store_table(table: MdegTable) -> None:
    """Let a test that computed a table from scratch donate it to the cache."""
    _TABLES.setdefault(table.n, table)


@pytest.fixture(scope="session")
def tables():
    return cached_table
