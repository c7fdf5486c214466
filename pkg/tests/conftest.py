import time

import pytest


@pytest.fixture(scope="session")
def full_build():
    """One full catalog build (catalog, warnings, seconds) shared across modules."""
    from sphfano.catalog import build_catalog

    warnings = []
    t0 = time.time()
    catalog = build_catalog(warn=warnings.append)
    elapsed = time.time() - t0
    return catalog, warnings, elapsed


@pytest.fixture(scope="session")
def full_catalog(full_build):
    return full_build[0]
