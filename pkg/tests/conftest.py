"""Shared fixtures: each certificate runs at most once per test session."""

import pytest

from artgallery.certificates import run_certificate

_RESULTS = {}


@pytest.fixture(scope="session")
def certificate():
    """Session-cached access to certificate runs by name."""

    def get(name):
        if name not in _RESULTS:
            _RESULTS[name] = run_certificate(name)
        return _RESULTS[name]

    return get
