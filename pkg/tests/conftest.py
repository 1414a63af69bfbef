"""Shared fixtures: a handful of small rings whose structure is pinned in
the tests, plus a deduplicated mini family for loop-style properties."""
import pytest

from hyperlab.core import parse_ring_spec
from hyperlab.harness import RingFamilySpec, enumerate_family


@pytest.fixture(scope="session")
def z8():
    # local ring, identity elements 1 and 3, units are the odds
    return parse_ring_spec("z8:1,3")


@pytest.fixture(scope="session")
def z6a():
    # no identity at all: 2 and 3 are the only multipliers
    return parse_ring_spec("z6:2,3")


@pytest.fixture(scope="session")
def z6u():
    # identity elements 1 and 5, two maximal ideals, not local
    return parse_ring_spec("z6:1,5")


@pytest.fixture(scope="session")
def z7():
    # hyperfield-like: every nonzero element is a unit
    return parse_ring_spec("z7:1,2")


@pytest.fixture(scope="session")
def small_family():
    spec = RingFamilySpec(moduli=(4, 5, 6), phi_sizes=(2,))
    return enumerate_family(spec)
