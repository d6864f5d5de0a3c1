"""Shared instance sweeps and fixtures for the test suite."""

import math
from pathlib import Path

import pytest

from ocycles import InstanceParams, validate_params

DATA_DIR = Path(__file__).parent / "data"

# multisets exercised by the multiset sweeps; sizes 3..6
MULTISET_BATTERY = [(1, 1, 2), (1, 1, 2, 3, 4), (1, 1, 2, 2, 3), (1, 1, 1, 2, 2, 2)]


def kperm_instances(max_n: int = 7) -> list[InstanceParams]:
    """Every proper k-permutation instance with 1 <= s < k < n <= max_n."""
    out = []
    for n in range(3, max_n + 1):
        for k in range(2, n):
            for s in range(1, k):
                out.append(validate_params(n=n, k=k, s=s))
    return out


def fullperm_instances(max_n: int = 7) -> list[InstanceParams]:
    """Full-permutation instances (k = n) in the guaranteed regimes."""
    out = []
    for n in range(3, max_n + 1):
        for s in range(1, n):
            if 2 * s < n or (math.gcd(s, n) == 1 and s <= n - 2):
                out.append(validate_params(n=n, k=n, s=s))
    return out


def multiset_instances() -> list[InstanceParams]:
    """Multiset instances from the battery, small-overlap regime only."""
    out = []
    for m in MULTISET_BATTERY:
        for s in range(1, len(m)):
            if 2 * s < len(m):
                out.append(validate_params(multiset=m, s=s))
    return out


def multiset_coprime_instances() -> list[InstanceParams]:
    """Battery instances guaranteed through the coprime-overlap rule only."""
    out = []
    for m in MULTISET_BATTERY:
        k = len(m)
        for s in range(1, k):
            if 2 * s >= k and math.gcd(s, k) == 1 and s <= k - 2:
                out.append(validate_params(multiset=m, s=s))
    return out


def guaranteed_instances(max_n: int = 7) -> list[InstanceParams]:
    return (
        kperm_instances(max_n)
        + fullperm_instances(max_n)
        + multiset_instances()
        + multiset_coprime_instances()
    )


@pytest.fixture(scope="session")
def perm5_fixture_words() -> list[tuple[int, ...]]:
    """120 permutations of {1..5} arranged in a 3-overlap cycle (known-good)."""
    text = (DATA_DIR / "perm5_s3_cycle.txt").read_text()
    return [tuple(int(c) for c in line) for line in text.split()]
