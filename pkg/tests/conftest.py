"""Shared oracles for the test suite.

Both oracles are deliberately naive and independent of the package code:
one evaluates the defining binomial-Catalan sum with stdlib combinatorics,
the other literally enumerates lattice walks.
"""

import math
from functools import lru_cache

import pytest

from motzkinlab.classify import DIV5_FORM_SPECS, MOD8_CLASS_SPECS


def motzkin_defining_sum(n: int) -> int:
    """sum_k binom(n, 2k) * catalan(k), straight off math.comb."""
    return sum(
        math.comb(n, 2 * k) * (math.comb(2 * k, k) // (k + 1))
        for k in range(n // 2 + 1)
    )


def motzkin_path_count(n: int) -> int:
    """Count length-n walks over steps {+1, 0, -1} from 0 to 0 staying >= 0."""

    @lru_cache(maxsize=None)
    def walks(steps: int, height: int) -> int:
        if height < 0:
            return 0
        if steps == 0:
            return 1 if height == 0 else 0
        return (
            walks(steps - 1, height + 1)
            + walks(steps - 1, height)
            + walks(steps - 1, height - 1)
        )

    return walks(n, 0)


@pytest.fixture(scope="session")
def oracle_prefix():
    """M(0..599) via the literal defining sum."""
    return [motzkin_defining_sum(n) for n in range(600)]


@pytest.fixture(scope="session")
def classifier_specs():
    """The eight index-pattern specs behind the mod-8 and mod-5 classifiers."""
    return list(MOD8_CLASS_SPECS.values()) + list(DIV5_FORM_SPECS)
