"""Vectorized counterparts of the scalar digit classifiers.

These kernels stream int64 index arrays so that density sweeps over tens of
millions of indices stay fast.  Each one mirrors a function in
:mod:`motzkinlab.classify`; the test suite holds them to exact agreement.
Indices must be non-negative and leave headroom for n + 2 in int64.
"""

import numpy as np

from .classify import DIV5_FORM_SPECS, SetSpec

MAX_INDEX = int(np.iinfo(np.int64).max) - 2

ODD_CODE = 1  # mod8_kind_codes marker for "M(n) is odd"


def _checked(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.size:
        if int(arr.min()) < 0:
            raise ValueError("indices must be non-negative")
        if int(arr.max()) > MAX_INDEX:
            raise ValueError(f"indices must be at most {MAX_INDEX}")
    return arr


def factor_out(values: np.ndarray, base: int) -> "tuple[np.ndarray, np.ndarray]":
    """Elementwise (unit, exponent) with unit * base**exponent == value.

    All entries must be >= 1.  Index compaction keeps later passes cheap:
    only a 1/base fraction of entries survives each round.
    """
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    units = values.copy()
    exponents = np.zeros(units.shape, dtype=np.int64)
    live = np.flatnonzero(units % base == 0)
    while live.size:
        units[live] //= base
        exponents[live] += 1
        live = live[units[live] % base == 0]
    return units, exponents


def in_set_mask(values, spec: SetSpec) -> np.ndarray:
    """Boolean mask of membership in ``spec``, matching classify.is_in_set."""
    arr = _checked(values)
    if arr.size and spec.shift < 0 and int(arr.max()) - spec.shift > MAX_INDEX + 2:
        raise ValueError("shifted indices would overflow int64")
    shifted = arr - spec.shift
    positive = shifted > 0
    units, exponents = factor_out(np.where(positive, shifted, 1), spec.base)
    ok = positive.copy()
    ok &= units % spec.base == spec.residue
    ok &= exponents >= spec.exp_step * spec.min_j + spec.exp_offset
    ok &= (exponents - spec.exp_offset) % spec.exp_step == 0
    return ok


def mod8_kind_codes(values) -> np.ndarray:
    """Codes 1 (odd), 2, 4 or 6 (the exact even residue of M(n) mod 8)."""
    arr = _checked(values)
    out = np.full(arr.shape, ODD_CODE, dtype=np.int64)
    claimed = np.zeros(arr.shape, dtype=bool)
    for delta in (1, 2):
        units, exponents = factor_out(arr + delta, 4)
        hit = (exponents >= 1) & (units % 2 == 1)
        assert not (hit & claimed).any(), "overlapping (eps, delta) witnesses"
        claimed |= hit
        eps = units & 3
        gives_four = eps == (1 if delta == 1 else 3)
        ones = np.bitwise_count((units - 1).astype(np.uint64)).astype(np.int64)
        code = np.where(gives_four, 4, np.where(ones % 2 == 0, 2, 6))
        out = np.where(hit, code, out)
    return out


def t01_mask(values) -> np.ndarray:
    """True where every base-3 digit is 0 or 1."""
    arr = _checked(values)
    ok = np.ones(arr.shape, dtype=bool)
    rest = arr.copy()
    live = np.flatnonzero(rest > 0)
    while live.size:
        ok[live] &= rest[live] % 3 != 2
        rest[live] //= 3
        live = live[rest[live] > 0]
    return ok


def mod3_values(values) -> np.ndarray:
    """M(n) mod 3 for every index, as an array over {0, 1, 2}."""
    arr = _checked(values)
    rem = arr % 3
    third = (arr + (3 - rem) % 3) // 3  # n/3, (n+2)/3 or (n+1)/3 by residue
    hit = t01_mask(third)
    return np.where(hit, np.where(rem == 2, 2, 1), 0)


def div5_form_codes(values) -> np.ndarray:
    """0 where 5 does not divide M(n), else the matching form 1..4."""
    arr = _checked(values)
    out = np.zeros(arr.shape, dtype=np.int64)
    for form, spec in enumerate(DIV5_FORM_SPECS, start=1):
        hit = in_set_mask(arr, spec)
        assert not (hit & (out != 0)).any(), "overlapping divisibility forms"
        out[hit] = form
    return out
