"""Densities of Motzkin residue classes: exact limits, exact counts, reports.

Three kinds of answers live here, deliberately kept independent of each
other so they can cross-check:

* closed-form limit densities as exact rationals (:func:`closed_density`,
  :func:`density_table`),
* exact member counts below a finite horizon (:func:`count_set_exact`,
  :func:`count_t01_upto`), with a proved error bound against the limit
  (:func:`count_error_bound`),
* empirical counts obtained by streaming every index through the digit
  kernels (:func:`empirical_density`), plus the one route that really
  computes Motzkin residues (:func:`empirical_residue_distribution`).
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import bulk
from .classify import DIV5_FORM_SPECS, MOD8_CLASS_SPECS, SetSpec
from .engines import motzkin_mod_stream

_CHUNK = 1 << 20


def closed_density(base: int, exp_step: int, exp_offset: int,
                   min_j: int = 0) -> Fraction:
    """Natural density of ``{(base*i + residue) * base**(exp_step*j + exp_offset)}``.

    The residue value does not matter as long as it is nonzero mod base: the
    layer at exponent e holds a base**-(e+1) share of all integers, layers
    are disjoint, and summing the geometric series over admissible j gives

        base**exp_step / (base**(start + 1) * (base**exp_step - 1))

    with ``start = exp_offset + exp_step*min_j`` the smallest exponent.
    Additive shifts never change a density, so none appears here.
    """
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    if exp_step < 1:
        raise ValueError(f"exp_step must be at least 1, got {exp_step}")
    if exp_offset < 0:
        raise ValueError(f"exp_offset must be non-negative, got {exp_offset}")
    if min_j not in (0, 1):
        raise ValueError(f"min_j must be 0 or 1, got {min_j}")
    start = exp_offset + exp_step * min_j
    return Fraction(base ** exp_step, base ** (start + 1) * (base ** exp_step - 1))


def set_density(spec: SetSpec) -> Fraction:
    """Closed-form density of the members of ``spec``."""
    return closed_density(spec.base, spec.exp_step, spec.exp_offset, spec.min_j)


def _count_members_at_most(bound: int, spec: SetSpec) -> int:
    """Members of ``spec`` (over all i, j, sign unrestricted) that are <= bound."""
    shifted = bound - spec.shift
    if shifted <= 0:
        return 0
    total = 0
    power = spec.base ** (spec.exp_step * spec.min_j + spec.exp_offset)
    step_factor = spec.base ** spec.exp_step
    while power <= shifted:
        layer = (shifted // power - spec.residue) // spec.base + 1
        if layer > 0:
            total += layer
        power *= step_factor
    return total


def count_set_exact(n_max: int, spec: SetSpec) -> int:
    """Exact number of members n of ``spec`` with 0 <= n <= n_max.

    Per admissible exponent e, the members are (base*i + residue)*base**e
    + shift with i >= 0, so each exponent layer contributes a single floor
    count.  Layers never overlap (the unit is nonzero mod base), so the
    layer counts add up exactly.  A negative shift can push a few low-i
    members below zero; subtracting the count at -1 removes them.
    """
    if n_max < 0:
        return 0
    total = _count_members_at_most(n_max, spec)
    if spec.shift < 0:
        total -= _count_members_at_most(-1, spec)
    return total


def _floor_log(value: int, base: int) -> int:
    """floor(log_base(value)) for value >= 1, by exact integer powers."""
    log = 0
    power = base
    while power <= value:
        power *= base
        log += 1
    return log


def _truncation_index(n_max: int, spec: SetSpec) -> int:
    """Largest admissible j index at horizon n_max, floored at -1."""
    shifted = max(n_max - spec.shift, 1)
    log = _floor_log(shifted, spec.base)
    return max((log - spec.exp_offset - 1) // spec.exp_step, -1)


def _layer_count(n_max: int, spec: SetSpec) -> int:
    """Number of exponent layers that contribute to count_set_exact."""
    shifted = n_max - spec.shift
    if shifted <= 0:
        return 0
    layers = 0
    power = spec.base ** (spec.exp_step * spec.min_j + spec.exp_offset)
    step_factor = spec.base ** spec.exp_step
    while power <= shifted:
        layers += 1
        power *= step_factor
    return layers


def count_error_bound(n_max: int, spec: SetSpec) -> Fraction:
    """Proved bound on ``|count_set_exact(n_max, spec) - n_max * density|``.

    Budget: each of the at most U + 2 exponent layers costs at most 1 of
    rounding error, truncating the geometric tail costs less than 1, and
    moving the horizon by the shift costs at most |shift|.  The expression
    below rounds that up; the trailing term only kicks in for shifts at
    least base**(smallest exponent), so it vanishes for every classifier
    spec.  The tests check the bound against brute-force counts.
    """
    trunc = _truncation_index(n_max, spec)
    smallest_exponent = spec.exp_step * spec.min_j + spec.exp_offset
    return (
        2 * (trunc + 2)
        + Fraction(spec.residue * (trunc + 1), spec.base)
        + spec.base ** smallest_exponent
        + max(0, abs(spec.shift) + 1 - spec.base ** smallest_exponent)
    )


def count_t01_upto(n_max: int) -> int:
    """How many n with 0 <= n <= n_max have only base-3 digits 0 and 1.

    Digit walk from the most significant base-3 digit of n_max: while the
    prefix stays tight, a digit d contributes min(d, 2) free-tail choices
    times 2**position; the walk dies at the first digit 2 (no zero-one
    number can stay tight past it) and otherwise counts n_max itself.
    """
    if n_max < 0:
        return 0
    digits = []
    value = n_max
    while value:
        digits.append(value % 3)
        value //= 3
    count = 0
    for position in range(len(digits) - 1, -1, -1):
        digit = digits[position]
        if digit >= 2:
            count += 2 << position
            return count
        count += digit << position
    return count + 1  # n_max itself is a zero-one number


def _t01_ceiling(n_max: int) -> int:
    """2**(floor(log3(n_max)) + 1), the classic cap on count_t01_upto."""
    return 2 << _floor_log(max(n_max, 1), 3)


# The exact limit densities, stated outright.  The test suite re-derives
# every row from closed_density and the class structure.
_DENSITY_TABLE: "tuple[tuple[str, Fraction], ...]" = (
    ("even", Fraction(1, 3)),
    ("eps1_delta1", Fraction(1, 12)),
    ("eps1_delta2", Fraction(1, 12)),
    ("eps3_delta1", Fraction(1, 12)),
    ("eps3_delta2", Fraction(1, 12)),
    ("mod8=4", Fraction(1, 6)),
    ("mod8=2", Fraction(1, 12)),
    ("mod8=6", Fraction(1, 12)),
    ("mod4=2", Fraction(1, 6)),
    ("mod3=0", Fraction(1, 1)),
    ("mod3=1", Fraction(0, 1)),
    ("mod3=2", Fraction(0, 1)),
    ("div5", Fraction(1, 10)),
    ("div5_form1", Fraction(1, 120)),
    ("div5_form2", Fraction(1, 24)),
    ("div5_form3", Fraction(1, 24)),
    ("div5_form4", Fraction(1, 120)),
    ("t01", Fraction(0, 1)),
)

_EPS_DELTA_LABELS = {
    "eps1_delta1": (1, 1),
    "eps1_delta2": (1, 2),
    "eps3_delta1": (3, 1),
    "eps3_delta2": (3, 2),
}

SELECTORS: "tuple[str, ...]" = tuple(label for label, _ in _DENSITY_TABLE)


def density_table() -> "list[tuple[str, Fraction]]":
    """All class labels with their exact limit densities."""
    return list(_DENSITY_TABLE)


def density_limit(selector) -> Fraction:
    """Exact limit density for a class label or an arbitrary SetSpec."""
    if isinstance(selector, SetSpec):
        return set_density(selector)
    for label, value in _DENSITY_TABLE:
        if label == selector:
            return value
    raise ValueError(f"unknown class selector {selector!r}")


def _spec_label(spec: SetSpec) -> str:
    return (
        f"set(base={spec.base} residue={spec.residue} exp_step={spec.exp_step}"
        f" exp_offset={spec.exp_offset} shift={spec.shift} min_j={spec.min_j})"
    )


def _chunk_counter(selector):
    """Per-chunk counting callable for a selector; raises on unknown labels."""
    if isinstance(selector, SetSpec):
        return lambda arr: int(bulk.in_set_mask(arr, selector).sum())
    if selector == "even":
        return lambda arr: int((bulk.mod8_kind_codes(arr) != bulk.ODD_CODE).sum())
    if selector in ("mod8=2", "mod8=4", "mod8=6"):
        code = int(selector[-1])
        return lambda arr: int((bulk.mod8_kind_codes(arr) == code).sum())
    if selector == "mod4=2":
        def count(arr):
            codes = bulk.mod8_kind_codes(arr)
            return int(((codes == 2) | (codes == 6)).sum())
        return count
    if selector in ("mod3=0", "mod3=1", "mod3=2"):
        value = int(selector[-1])
        return lambda arr: int((bulk.mod3_values(arr) == value).sum())
    if selector == "div5":
        return lambda arr: int((bulk.div5_form_codes(arr) != 0).sum())
    if selector in ("div5_form1", "div5_form2", "div5_form3", "div5_form4"):
        form = int(selector[-1])
        return lambda arr: int((bulk.div5_form_codes(arr) == form).sum())
    if selector in _EPS_DELTA_LABELS:
        spec = MOD8_CLASS_SPECS[_EPS_DELTA_LABELS[selector]]
        return lambda arr: int(bulk.in_set_mask(arr, spec).sum())
    if selector == "t01":
        return lambda arr: int(bulk.t01_mask(arr).sum())
    raise ValueError(f"unknown class selector {selector!r}")


def count_class_in_range(selector, lo: int, hi: int) -> int:
    """Class members with lo <= n < hi, streamed through the digit kernels."""
    if not 0 <= lo <= hi:
        raise ValueError(f"need 0 <= lo <= hi, got [{lo}, {hi})")
    if hi > bulk.MAX_INDEX:
        raise ValueError(f"horizon must be at most {bulk.MAX_INDEX}")
    counter = _chunk_counter(selector)
    total = 0
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        total += counter(np.arange(start, stop, dtype=np.int64))
    return total


def _report_error_bound(selector, horizon: int) -> "Fraction | None":
    """Proved cap on |observed_ratio - limit| for the selectors that have one."""
    n_max = horizon - 1
    if isinstance(selector, SetSpec):
        return count_error_bound(n_max, selector) / horizon
    spec_union = {
        "even": list(MOD8_CLASS_SPECS.values()),
        "mod8=4": [MOD8_CLASS_SPECS[(1, 1)], MOD8_CLASS_SPECS[(3, 2)]],
        "mod4=2": [MOD8_CLASS_SPECS[(1, 2)], MOD8_CLASS_SPECS[(3, 1)]],
        "div5": list(DIV5_FORM_SPECS),
        "div5_form1": [DIV5_FORM_SPECS[0]],
        "div5_form2": [DIV5_FORM_SPECS[1]],
        "div5_form3": [DIV5_FORM_SPECS[2]],
        "div5_form4": [DIV5_FORM_SPECS[3]],
    }
    if selector in _EPS_DELTA_LABELS:
        spec_union[selector] = [MOD8_CLASS_SPECS[_EPS_DELTA_LABELS[selector]]]
    if selector in spec_union:
        total = sum(count_error_bound(n_max, spec) for spec in spec_union[selector])
        return Fraction(total) / horizon
    if selector in ("mod8=2", "mod8=6"):
        # Half the (1,2)+(3,1) population, give or take 1/2 per exponent
        # layer: popcount parity is balanced within 1 on every prefix of i.
        specs = [MOD8_CLASS_SPECS[(1, 2)], MOD8_CLASS_SPECS[(3, 1)]]
        half = sum(count_error_bound(n_max, spec) for spec in specs) / 2
        slack = Fraction(sum(_layer_count(n_max, spec) for spec in specs), 2)
        return (half + slack) / horizon
    if selector == "t01":
        return Fraction(_t01_ceiling(n_max), horizon)
    if selector in ("mod3=1", "mod3=2"):
        return Fraction(2 * _t01_ceiling(n_max), horizon)
    if selector == "mod3=0":
        return Fraction(3 * _t01_ceiling(n_max), horizon)
    return None


@dataclass(frozen=True)
class DensityReport:
    """Observed count of a class below a horizon, against its exact limit."""

    label: str
    limit_value: Fraction
    horizon: int
    observed_count: int
    error_bound: "float | None" = None

    def __post_init__(self) -> None:
        if self.horizon < 1:
            raise ValueError(f"horizon must be at least 1, got {self.horizon}")
        if not 0 <= self.observed_count <= self.horizon:
            raise ValueError("observed_count must lie in [0, horizon]")

    @property
    def observed_ratio(self) -> float:
        return self.observed_count / self.horizon

    @property
    def abs_discrepancy(self) -> float:
        return float(abs(Fraction(self.observed_count, self.horizon) - self.limit_value))


def empirical_density(selector, horizon: int, *, parts: int = 1) -> DensityReport:
    """Count class members among n < horizon and report against the limit.

    Every index streams through the digit kernels; no Motzkin number is
    computed, so horizons far beyond the engine ceilings are fine.  ``parts``
    splits [0, horizon) into consecutive ranges counted independently and
    summed; counts are integers, so any partition yields the identical
    report.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1, got {horizon}")
    if parts < 1:
        raise ValueError(f"parts must be at least 1, got {parts}")
    limit_value = density_limit(selector)
    label = _spec_label(selector) if isinstance(selector, SetSpec) else selector
    splits = [horizon * part // parts for part in range(parts + 1)]
    count = sum(
        count_class_in_range(selector, lo, hi)
        for lo, hi in zip(splits, splits[1:])
    )
    bound = _report_error_bound(selector, horizon)
    return DensityReport(
        label=label,
        limit_value=limit_value,
        horizon=horizon,
        observed_count=count,
        error_bound=None if bound is None else float(bound),
    )


def empirical_residue_distribution(modulus: int, horizon: int, *,
                                   ceiling: "int | None" = None,
                                   ) -> "list[tuple[int, int, float]]":
    """(residue, count, ratio) for M(n) mod modulus over n < horizon.

    Unlike the digit-kernel paths this really computes Motzkin residues, via
    the convolution engine, so the engine ceiling applies.
    """
    stream = motzkin_mod_stream(modulus, horizon, ceiling=ceiling)
    counts = [0] * modulus
    for value in stream.values:
        counts[value] += 1
    return [(residue, count, count / horizon) for residue, count in enumerate(counts)]
