"""Engines that produce Motzkin numbers exactly and modulo an integer.

The Motzkin sequence starts 1, 1, 2, 4, 9, 21, 51, 127, ...  Three
independent evaluation routes are provided so that each can falsify the
others:

``motzkin_exact``
    Term-by-term evaluation of the defining sum
    ``M(n) = sum_k binom(n, 2k) * catalan(k)``.

``motzkin_exact_stream`` / ``iter_motzkin_exact``
    The three-term recurrence
    ``(n + 2) M(n) = (2n + 1) M(n - 1) + 3 (n - 1) M(n - 2)``
    over exact integers.  Every division must leave remainder zero; a nonzero
    remainder signals an implementation bug and raises
    :class:`ExactDivisionError`.

``motzkin_mod_stream``
    The division-free convolution
    ``M(n + 1) = M(n) + sum_{k < n} M(k) M(n - 1 - k)``
    with all arithmetic reduced modulo ``m``.  Because it never divides, it
    is valid for every modulus, including those where ``n + 2`` has no
    inverse.

``cross_validate_engines`` compares the modular stream against the exact
recurrence reduced modulo ``m`` and reports the first disagreement, if any.

Quadratic-cost requests (single large indices, stream lengths) are capped by
a configurable ceiling: the ``ceiling`` keyword, else the environment
variable ``MOTZKINLAB_CEILING``, else 10**5.
"""

import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

DEFAULT_CEILING = 100_000
CEILING_ENV_VAR = "MOTZKINLAB_CEILING"

_INT64_MAX = int(np.iinfo(np.int64).max)


class ResourceLimitError(Exception):
    """A request exceeds the configured index/length ceiling."""


class ExactDivisionError(ArithmeticError):
    """The exact recurrence produced a nonzero remainder (an engine bug)."""


def resolve_ceiling(ceiling: "int | None" = None) -> int:
    """Effective ceiling: explicit argument, else environment, else default."""
    if ceiling is not None:
        if ceiling < 0:
            raise ValueError(f"ceiling must be non-negative, got {ceiling}")
        return ceiling
    raw = os.environ.get(CEILING_ENV_VAR)
    if raw is None:
        return DEFAULT_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{CEILING_ENV_VAR} must be an integer, got {raw!r}"
        ) from None
    if value < 0:
        raise ValueError(f"{CEILING_ENV_VAR} must be non-negative, got {value}")
    return value


def ensure_within_ceiling(requested: int, what: str = "index",
                          ceiling: "int | None" = None) -> None:
    """Raise :class:`ResourceLimitError` when ``requested`` exceeds the ceiling."""
    limit = resolve_ceiling(ceiling)
    if requested > limit:
        raise ResourceLimitError(
            f"{what} {requested} exceeds the ceiling {limit} "
            f"(raise it via the ceiling argument or {CEILING_ENV_VAR})"
        )


def motzkin_exact(n: int, *, ceiling: "int | None" = None) -> int:
    """Return the n-th Motzkin number as an exact integer.

    Evaluates the defining sum ``sum_k binom(n, 2k) * catalan(k)`` term by
    term, advancing the binomial and Catalan factors by exact integer ratios.
    Both ratio updates divide evenly, so no rounding can occur anywhere.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    ensure_within_ceiling(n, "index", ceiling)
    total = 0
    binomial = 1  # binom(n, 2k)
    catalan = 1   # binom(2k, k) // (k + 1)
    for k in range(n // 2 + 1):
        total += binomial * catalan
        even = 2 * k
        binomial = binomial * (n - even) * (n - even - 1) // ((even + 1) * (even + 2))
        catalan = catalan * (2 * (even + 1)) // (k + 2)
    return total


def iter_motzkin_exact() -> Iterator[int]:
    """Yield M(0), M(1), M(2), ... indefinitely via the exact recurrence.

    Needs O(1) state, so it suits long sweeps where materialising the whole
    prefix (hundreds of megabytes at length 10**5) would be wasteful.
    """
    yield 1
    yield 1
    older, newer = 1, 1  # M(n - 2), M(n - 1)
    n = 2
    while True:
        numerator = (2 * n + 1) * newer + 3 * (n - 1) * older
        value, remainder = divmod(numerator, n + 2)
        if remainder:
            raise ExactDivisionError(
                f"recurrence division left remainder {remainder} at index {n}"
            )
        yield value
        older, newer = newer, value
        n += 1


def motzkin_exact_stream(count: int, *, ceiling: "int | None" = None) -> "list[int]":
    """Return ``[M(0), ..., M(count - 1)]`` via the exact recurrence."""
    if count < 1:
        raise ValueError(f"stream length must be at least 1, got {count}")
    ensure_within_ceiling(count, "stream length", ceiling)
    gen = iter_motzkin_exact()
    return [next(gen) for _ in range(count)]


@dataclass(frozen=True)
class ResidueStream:
    """Residues ``M(0) mod m, ..., M(limit - 1) mod m`` for a fixed modulus."""

    modulus: int
    values: "tuple[int, ...]"

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if any(not 0 <= v < self.modulus for v in self.values):
            raise ValueError("residues must lie in [0, modulus)")

    @property
    def limit(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]


def motzkin_mod_stream(modulus: int, count: int, *,
                       ceiling: "int | None" = None) -> ResidueStream:
    """Residues of M(0..count-1) modulo ``modulus`` by the convolution recurrence.

    O(count) memory and O(count**2) multiply-adds.  Moduli whose partial sums
    fit in int64 run on numpy vectors; larger moduli fall back to Python
    integers (same recurrence, much slower).
    """
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    if count < 1:
        raise ValueError(f"stream length must be at least 1, got {count}")
    ensure_within_ceiling(count, "stream length", ceiling)
    if (modulus - 1) ** 2 * (count + 1) <= _INT64_MAX:
        values = _convolution_int64(modulus, count)
    else:
        values = _convolution_bigint(modulus, count)
    return ResidueStream(modulus=modulus, values=tuple(values))


def _convolution_int64(modulus: int, count: int) -> "list[int]":
    vals = np.zeros(count, dtype=np.int64)
    vals[0] = 1
    for n in range(1, count):
        acc = vals[n - 1]
        if n >= 2:
            acc = acc + np.dot(vals[: n - 1], vals[n - 2 :: -1])
        vals[n] = acc % modulus
    return vals.tolist()


def _convolution_bigint(modulus: int, count: int) -> "list[int]":
    vals = [1 % modulus]
    for n in range(1, count):
        head = vals[: n - 1]
        acc = vals[n - 1] + sum(a * b for a, b in zip(head, reversed(head)))
        vals.append(acc % modulus)
    return vals


@dataclass(frozen=True)
class CrossValidationReport:
    """Outcome of comparing the modular engine with the exact one."""

    modulus: int
    checked: int
    first_mismatch: "int | None"

    @property
    def consistent(self) -> bool:
        return self.first_mismatch is None


def cross_validate_engines(modulus: int, count: int, *,
                           ceiling: "int | None" = None) -> CrossValidationReport:
    """Compare the convolution stream with the exact recurrence reduced mod m.

    Disagreements are reported, not raised: a mismatch means one of the two
    engines is wrong, which is exactly what the report exists to surface.
    """
    stream = motzkin_mod_stream(modulus, count, ceiling=ceiling)
    gen = iter_motzkin_exact()
    first = None
    for n in range(count):
        if next(gen) % modulus != stream.values[n]:
            first = n
            break
    return CrossValidationReport(modulus=modulus, checked=count, first_mismatch=first)
