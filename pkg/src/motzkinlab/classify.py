"""Digit-pattern classifiers for Motzkin residues.

Everything here decides residue classes of M(n) from the base-q structure of
the index n alone; no Motzkin number is ever computed.  The classifiers
accept arbitrary-precision indices.
"""

import enum
from dataclasses import dataclass
from typing import NamedTuple


class ValuationDecomposition(NamedTuple):
    """n written as unit * base**exponent with the base fully factored out."""

    unit: int
    exponent: int


def factor_out_base(n: int, base: int) -> ValuationDecomposition:
    """Write ``n = unit * base**exponent`` with ``unit`` not divisible by ``base``.

    Defined for n >= 1 only; every membership predicate below strips its
    additive shift before calling this.
    """
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    if n < 1:
        raise ValueError(f"valuation decomposition needs n >= 1, got {n}")
    unit, exponent = n, 0
    while unit % base == 0:
        unit //= base
        exponent += 1
    return ValuationDecomposition(unit, exponent)


@dataclass(frozen=True)
class SetSpec:
    """The pattern ``(base*i + residue) * base**(exp_step*j + exp_offset) + shift``.

    Members range over i >= 0 and j >= min_j.  ``residue`` must be a nonzero
    residue mod ``base``: with residue 0 the same number would be reachable
    from several j, breaking both the membership witness and exact counting.
    """

    base: int
    residue: int
    exp_step: int
    exp_offset: int
    shift: int = 0
    min_j: int = 0

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be at least 2, got {self.base}")
        if not 1 <= self.residue < self.base:
            raise ValueError(
                f"residue must satisfy 1 <= residue < base, got {self.residue}"
            )
        if self.exp_step < 1:
            raise ValueError(f"exp_step must be at least 1, got {self.exp_step}")
        if self.exp_offset < 0:
            raise ValueError(f"exp_offset must be non-negative, got {self.exp_offset}")
        if self.min_j not in (0, 1):
            raise ValueError(f"min_j must be 0 or 1, got {self.min_j}")

    def member(self, i: int, j: int) -> int:
        """The member with witness (i, j); inverse of :func:`is_in_set`."""
        if i < 0:
            raise ValueError(f"i must be non-negative, got {i}")
        if j < self.min_j:
            raise ValueError(f"j must be at least {self.min_j}, got {j}")
        scale = self.base ** (self.exp_step * j + self.exp_offset)
        return (self.base * i + self.residue) * scale + self.shift


def is_in_set(n: int, spec: SetSpec) -> "tuple[int, int] | None":
    """Witness (i, j) with ``spec.member(i, j) == n``, or None.

    Witnesses are unique: stripping the shift leaves a number whose
    base-power decomposition pins down both i and j.
    """
    shifted = n - spec.shift
    if shifted <= 0:
        return None
    unit, exponent = factor_out_base(shifted, spec.base)
    if unit % spec.base != spec.residue:
        return None
    if exponent < spec.exp_step * spec.min_j + spec.exp_offset:
        return None
    if (exponent - spec.exp_offset) % spec.exp_step != 0:
        return None
    i = (unit - spec.residue) // spec.base
    j = (exponent - spec.exp_offset) // spec.exp_step
    return i, j


class Mod8Kind(enum.Enum):
    """Residue class of a Motzkin number mod 8.

    The even residue, when there is one, is known exactly; odd Motzkin
    numbers are reported as ODD without naming the odd residue.
    """

    ODD = "odd"
    RESIDUE_2 = "2"
    RESIDUE_4 = "4"
    RESIDUE_6 = "6"

    @property
    def even_residue(self) -> "int | None":
        """2, 4 or 6 for the even kinds, None for ODD."""
        return None if self is Mod8Kind.ODD else int(self.value)


class Mod8Witness(NamedTuple):
    """Solution of ``n + delta = (4*i + eps) * 4**(j + 1)``."""

    eps: int    # 1 or 3, residue mod 4 of the odd unit of n + delta
    delta: int  # 1 or 2
    i: int
    j: int


@dataclass(frozen=True)
class Mod8Classification:
    """Outcome of :func:`classify_mod8` with its witness data."""

    kind: Mod8Kind
    witness: "Mod8Witness | None" = None
    ones_count: "int | None" = None  # one bits of 4*i + eps - 1; parity picks 2 vs 6

    def __post_init__(self) -> None:
        if (self.witness is None) != (self.kind is Mod8Kind.ODD):
            raise ValueError("witness must be present exactly for even kinds")
        two_or_six = self.kind in (Mod8Kind.RESIDUE_2, Mod8Kind.RESIDUE_6)
        if (self.ones_count is None) == two_or_six:
            raise ValueError("ones_count must be present exactly for kinds 2 and 6")
        if self.ones_count is not None:
            expected = Mod8Kind.RESIDUE_2 if self.ones_count % 2 == 0 else Mod8Kind.RESIDUE_6
            if self.kind is not expected:
                raise ValueError("ones_count parity disagrees with the kind")

    @property
    def is_even(self) -> bool:
        return self.kind is not Mod8Kind.ODD


# The four disjoint index families of even Motzkin numbers, keyed by
# (eps, delta): n = (4*i + eps) * 4**(j + 1) - delta.
MOD8_CLASS_SPECS: "dict[tuple[int, int], SetSpec]" = {
    (eps, delta): SetSpec(base=4, residue=eps, exp_step=1, exp_offset=1, shift=-delta)
    for eps in (1, 3)
    for delta in (1, 2)
}


def classify_mod8(n: int) -> Mod8Classification:
    """Residue class of M(n) mod 8, decided from n alone.

    M(n) is even exactly when ``n + delta = (4*i + eps) * 4**(j + 1)`` for one
    of the four choices eps in {1, 3}, delta in {1, 2}; the four index
    families are pairwise disjoint.  Choices (1, 1) and (3, 2) force
    M(n) = 4 mod 8; the other two give M(n) = 4*y + 2 mod 8, where y counts
    the one bits of ``4*i + eps - 1``, so y's parity separates 2 from 6.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    match = None
    for delta in (1, 2):
        unit, exponent = factor_out_base(n + delta, 4)
        if exponent >= 1 and unit % 2 == 1:
            assert match is None, f"two (eps, delta) witnesses for n={n}"
            eps = unit % 4
            witness = Mod8Witness(eps=eps, delta=delta, i=(unit - eps) // 4,
                                  j=exponent - 1)
            match = (witness, unit)
    if match is None:
        return Mod8Classification(Mod8Kind.ODD)
    witness, unit = match
    if (witness.eps, witness.delta) in ((1, 1), (3, 2)):
        return Mod8Classification(Mod8Kind.RESIDUE_4, witness)
    ones = (unit - 1).bit_count()
    kind = Mod8Kind.RESIDUE_2 if ones % 2 == 0 else Mod8Kind.RESIDUE_6
    return Mod8Classification(kind, witness, ones)


def is_t01(n: int) -> bool:
    """True when every base-3 digit of n is 0 or 1.  0 qualifies."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    while n:
        if n % 3 == 2:
            return False
        n //= 3
    return True


def classify_mod3(n: int) -> int:
    """M(n) mod 3, decided from the base-3 shape of n.

    The residue is 1 when n/3 or (n + 2)/3 is a base-3 zero-one number, 2
    when (n + 1)/3 is one, and 0 otherwise.  The three cases each force a
    distinct value of n mod 3, so they are mutually exclusive by
    construction.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    rem = n % 3
    if rem == 0:
        return 1 if is_t01(n // 3) else 0
    if rem == 2:
        return 2 if is_t01((n + 1) // 3) else 0
    return 1 if is_t01((n + 2) // 3) else 0


# The four disjoint index families with M(n) divisible by 5.  Forms 2 and 3
# carry exponent 2j - 1 with j >= 1; the specs encode
# it as 2j' + 1 with j' >= 0, and classify_div5 shifts the witness back.
DIV5_FORM_SPECS: "tuple[SetSpec, ...]" = (
    SetSpec(base=5, residue=1, exp_step=2, exp_offset=0, shift=-2, min_j=1),
    SetSpec(base=5, residue=2, exp_step=2, exp_offset=1, shift=-1, min_j=0),
    SetSpec(base=5, residue=3, exp_step=2, exp_offset=1, shift=-2, min_j=0),
    SetSpec(base=5, residue=4, exp_step=2, exp_offset=0, shift=-1, min_j=1),
)


class Div5Witness(NamedTuple):
    i: int
    j: int  # canonical indexing: exponent 2j (forms 1, 4) or 2j - 1 (forms 2, 3)


@dataclass(frozen=True)
class Div5Classification:
    """Which of the four divisible-by-5 index forms n matches, if any."""

    form: "int | None" = None
    witness: "Div5Witness | None" = None

    def __post_init__(self) -> None:
        if (self.form is None) != (self.witness is None):
            raise ValueError("form and witness must be present together")
        if self.form is not None and self.form not in (1, 2, 3, 4):
            raise ValueError(f"form must be in 1..4, got {self.form}")

    @property
    def divisible(self) -> bool:
        return self.form is not None

    def member(self) -> int:
        """Reconstruct n from the stored form and witness."""
        if self.form is None or self.witness is None:
            raise ValueError("no witness stored")
        i, j = self.witness
        if self.form == 1:
            return (5 * i + 1) * 5 ** (2 * j) - 2
        if self.form == 2:
            return (5 * i + 2) * 5 ** (2 * j - 1) - 1
        if self.form == 3:
            return (5 * i + 3) * 5 ** (2 * j - 1) - 2
        return (5 * i + 4) * 5 ** (2 * j) - 1


def classify_div5(n: int) -> Div5Classification:
    """Whether 5 divides M(n), with the matching index form and witness.

    5 | M(n) exactly when n is ``(5i+1)*5**(2j) - 2``, ``(5i+2)*5**(2j-1) - 1``,
    ``(5i+3)*5**(2j-1) - 2`` or ``(5i+4)*5**(2j) - 1`` with i >= 0, j >= 1.
    The four families are pairwise disjoint; witnesses use this indexing.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    found = None
    for form, spec in enumerate(DIV5_FORM_SPECS, start=1):
        hit = is_in_set(n, spec)
        if hit is not None:
            assert found is None, f"two divisibility forms for n={n}"
            i, j = hit
            if spec.exp_offset == 1:  # stored exponent 2j' + 1 is canonical 2j - 1
                j += 1
            found = Div5Classification(form=form, witness=Div5Witness(i=i, j=j))
    return found if found is not None else Div5Classification()
