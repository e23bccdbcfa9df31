#!/usr/bin/env python3
"""Reading residues of M(n) off the digits of n, without computing M(n).

Whether M(n) is even, what it is mod 8 when even, what it is mod 3, and
whether 5 divides it are all decided by base-4 / base-3 / base-5 patterns
in n.  Each decision comes with a witness that reconstructs n exactly, so
every claim is checkable on the spot.
"""

from motzkinlab import (
    classify_div5,
    classify_mod3,
    classify_mod8,
    is_t01,
    motzkin_exact,
)

print("Classification vs. the actual residue, first 16 indices:")
print(f"   {'n':>3} {'M(n)':>8}  mod8-class  mod3  5|M(n)")
for n in range(16):
    value = motzkin_exact(n)
    mod8 = classify_mod8(n)
    label = "odd" if not mod8.is_even else str(mod8.kind.even_residue)
    print(f"   {n:>3} {value:>8}  {label:>10}  {classify_mod3(n):>4}"
          f"  {'yes' if classify_div5(n).divisible else 'no':>5}")

print("\nWitnesses pin each even index to a base-4 pattern:")
for n in (2, 3, 11, 62):
    outcome = classify_mod8(n)
    eps, delta, i, j = outcome.witness
    rebuilt = (4 * i + eps) * 4 ** (j + 1) - delta
    parts = f"(4*{i} + {eps}) * 4**{j + 1} - {delta}"
    detail = "" if outcome.ones_count is None else f", one-bits y = {outcome.ones_count}"
    print(f"   n = {n:>3}: M = {outcome.kind.even_residue} mod 8, "
          f"since n = {parts} = {rebuilt}{detail}")

print("\nDivisibility by 5 with index-form witnesses:")
for n in (9, 13, 23, 99, 3124):
    outcome = classify_div5(n)
    if outcome.divisible:
        i, j = outcome.witness
        print(f"   n = {n:>4}: form {outcome.form}, i = {i}, j = {j};"
              f" indeed M(n) % 5 = {motzkin_exact(n) % 5}")
    else:
        print(f"   n = {n:>4}: no form matches; M(n) % 5 = {motzkin_exact(n) % 5}")

print("\nBase-3 zero-one indices drive the mod-3 classes:")
for n in (0, 1, 2, 4, 5, 7, 12):
    marker = "in" if is_t01(n) else "not in"
    print(f"   {n} is {marker} the zero-one set; M({n}) mod 3 = {classify_mod3(n)}")

print("\nThe classifiers take indices far beyond any computable M(n):")
huge = (4 * 10**28 + 3) * 4**7 - 2
outcome = classify_mod8(huge)
print(f"   n = {huge}")
print(f"   M(n) mod 8 = {outcome.kind.even_residue}, witness i = {outcome.witness.i}")
