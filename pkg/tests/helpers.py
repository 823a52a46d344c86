"""Shared test helpers: independent oracles and random-object builders.

The product oracles here deliberately avoid the bitmask arithmetic of the
library: blades are ordered index strings, multiplied by concatenation and
bubble-sorted with explicit sign tracking.  They stay independent of the
code paths they check.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from cliffordlab import Multivector, Signature, blade_indices, mask_from_indices


def bubble_blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Oracle for the Clifford product of two blades.

    Concatenates the generator strings, bubble-sorts adjacent pairs with a
    sign flip per swap, and contracts adjacent equal generators to eps_i.
    """
    word = list(blade_indices(a)) + list(blade_indices(b))
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(word):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
            elif word[i] == word[i + 1]:
                sign *= sig.eps(word[i])
                del word[i : i + 2]
                changed = True
            else:
                i += 1
    return sign, mask_from_indices(word)


def bubble_wedge(a: int, b: int) -> tuple[int, int]:
    """Oracle for the exterior product: same swap count, no metric, zero on
    repeated generators (signalled by sign 0)."""
    word = list(blade_indices(a)) + list(blade_indices(b))
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(word):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
            elif word[i] == word[i + 1]:
                return 0, 0
            else:
                i += 1
    return sign, mask_from_indices(word)


def random_multivector(sig: Signature, rng: Random, max_terms: int = 4) -> Multivector:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mask = rng.randrange(1 << sig.n)
        coeff = Fraction(rng.randint(-8, 8), rng.randint(1, 6))
        if coeff:
            terms[mask] = terms.get(mask, Fraction(0)) + coeff
    return Multivector(sig, terms)


def all_signatures(max_dim: int) -> list[Signature]:
    return [Signature(p, n - p) for n in range(max_dim + 1) for p in range(n + 1)]


def coefficient_matrix(vectors: list[Multivector], sig: Signature) -> list[list[Fraction]]:
    """Rows of blade coordinates, for rank oracles."""
    size = 1 << sig.n
    return [[v.coeff(m) for m in range(size)] for v in vectors]
