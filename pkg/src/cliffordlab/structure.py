"""Signature-level structure theory for Cl(p,q).

Radon-Hurwitz numbers, the simple/semisimple and base-field classification,
construction of a canonical primitive idempotent, and the seven-part
structure record that the `clidata` query returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, TYPE_CHECKING

from .core import (
    Multivector,
    Signature,
    blade_square_sign,
    clifford_mul,
    commutation_sign,
)

if TYPE_CHECKING:  # circular at runtime: groups builds on these types
    from .groups import GroupElement

FIELD_REAL = "real"
FIELD_COMPLEX = "complex"
FIELD_QUATERNIONIC = "quaternionic"

_FIELD_DIM = {FIELD_REAL: 1, FIELD_COMPLEX: 2, FIELD_QUATERNIONIC: 4}

_RH_BASE = (0, 1, 2, 2, 3, 3, 3, 3)


def radon_hurwitz(i: int) -> int:
    """The Radon-Hurwitz number r_i, extended to all integers.

    Defined by r_0=0, r_1=1, r_2=r_3=2, r_4=...=r_7=3 together with the
    period-8 recursion r_{i+8} = r_i + 4, which also runs downward (so e.g.
    r_{-3} = r_5 - 4 = -1).
    """
    return _RH_BASE[i % 8] + 4 * (i // 8)


class AlgebraClass(NamedTuple):
    """Coarse classification of Cl(p,q) as a matrix algebra."""

    field_kind: str  # real | complex | quaternionic, for K = f Cl f
    simple: bool
    k: int  # number of idempotent factors, q - r_{q-p}
    matrix_size: int  # N: 2^k if simple, 2^(k-1) per block if semisimple

    @property
    def dim_k(self) -> int:
        return _FIELD_DIM[self.field_kind]

    @property
    def blocks(self) -> int:
        return 1 if self.simple else 2


def classify_algebra(sig: Signature) -> AlgebraClass:
    """Field kind, simplicity, idempotent count k, and matrix size N.

    The residue p-q mod 8 decides the field (0,1,2 -> R; 3,7 -> C;
    4,5,6 -> H) and p-q = 1 mod 4 decides semisimplicity, where the algebra
    splits into two blocks of size 2^(k-1).
    """
    d = sig.p - sig.q
    residue = d % 8
    if residue in (0, 1, 2):
        field = FIELD_REAL
    elif residue in (3, 7):
        field = FIELD_COMPLEX
    else:
        field = FIELD_QUATERNIONIC
    simple = d % 4 != 1
    k = sig.q - radon_hurwitz(sig.q - sig.p)
    size = 1 << k if simple else 1 << (k - 1)
    return AlgebraClass(field, simple, k, size)


@dataclass(frozen=True)
class IdempotentFactorization:
    """A primitive idempotent as a product of factors (1 + sign*e_T)/2.

    The generator blades pairwise commute, each squares to +1, and no
    product of a subset equals (plus or minus) another generator, so the
    expanded product has exactly 2^k distinct blades.
    """

    sig: Signature
    generators: tuple[int, ...]  # blade masks
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.generators) != len(self.signs):
            raise ValueError("one sign per generator required")
        for s in self.signs:
            if s not in (1, -1):
                raise ValueError(f"signs must be +-1, got {s}")
        for i, g in enumerate(self.generators):
            if blade_square_sign(g, self.sig) != 1:
                raise ValueError(f"generator mask {g} does not square to +1")
            for h in self.generators[:i]:
                if commutation_sign(g, h) != 1:
                    raise ValueError(f"generator masks {g} and {h} anticommute")
        if len(self.group_masks()) != 1 << self.k:
            raise ValueError("generators are not independent")

    @property
    def k(self) -> int:
        return len(self.generators)

    def group_masks(self) -> frozenset[int]:
        """XOR-span of the generator masks: the blade support of f."""
        span = {0}
        for g in self.generators:
            span |= {m ^ g for m in span}
        return frozenset(span)

    def expand(self) -> Multivector:
        """Multiply the factors out into an explicit multivector."""
        one = Multivector.one(self.sig)
        half = Fraction(1, 2)
        factors = [
            (one + Multivector.blade(self.sig, g, s)) * half
            for g, s in zip(self.generators, self.signs)
        ]
        return reduce(clifford_mul, factors, one)


def centralizer_masks(sig: Signature, generator_masks: tuple[int, ...]) -> list[int]:
    """Blade masks commuting with every given generator, in InvLex order."""
    return [
        m
        for m in sig.blade_masks()
        if all(commutation_sign(m, g) == 1 for g in generator_masks)
    ]


def _field_dimension(sig: Signature, generators: tuple[int, ...]) -> int:
    """dim over R of f Cl f for f built from the given +1-square generators.

    Blades that anticommute with any factor are annihilated by the two-sided
    projection, and surviving blades coincide modulo the factor span, so the
    dimension is |centralizer| / 2^k.
    """
    return len(centralizer_masks(sig, generators)) >> len(generators)


def primitive_idempotent(sig: Signature) -> IdempotentFactorization:
    """Canonical primitive idempotent of Cl(p,q) with all signs +1.

    Scans blades in InvLex order and greedily accepts any blade that
    squares to +1, commutes with everything accepted, and stays independent
    of the accepted span; backtracks when the completed set fails the
    primitivity check dim(f Cl f) = dim K.  Deterministic by construction.
    """
    cls = classify_algebra(sig)
    k = cls.k
    candidates = [m for m in range(1, 1 << sig.n) if blade_square_sign(m, sig) == 1]

    def extend(chosen: list[int], span: set[int], start: int) -> tuple[int, ...] | None:
        if len(chosen) == k:
            if _field_dimension(sig, tuple(chosen)) == cls.dim_k:
                return tuple(chosen)
            return None
        for idx in range(start, len(candidates)):
            m = candidates[idx]
            if m in span:
                continue
            if any(commutation_sign(m, c) != 1 for c in chosen):
                continue
            found = extend(chosen + [m], span | {s ^ m for s in span}, idx + 1)
            if found is not None:
                return found
        return None

    generators = extend([], {0}, 0)
    if generators is None:  # pragma: no cover - a valid set always exists
        raise RuntimeError(f"no primitive idempotent factorization found for {sig}")
    return IdempotentFactorization(sig, generators, (1,) * k)


@dataclass(frozen=True)
class AlgebraData:
    """The seven-part structure record of Cl(p,q).

    Mirrors the classic clidata contract: base field of K = f Cl f, matrix
    size, simplicity, a primitive idempotent, and the three transversals
    that generate spinor and field bases (data5: spans S over R mod f;
    data6: spans K over R mod f; data7: spans S over K mod f).
    """

    sig: Signature
    field_kind: str
    simple: bool
    k: int
    matrix_size: int
    factorization: IdempotentFactorization
    idempotent: Multivector
    data5: tuple["GroupElement", ...]
    data6: tuple["GroupElement", ...]
    data7: tuple["GroupElement", ...]

    def __post_init__(self) -> None:
        if len(self.data5) != len(self.data6) * len(self.data7):
            raise ValueError(
                f"|data5| = {len(self.data5)} != |data6|*|data7| = "
                f"{len(self.data6)}*{len(self.data7)}"
            )

    @property
    def dim_k(self) -> int:
        return _FIELD_DIM[self.field_kind]


def clidata(sig: Signature) -> AlgebraData:
    """Assemble the full structure record for Cl(p,q).

    The transversals come from the vee-group layer: data5 enumerates cosets
    of the idempotent group in the vee group, data6 cosets of the idempotent
    group in the stabilizer, data7 cosets of the stabilizer in the vee group.
    """
    from . import groups  # runtime import; groups depends on these types

    cls = classify_algebra(sig)
    fact = primitive_idempotent(sig)
    f = fact.expand()
    g = groups.vee_group(sig)
    stab = groups.stabilizer(sig, f)
    t = groups.idempotent_group(fact)
    return AlgebraData(
        sig=sig,
        field_kind=cls.field_kind,
        simple=cls.simple,
        k=cls.k,
        matrix_size=cls.matrix_size,
        factorization=fact,
        idempotent=f,
        data5=groups.transversal(t, g),
        data6=groups.transversal(t, stab),
        data7=groups.transversal(stab, g),
    )
