"""Classification of the automorphism group of the transposition scalar
product, with the five reference tables covering every signature p+q <= 9.

The group label follows the residue of p - q mod 8: orthogonal for
0,1,2, unitary for 3,7, symplectic for 4,5,6, with doubled groups in the
semisimple cases (residues 1 and 5, where the matrix blocks halve).  The
box annotation records where the product coincides with one of the two
classical spinor products: Euclidean signatures carry a single box,
anti-Euclidean ones a double box, rendered as [β-] and [β+] markers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from . import linalg
from .core import (
    Multivector,
    Signature,
    blade_square_sign,
    clifford_mul,
    left_mul_matrix,
    transposition,
)
from .groups import GroupElement, group_inv, vee_group
from .spinor import (
    SpinorBasis,
    SpinorMatrix,
    conjugate_transpose,
    spinor_basis,
    spinor_matrix,
)
from .structure import (
    FIELD_COMPLEX,
    FIELD_QUATERNIONIC,
    FIELD_REAL,
    classify_algebra,
    clidata,
)

BOX_NONE = "none"
BOX_SINGLE = "single"
BOX_DOUBLE = "double"

_FAMILY_BY_FIELD = {FIELD_REAL: "O", FIELD_COMPLEX: "U", FIELD_QUATERNIONIC: "Sp"}
_PRETTY_FAMILY = {"O": "O", "U": "U", "Sp": "Sp", "2O": "²O", "2Sp": "²Sp"}
_BOX_MARKER = {BOX_NONE: "", BOX_SINGLE: "[β-]", BOX_DOUBLE: "[β+]"}


@dataclass(frozen=True)
class GroupLabel:
    """Family, rank and coincidence annotation of an automorphism group."""

    family: str  # O | U | Sp | 2O | 2Sp
    rank: int
    boxes: str = BOX_NONE

    def __str__(self) -> str:
        return f"{self.family}({self.rank})"

    def pretty(self) -> str:
        return f"{_PRETTY_FAMILY[self.family]}({self.rank})"

    def marker(self) -> str:
        return _BOX_MARKER[self.boxes]


@dataclass(frozen=True)
class ClassificationRow:
    sig: Signature
    label: GroupLabel
    k: int
    matrix_ring: str

    def text(self) -> str:
        cell = f"({self.sig.p},{self.sig.q}) {self.label.pretty()}"
        mark = self.label.marker()
        return f"{cell} {mark}" if mark else cell


def _box_annotation(sig: Signature) -> str:
    # published tables leave (0,0) and (0,1) unannotated
    if sig.q == 0 and sig.p > 0:
        return BOX_SINGLE
    if sig.p == 0 and sig.q > 1:
        return BOX_DOUBLE
    return BOX_NONE


def classify_group(sig: Signature) -> GroupLabel:
    """Label of the automorphism group of the transposition product."""
    cls = classify_algebra(sig)
    family = _FAMILY_BY_FIELD[cls.field_kind]
    if not cls.simple:
        family = "2" + family
    return GroupLabel(family, cls.matrix_size, _box_annotation(sig))


def classification_row(sig: Signature) -> ClassificationRow:
    cls = classify_algebra(sig)
    letter = {FIELD_REAL: "R", FIELD_COMPLEX: "C", FIELD_QUATERNIONIC: "H"}[cls.field_kind]
    ring = f"Mat({cls.matrix_size},{letter})"
    if not cls.simple:
        ring = "2*" + ring
    return ClassificationRow(sig, classify_group(sig), cls.k, ring)


# Signatures of the five reference tables, in published order.  Table 1:
# real simple; Table 2: complex; Table 3: quaternionic simple; Table 4:
# doubled real; Table 5: doubled quaternionic.
TABLE_SIGNATURES: dict[int, tuple[tuple[int, int], ...]] = {
    1: (
        (0, 0), (1, 1), (2, 0), (2, 2), (3, 1), (3, 3), (0, 6),
        (4, 2), (5, 3), (1, 7), (0, 8), (4, 4), (8, 0),
    ),
    2: (
        (0, 1), (1, 2), (3, 0), (2, 3), (0, 5), (4, 1), (1, 6), (7, 0),
        (5, 2), (3, 4), (4, 5), (6, 3), (2, 7), (0, 9), (8, 1),
    ),
    3: (
        (0, 2), (0, 4), (4, 0), (1, 3), (2, 4), (6, 0),
        (1, 5), (5, 1), (6, 2), (7, 1), (2, 6), (3, 5),
    ),
    4: (
        (1, 0), (2, 1), (3, 2), (0, 7), (4, 3), (1, 8), (5, 4), (9, 0),
    ),
    5: (
        (0, 3), (1, 4), (5, 0), (2, 5), (6, 1), (3, 6), (7, 2),
    ),
}

# The published cells, (family, rank, boxes) per signature and table.
REFERENCE_TABLES: dict[int, tuple[tuple[tuple[int, int], str, int, str], ...]] = {
    1: (
        ((0, 0), "O", 1, BOX_NONE),
        ((1, 1), "O", 2, BOX_NONE),
        ((2, 0), "O", 2, BOX_SINGLE),
        ((2, 2), "O", 4, BOX_NONE),
        ((3, 1), "O", 4, BOX_NONE),
        ((3, 3), "O", 8, BOX_NONE),
        ((0, 6), "O", 8, BOX_DOUBLE),
        ((4, 2), "O", 8, BOX_NONE),
        ((5, 3), "O", 16, BOX_NONE),
        ((1, 7), "O", 16, BOX_NONE),
        ((0, 8), "O", 16, BOX_DOUBLE),
        ((4, 4), "O", 16, BOX_NONE),
        ((8, 0), "O", 16, BOX_SINGLE),
    ),
    2: (
        ((0, 1), "U", 1, BOX_NONE),
        ((1, 2), "U", 2, BOX_NONE),
        ((3, 0), "U", 2, BOX_SINGLE),
        ((2, 3), "U", 4, BOX_NONE),
        ((0, 5), "U", 4, BOX_DOUBLE),
        ((4, 1), "U", 4, BOX_NONE),
        ((1, 6), "U", 8, BOX_NONE),
        ((7, 0), "U", 8, BOX_SINGLE),
        ((5, 2), "U", 8, BOX_NONE),
        ((3, 4), "U", 8, BOX_NONE),
        ((4, 5), "U", 16, BOX_NONE),
        ((6, 3), "U", 16, BOX_NONE),
        ((2, 7), "U", 16, BOX_NONE),
        ((0, 9), "U", 16, BOX_DOUBLE),
        ((8, 1), "U", 16, BOX_NONE),
    ),
    3: (
        ((0, 2), "Sp", 1, BOX_DOUBLE),
        ((0, 4), "Sp", 2, BOX_DOUBLE),
        ((4, 0), "Sp", 2, BOX_SINGLE),
        ((1, 3), "Sp", 2, BOX_NONE),
        ((2, 4), "Sp", 4, BOX_NONE),
        ((6, 0), "Sp", 4, BOX_SINGLE),
        ((1, 5), "Sp", 4, BOX_NONE),
        ((5, 1), "Sp", 4, BOX_NONE),
        ((6, 2), "Sp", 8, BOX_NONE),
        ((7, 1), "Sp", 8, BOX_NONE),
        ((2, 6), "Sp", 8, BOX_NONE),
        ((3, 5), "Sp", 8, BOX_NONE),
    ),
    4: (
        ((1, 0), "2O", 1, BOX_SINGLE),
        ((2, 1), "2O", 2, BOX_NONE),
        ((3, 2), "2O", 4, BOX_NONE),
        ((0, 7), "2O", 8, BOX_DOUBLE),
        ((4, 3), "2O", 8, BOX_NONE),
        ((1, 8), "2O", 16, BOX_NONE),
        ((5, 4), "2O", 16, BOX_NONE),
        ((9, 0), "2O", 16, BOX_SINGLE),
    ),
    5: (
        ((0, 3), "2Sp", 1, BOX_DOUBLE),
        ((1, 4), "2Sp", 2, BOX_NONE),
        ((5, 0), "2Sp", 2, BOX_SINGLE),
        ((2, 5), "2Sp", 4, BOX_NONE),
        ((6, 1), "2Sp", 4, BOX_NONE),
        ((3, 6), "2Sp", 8, BOX_NONE),
        ((7, 2), "2Sp", 8, BOX_NONE),
    ),
}


def generate_table(which: int) -> list[ClassificationRow]:
    """Rows of one reference table, computed (not copied) per signature."""
    if which not in TABLE_SIGNATURES:
        raise ValueError(f"table number must be 1..5, got {which}")
    return [classification_row(Signature(p, q)) for p, q in TABLE_SIGNATURES[which]]


# ---------------------------------------------------------------------------
# unitarity witnesses


def multivector_inverse(u: Multivector) -> Multivector:
    """Exact inverse via the left-multiplication matrix.

    A short cut handles the frequent case u * u = scalar; otherwise a
    rational linear solve against the unit recovers u^{-1}.
    """
    if u.is_zero():
        raise ValueError("zero multivector has no inverse")
    square = clifford_mul(u, u)
    if square.masks() == [0]:
        return (1 / square.scalar_part()) * u
    sig = u.sig
    mat = left_mul_matrix(u)
    rhs = [Fraction(0)] * (1 << sig.n)
    rhs[0] = Fraction(1)
    coords = linalg.solve(mat, rhs)
    return Multivector(sig, {m: c for m, c in enumerate(coords) if c})


def cayley_transform(a: Multivector) -> Multivector:
    """Map an element with transposition(a) = -a into the invariance group.

    Returns g = (1 - a)^{-1} (1 + a), which satisfies transposition(g) g = 1
    exactly.  1 - a is always invertible here: the left-multiplication
    matrix of an antisymmetric element is skew-symmetric, so it has no real
    eigenvalue.  When a * a is a scalar s (single blades, sums of
    anticommuting blades) the inverse collapses to (1 + a)/(1 - s) with
    s < 0, avoiding the linear solve.
    """
    if transposition(a) != -a:
        raise ValueError("cayley transform needs a transposition-antisymmetric input")
    one = Multivector.one(a.sig)
    square = clifford_mul(a, a)
    if square.is_zero() or square.masks() == [0]:
        return (Fraction(1) / (1 - square.scalar_part())) * clifford_mul(one + a, one + a)
    return clifford_mul(multivector_inverse(one - a), one + a)


def antisymmetric_blades(sig: Signature) -> list[int]:
    """Blade masks with transposition(e_I) = -e_I (equivalently e_I^2 = -1)."""
    return [m for m in sig.blade_masks() if blade_square_sign(m, sig) == -1]


def matrix_preimage(m: SpinorMatrix, basis: SpinorBasis) -> Multivector:
    """Algebra element whose spinor matrix has the given entries.

    Sums m_i lambda_ij m_j^{-1} over the basis monomials; in the semisimple
    case the result is the block-S lift, which is all the witness checks
    need.
    """
    sig = basis.sig
    total = Multivector.zero(sig)
    for i, mi in enumerate(basis.monomials):
        for j, mj in enumerate(basis.monomials):
            lam = m.entries[i][j]
            if lam.is_zero():
                continue
            total = total + clifford_mul(
                mi.to_multivector(sig),
                clifford_mul(lam, group_inv(sig, mj).to_multivector(sig)),
            )
    return total


@dataclass(frozen=True)
class WitnessReport:
    sig: Signature
    unitary_samples: int
    unitary_failures: int
    converse_samples: int
    converse_failures: int

    @property
    def passed(self) -> bool:
        return self.unitary_failures == 0 and self.converse_failures == 0


def _random_invariant_element(
    sig: Signature, rng: Random, vee_elements: list[GroupElement], anti: list[int]
) -> Multivector:
    """Random element g with transposition(g) g = 1: a product of vee-group
    monomials (all of which invert under transposition) and single-blade
    Cayley transforms (exact rational rotations)."""
    g = Multivector.one(sig)
    for _ in range(rng.randint(1, 3)):
        if anti and rng.random() < 0.6:
            mask = rng.choice(anti)
            while True:
                c = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
                if c:
                    break
            factor = cayley_transform(Multivector.blade(sig, mask, c))
        else:
            elem = rng.choice(vee_elements)
            factor = elem.to_multivector(sig)
        g = clifford_mul(g, factor)
    return g


def _random_field_element(basis: SpinorBasis, rng: Random) -> Multivector:
    out = basis.field_zero()
    for kb in basis.field_monomials:
        c = rng.randint(-2, 2)
        if c:
            out = out + c * clifford_mul(kb.to_multivector(basis.sig), basis.f)
    return out


def witness_group_property(sig: Signature, samples: int = 200, seed: int = 0) -> WitnessReport:
    """Two-directional spot check of the group classification.

    Forward: random exact elements of the invariance group must map to
    matrices with conjugate_transpose(M) M = I.  Converse: random matrices
    failing that identity must pull back to elements violating the defining
    identity transposition(g) g = 1.
    """
    if sig.n > 7:
        raise ValueError("witness sweeps are sized for p+q <= 7")
    rng = Random(f"witness:{seed}:{sig.p},{sig.q}")
    data = clidata(sig)
    basis = spinor_basis(data)
    identity_matrix = SpinorMatrix.identity(basis)
    one = Multivector.one(sig)
    vee_elements = sorted(vee_group(sig).elements)
    anti = antisymmetric_blades(sig)

    unitary_failures = 0
    for _ in range(samples):
        g = _random_invariant_element(sig, rng, vee_elements, anti)
        if clifford_mul(transposition(g), g) != one:
            unitary_failures += 1
            continue
        mat = spinor_matrix(g, basis)
        if conjugate_transpose(mat) @ mat != identity_matrix:
            unitary_failures += 1

    converse_samples = max(10, samples // 10)
    converse_failures = 0
    done = 0
    while done < converse_samples:
        entries = tuple(
            tuple(_random_field_element(basis, rng) for _ in range(basis.size))
            for _ in range(basis.size)
        )
        mat = SpinorMatrix(basis, entries)
        if conjugate_transpose(mat) @ mat == identity_matrix:
            continue  # accidentally unitary: not a witness, resample
        done += 1
        u = matrix_preimage(mat, basis)
        if clifford_mul(transposition(u), u) == one:
            converse_failures += 1

    return WitnessReport(sig, samples, unitary_failures, converse_samples, converse_failures)
