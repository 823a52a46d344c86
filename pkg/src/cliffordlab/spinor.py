"""Spinor machinery: minimal left ideals S = Cl f, the field K = f Cl f,
matrix representations over K, and the transposition scalar product.

K-arithmetic happens inside the ambient algebra: a field element is just a
multivector x with f x f = x.  No abstract complex or quaternion types are
introduced; the isomorphism type of K is recognized, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    Multivector,
    Signature,
    clifford_mul,
    conjugation,
    grade_involution,
    reversion,
    blade_square_sign,
    transposition,
)
from .groups import GroupElement, group_inv
from .structure import AlgebraData, clidata


class NotInIdealError(ValueError):
    """Input multivector does not lie in the expected left ideal."""


def spinor_project(u: Multivector, f: Multivector) -> Multivector:
    """Project into the left ideal S = Cl f by right multiplication."""
    return clifford_mul(u, f)


def is_field_element(x: Multivector, f: Multivector) -> bool:
    """Membership test for K = f Cl f."""
    return clifford_mul(f, clifford_mul(x, f)) == x


class SpinorBasis:
    """An ordered spinor basis [m_1 f, ..., m_N f] for S = Cl f over K.

    Built from a transversal of the stabilizer (the m_i, with m_1 = 1) and
    a transversal spanning K over R (the field monomials).  Each product
    m_i k_j f occupies its own coset of the idempotent-blade span, which
    makes coordinate extraction a direct lookup instead of a linear solve.
    """

    def __init__(
        self,
        sig: Signature,
        f: Multivector,
        monomials: Sequence[GroupElement],
        field_monomials: Sequence[GroupElement],
    ):
        self.sig = sig
        self.f = f
        self.monomials = tuple(monomials)
        self.field_monomials = tuple(field_monomials)
        if not self.monomials or self.monomials[0].mask != 0:
            raise ValueError("spinor basis must start with the identity monomial")
        self.size = len(self.monomials)
        self.alphas = tuple(
            blade_square_sign(m.mask, sig) for m in self.monomials
        )
        # probe table: for each (i, j) the product m_i k_j f, one designated
        # blade of its support, and that blade's coefficient
        self._probes: dict[tuple[int, int], tuple[Multivector, int, Fraction]] = {}
        claimed: set[int] = set()
        for i, m in enumerate(self.monomials):
            for j, kb in enumerate(self.field_monomials):
                prod = clifford_mul(
                    m.to_multivector(sig), clifford_mul(kb.to_multivector(sig), f)
                )
                probe_mask = m.mask ^ kb.mask
                coeff = prod.coeff(probe_mask)
                if not coeff or probe_mask in claimed:
                    raise ValueError("transversals do not induce disjoint cosets")
                claimed.add(probe_mask)
                self._probes[(i, j)] = (prod, probe_mask, coeff)

    def field_unit(self) -> Multivector:
        """The unit of K, which is f itself."""
        return self.f

    def field_zero(self) -> Multivector:
        return Multivector.zero(self.sig)


def spinor_basis(data: AlgebraData, hat: bool = False) -> SpinorBasis:
    """Spinor basis from a structure record; `hat` builds the basis of the
    grade-involuted ideal S-hat = Cl f-hat instead."""
    f = grade_involution(data.idempotent) if hat else data.idempotent
    return SpinorBasis(data.sig, f, data.data7, data.data6)


def decompose_in_basis(psi: Multivector, basis: SpinorBasis) -> list[Multivector]:
    """Coordinates of psi in S over K: psi = sum_i m_i lambda_i, lambda_i in K.

    Exact and unique; raises NotInIdealError when psi is not in S (detected
    by the reconstruction check, which is always performed).
    """
    coords: list[Multivector] = []
    recon = Multivector.zero(basis.sig)
    for i in range(basis.size):
        lam = Multivector.zero(basis.sig)
        for j, kb in enumerate(basis.field_monomials):
            prod, probe_mask, probe_coeff = basis._probes[(i, j)]
            c = psi.coeff(probe_mask) / probe_coeff
            if c:
                contrib = c * prod
                recon = recon + contrib
                lam = lam + c * clifford_mul(
                    kb.to_multivector(basis.sig), basis.f
                )
        coords.append(lam)
    if recon != psi:
        raise NotInIdealError("multivector is not in the spinor ideal of this basis")
    return coords


@dataclass(frozen=True)
class SpinorMatrix:
    """A square matrix over K = f Cl f, entries stored as multivectors."""

    basis: SpinorBasis
    entries: tuple[tuple[Multivector, ...], ...]

    @property
    def size(self) -> int:
        return self.basis.size

    @classmethod
    def identity(cls, basis: SpinorBasis) -> "SpinorMatrix":
        zero = basis.field_zero()
        unit = basis.field_unit()
        return cls(
            basis,
            tuple(
                tuple(unit if i == j else zero for j in range(basis.size))
                for i in range(basis.size)
            ),
        )

    def __matmul__(self, other: "SpinorMatrix") -> "SpinorMatrix":
        if self.basis is not other.basis and self.basis.f != other.basis.f:
            raise ValueError("matrices over different spinor bases")
        from .core import _mul_into

        n = self.size
        sig = self.basis.sig
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: dict = {}
                for l in range(n):
                    a = self.entries[i][l]
                    b = other.entries[l][j]
                    if not a.is_zero() and not b.is_zero():
                        _mul_into(acc, a, b)
                row.append(Multivector(sig, acc))
            rows.append(tuple(row))
        return SpinorMatrix(self.basis, tuple(rows))

    def __add__(self, other: "SpinorMatrix") -> "SpinorMatrix":
        return SpinorMatrix(
            self.basis,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpinorMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )


def spinor_matrix(u: Multivector, basis: SpinorBasis) -> SpinorMatrix:
    """Matrix of u acting on S from the left, columns in the given basis.

    Column j holds the K-coordinates of u * (m_j f); with this convention
    [u][v] = [uv] (matrix entries multiply left-to-right in K).
    """
    cols = []
    for m in basis.monomials:
        image = clifford_mul(u, clifford_mul(m.to_multivector(basis.sig), basis.f))
        cols.append(decompose_in_basis(image, basis))
    entries = tuple(
        tuple(cols[j][i] for j in range(basis.size)) for i in range(basis.size)
    )
    return SpinorMatrix(basis, entries)


def conjugate_transpose(m: SpinorMatrix) -> SpinorMatrix:
    """Transpose with the transposition anti-involution applied entrywise.

    Realizes plain transpose over K ~ R, Hermitian conjugation over K ~ C,
    and quaternionic Hermitian conjugation over K ~ H in one map, since the
    transposition anti-involution restricts to the respective conjugation
    on each field.
    """
    n = m.size
    return SpinorMatrix(
        m.basis,
        tuple(
            tuple(transposition(m.entries[j][i]) for j in range(n))
            for i in range(n)
        ),
    )


# ---------------------------------------------------------------------------
# scalar products on spinor spaces


def transposition_product(psi: Multivector, phi: Multivector, f: Multivector) -> Multivector:
    """The K-valued product (psi, phi) -> transposition(psi) * phi on S = Cl f.

    Always lands in K without any monomial correction factor; on the
    diagonal it is a positive rational multiple of f for psi != 0.
    """
    if clifford_mul(psi, f) != psi or clifford_mul(phi, f) != phi:
        raise NotInIdealError("transposition product expects arguments in Cl f")
    value = clifford_mul(transposition(psi), phi)
    if not is_field_element(value, f):
        raise AssertionError("product unexpectedly left the field K")
    return value


def diagonal_scale(value: Multivector, f: Multivector) -> Fraction:
    """Extract lambda from value = lambda * f; raises if value is not in R f."""
    lam = value.scalar_part() / f.scalar_part()
    if value != lam * f:
        raise ValueError("value is not a rational multiple of the idempotent")
    return lam


@dataclass(frozen=True)
class BetaForm:
    """One of the two classical spinor scalar products, or its absence.

    `factor` is the monomial making the form K-valued; when no transversal
    monomial conjugates the idempotent correctly the form vanishes
    identically on S and `identically_zero` is set instead.
    """

    kind: str  # "plus" (reversion-based) or "minus" (conjugation-based)
    factor: GroupElement | None
    identically_zero: bool

    def value(self, psi: Multivector, phi: Multivector, sig: Signature) -> Multivector:
        if self.identically_zero:
            return Multivector.zero(sig)
        assert self.factor is not None
        inv = reversion if self.kind == "plus" else conjugation
        return clifford_mul(
            self.factor.to_multivector(sig), clifford_mul(inv(psi), phi)
        )


def _find_beta_factor(data: AlgebraData, involution, kind: str) -> BetaForm:
    sig = data.sig
    f = data.idempotent
    target = involution(f)
    for s in data.data7:
        s_mv = s.to_multivector(sig)
        s_inv = group_inv(sig, s).to_multivector(sig)
        if clifford_mul(s_mv, clifford_mul(f, s_inv)) == target:
            return BetaForm(kind, s, False)
    # no conjugating monomial: the form must vanish on all of S x S
    for a in data.data5:
        psi = clifford_mul(a.to_multivector(sig), f)
        for b in data.data5:
            phi = clifford_mul(b.to_multivector(sig), f)
            if not clifford_mul(involution(psi), phi).is_zero():
                raise RuntimeError(
                    f"no conjugating monomial for beta-{kind} in {sig}, "
                    "yet the form does not vanish"
                )
    return BetaForm(kind, None, True)


def beta_products(data: AlgebraData) -> tuple[BetaForm, BetaForm]:
    """Locate the monomial factors of the two classical scalar products.

    The reversion-based form needs s1 with s1 f s1^{-1} = reversion(f); the
    conjugation-based form needs s2 with s2 f s2^{-1} = conjugation(f).
    The search runs over the transversal of the stabilizer, which always
    suffices; a form with no such monomial is identically zero (verified by
    exhaustive vanishing on all basis pairs before the marker is returned).
    """
    plus = _find_beta_factor(data, reversion, "plus")
    minus = _find_beta_factor(data, conjugation, "minus")
    return plus, minus


# ---------------------------------------------------------------------------
# semisimple algebras: the doubled ideal and field


@dataclass(frozen=True)
class SemisimpleStructures:
    """Doubled spinor data for p - q = 1 mod 4.

    The representation lives on Cl e with e = f + f-hat; spinors split into
    half-spinor components via right multiplication by f and f-hat, and the
    doubled field pairs K with its grade-involution image.
    """

    data: AlgebraData
    f: Multivector
    f_hat: Multivector
    e: Multivector
    basis: SpinorBasis
    basis_hat: SpinorBasis

    def split(self, psi_check: Multivector) -> tuple[Multivector, Multivector]:
        """Half-spinor components (psi, psi_g) of an element of Cl e."""
        return (
            clifford_mul(psi_check, self.f),
            clifford_mul(psi_check, self.f_hat),
        )

    def field_basis_pair(self) -> tuple[tuple[Multivector, ...], tuple[Multivector, ...]]:
        """R-bases of K and K-hat, the two summands of the doubled field."""
        sig = self.data.sig
        k_part = tuple(
            clifford_mul(kb.to_multivector(sig), self.f)
            for kb in self.basis.field_monomials
        )
        k_hat_part = tuple(
            clifford_mul(kb.to_multivector(sig), self.f_hat)
            for kb in self.basis_hat.field_monomials
        )
        return k_part, k_hat_part


def semisimple_structures(data: AlgebraData) -> SemisimpleStructures:
    """Build e = f + f-hat and the two half-spinor bases.

    Only defined for semisimple algebras; f and its grade involution must
    annihilate each other, making e idempotent.
    """
    if data.simple:
        raise ValueError(f"{data.sig} is simple; no doubled spinor space")
    f = data.idempotent
    f_hat = grade_involution(f)
    e = f + f_hat
    if clifford_mul(e, e) != e or not clifford_mul(f, f_hat).is_zero():
        raise AssertionError("idempotent pair is not mutually annihilating")
    return SemisimpleStructures(
        data=data,
        f=f,
        f_hat=f_hat,
        e=e,
        basis=spinor_basis(data),
        basis_hat=spinor_basis(data, hat=True),
    )


def transposition_product_semisimple(
    psi_check: Multivector, phi_check: Multivector, structures: SemisimpleStructures
) -> tuple[Multivector, Multivector]:
    """Componentwise transposition product on the doubled ideal Cl e.

    Returns the pair of K- and K-hat-valued half products; inputs must lie
    in Cl e.
    """
    e = structures.e
    if clifford_mul(psi_check, e) != psi_check or clifford_mul(phi_check, e) != phi_check:
        raise NotInIdealError("semisimple product expects arguments in Cl e")
    psi, psi_g = structures.split(psi_check)
    phi, phi_g = structures.split(phi_check)
    first = transposition_product(psi, phi, structures.f)
    second = transposition_product(psi_g, phi_g, structures.f_hat)
    return first, second
