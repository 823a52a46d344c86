"""Exact-arithmetic kernel for the Clifford algebras Cl(p,q).

Basis blades are bitmasks (bit i-1 set iff the generator e_i occurs) and a
multivector is a sparse map from blade mask to an exact rational
coefficient.  Everything here is pure and immutable: no floats, no mutable
state, safe for concurrent sweeps.

The basis is kept in InvLex order throughout, which for bitmasks is plain
ascending integer order: 1 < e1 < e2 < e12 < e3 < e13 < e23 < e123 < ...
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

MAX_DIMENSION = 12

Scalar = Union[int, Fraction]


class SignatureMismatchError(ValueError):
    """Raised when two operands live in different Cl(p,q)."""


@dataclass(frozen=True, order=True)
class Signature:
    """The signature (p, q) of a non-degenerate quadratic form.

    The first p generators square to +1, the remaining q to -1.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"signature counts must be non-negative, got ({self.p},{self.q})")
        if self.p + self.q > MAX_DIMENSION:
            raise ValueError(f"p+q must be at most {MAX_DIMENSION}, got {self.p + self.q}")

    @property
    def n(self) -> int:
        return self.p + self.q

    def eps(self, i: int) -> int:
        """Square of the i-th generator (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range for {self}")
        return 1 if i <= self.p else -1

    def metric_sign(self, mask: int) -> int:
        """Product of eps(i) over the generators present in `mask`."""
        return -1 if ((mask >> self.p).bit_count() & 1) else 1

    def blade_masks(self) -> range:
        """All 2^n blade masks, already in InvLex order."""
        return range(1 << self.n)

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


# ---------------------------------------------------------------------------
# blade-level arithmetic


def grade(mask: int) -> int:
    return mask.bit_count()


def blade_indices(mask: int) -> tuple[int, ...]:
    """1-based generator indices of a blade mask, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"generator indices are 1-based, got {i}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator index {i}")
        mask |= bit
    return mask


def blade_name(mask: int, n: int | None = None) -> str:
    """Printable name: "1" for the unit, "e13" style while every index is a
    single digit, bracketed "e[1,13]" beyond.

    Pass the algebra dimension `n` to force the bracket form for n > 9,
    where the compact spelling would be ambiguous.
    """
    if mask == 0:
        return "1"
    idx = blade_indices(mask)
    if idx[-1] <= 9 and (n is None or n <= 9):
        return "e" + "".join(str(i) for i in idx)
    return "e[" + ",".join(str(i) for i in idx) + "]"


def _swap_parity(a: int, b: int) -> int:
    # parity of |{(i,j) : i in a, j in b, j < i}|, the number of
    # transpositions needed to merge the two ascending index strings
    count = 0
    a >>= 1
    while a:
        count += (a & b).bit_count()
        a >>= 1
    return -1 if count & 1 else 1


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Clifford product of two basis blades: e_A e_B = sign * e_{A xor B}.

    The sign is the merge-sort parity times eps(i) for every generator the
    two blades share.  Reproduces e_i e_j = -e_j e_i and e_i^2 = eps_i.
    """
    return _swap_parity(a, b) * sig.metric_sign(a & b), a ^ b


def blade_square_sign(mask: int, sig: Signature) -> int:
    """Scalar e_I^2 in {+1,-1}."""
    k = mask.bit_count()
    s = -1 if (k * (k - 1) // 2) & 1 else 1
    return s * sig.metric_sign(mask)


def commutation_sign(a: int, b: int) -> int:
    """+1 if the blades e_A and e_B commute, -1 if they anticommute.

    e_A e_B = (-1)^(|A||B| - |A&B|) e_B e_A; any two basis blades either
    commute or anticommute.
    """
    k = a.bit_count() * b.bit_count() - (a & b).bit_count()
    return -1 if k & 1 else 1


def blade_wedge(a: int, b: int) -> tuple[int, int]:
    """Exterior product of blades: 0 if they share a generator, else the
    permutation sign and the union mask.  Returns sign 0 on annihilation."""
    if a & b:
        return 0, 0
    return _swap_parity(a, b), a | b


def sort_invlex(blades: Iterable[int]) -> list[int]:
    """Sort blade masks in InvLex order.

    With the bit i-1 <-> e_i encoding, InvLex is ascending integer order on
    masks; the unit comes first and grade-1 blades appear as e1 < e2 < ...
    """
    return sorted(blades)


# ---------------------------------------------------------------------------
# multivectors


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


class Multivector:
    """A sparse multivector with exact rational coefficients.

    Instances are immutable by convention: no method mutates `self`, zero
    coefficients are never stored, and term iteration follows InvLex order.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: Signature, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, Fraction] = {}
        limit = 1 << sig.n
        for mask, coeff in items:
            if not 0 <= mask < limit:
                raise ValueError(f"blade mask {mask} out of range for {sig}")
            c = clean.get(mask, Fraction(0)) + _as_fraction(coeff)
            if c:
                clean[mask] = c
            else:
                clean.pop(mask, None)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Multivector is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig)

    @classmethod
    def scalar(cls, sig: Signature, value: Scalar) -> "Multivector":
        return cls(sig, {0: value})

    @classmethod
    def one(cls, sig: Signature) -> "Multivector":
        return cls(sig, {0: 1})

    @classmethod
    def blade(cls, sig: Signature, mask: int, coeff: Scalar = 1) -> "Multivector":
        return cls(sig, {mask: coeff})

    @classmethod
    def basis_vector(cls, sig: Signature, i: int) -> "Multivector":
        if not 1 <= i <= sig.n:
            raise IndexError(f"generator index {i} out of range for {sig}")
        return cls(sig, {1 << (i - 1): 1})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        """Iterate (mask, coefficient) pairs in InvLex order."""
        for mask in sorted(self._terms):
            yield mask, self._terms[mask]

    def masks(self) -> list[int]:
        return sorted(self._terms)

    def coeff(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def scalar_part(self) -> Fraction:
        return self.coeff(0)

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({m.bit_count() for m in self._terms}))

    def grade(self) -> int | None:
        """Common grade of a homogeneous multivector, None for zero.

        Raises ValueError on mixed-grade input; the zero multivector has no
        grade at all.
        """
        gs = self.grades()
        if not gs:
            return None
        if len(gs) > 1:
            raise ValueError(f"mixed grades {gs}")
        return gs[0]

    def grade_part(self, k: int) -> "Multivector":
        return Multivector(self.sig, {m: c for m, c in self._terms.items() if m.bit_count() == k})

    # -- algebra -----------------------------------------------------------

    def _check_sig(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise SignatureMismatchError(f"{self.sig} vs {other.sig}")

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_sig(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Multivector(self.sig, terms)

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.sig, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other: "Multivector | Scalar") -> "Multivector":
        if isinstance(other, Multivector):
            return clifford_mul(self, other)
        if isinstance(other, (int, Fraction)):
            if not other:
                return Multivector.zero(self.sig)
            return Multivector(self.sig, {m: c * other for m, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other: "Scalar") -> "Multivector":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __xor__(self, other: "Multivector") -> "Multivector":
        if isinstance(other, Multivector):
            return wedge(self, other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.sig, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Multivector({self.sig}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mask, c in self.terms():
            if mask == 0:
                text = str(c)
            elif c == 1:
                text = blade_name(mask, self.sig.n)
            elif c == -1:
                text = "-" + blade_name(mask, self.sig.n)
            else:
                text = f"{c}*{blade_name(mask, self.sig.n)}"
            if parts and not text.startswith("-"):
                parts.append("+ " + text)
            elif parts:
                parts.append("- " + text[1:])
            else:
                parts.append(text)
        return " ".join(parts)


# ---------------------------------------------------------------------------
# products


def _mul_into(acc: dict[int, Fraction], u: Multivector, v: Multivector) -> None:
    """Accumulate the product u*v into a coefficient dict (internal)."""
    sig = u.sig
    zero = Fraction(0)
    for a, ca in u._terms.items():
        for b, cb in v._terms.items():
            sign, m = blade_product(a, b, sig)
            c = acc.get(m, zero) + (ca * cb if sign > 0 else -(ca * cb))
            if c:
                acc[m] = c
            else:
                acc.pop(m, None)


def clifford_mul(u: Multivector, v: Multivector) -> Multivector:
    """Clifford product, the bilinear extension of `blade_product`."""
    u._check_sig(v)
    acc: dict[int, Fraction] = {}
    _mul_into(acc, u, v)
    return Multivector(u.sig, acc)


def wedge(u: Multivector, v: Multivector) -> Multivector:
    """Exterior product; signature-independent."""
    u._check_sig(v)
    acc: dict[int, Fraction] = {}
    for a, ca in u._terms.items():
        for b, cb in v._terms.items():
            if a & b:
                continue
            sign = _swap_parity(a, b)
            m = a | b
            c = acc.get(m, Fraction(0)) + (ca * cb if sign > 0 else -(ca * cb))
            if c:
                acc[m] = c
            else:
                acc.pop(m, None)
    return Multivector(u.sig, acc)


def inner(u: Multivector, v: Multivector) -> Fraction:
    """Symmetric bilinear form <e_I, e_J> = delta_IJ * prod eps, extended
    bilinearly from the quadratic form on V to the whole exterior algebra."""
    u._check_sig(v)
    total = Fraction(0)
    small, big = (u, v) if len(u) <= len(v) else (v, u)
    for m, c in small._terms.items():
        cb = big._terms.get(m)
        if cb is not None:
            total += c * cb * u.sig.metric_sign(m)
    return total


def dual_pairing(phi: Multivector, v: Multivector) -> Fraction:
    """Action of a linear form on a multivector: the plain coordinate sum
    sum_I phi_I v_I, with phi stored in the dual-basis coordinates."""
    phi._check_sig(v)
    total = Fraction(0)
    small, big = (phi, v) if len(phi) <= len(v) else (v, phi)
    for m, c in small._terms.items():
        cb = big._terms.get(m)
        if cb is not None:
            total += c * cb
    return total


# ---------------------------------------------------------------------------
# involutions


def _sign_map(u: Multivector, sign_of_mask) -> Multivector:
    return Multivector(u.sig, {m: (c if sign_of_mask(m) > 0 else -c) for m, c in u._terms.items()})


def grade_involution(u: Multivector) -> Multivector:
    """Algebra automorphism acting on a grade-k blade by (-1)^k."""
    return _sign_map(u, lambda m: -1 if m.bit_count() & 1 else 1)


def reversion(u: Multivector) -> Multivector:
    """Anti-automorphism acting on a grade-k blade by (-1)^(k(k-1)/2)."""
    return _sign_map(u, lambda m: -1 if (m.bit_count() * (m.bit_count() - 1) // 2) & 1 else 1)


def conjugation(u: Multivector) -> Multivector:
    """Clifford conjugation: grade involution composed with reversion."""
    return _sign_map(u, lambda m: -1 if (m.bit_count() * (m.bit_count() + 1) // 2) & 1 else 1)


def metric_involution(u: Multivector) -> Multivector:
    """Algebra automorphism scaling each blade by the product of the
    squares of its generators; identity for (p,0), grade involution for (0,q)."""
    return _sign_map(u, lambda m: u.sig.metric_sign(m))


def metric_involution_vector(x: Multivector) -> Multivector:
    """The metric involution restricted to V: e_i -> eps_i e_i.

    Accepts only grade-1 input (the zero vector counts); this is the map
    raising vector indices against the quadratic form.
    """
    if not x.is_zero() and x.grades() != (1,):
        raise ValueError(f"expected a grade-1 multivector, got grades {x.grades()}")
    return metric_involution(x)


def transposition(u: Multivector) -> Multivector:
    """The transposition anti-involution: reversion composed with the
    metric involution (in either order).

    On a blade it scales by (-1)^(k(k-1)/2) times the metric sign, which is
    exactly e_I^{-1}/e_I: it inverts every basis monomial.  Coincides with
    reversion on Cl(p,0) and with conjugation on Cl(0,q).
    """
    sig = u.sig
    def s(m: int) -> int:
        k = m.bit_count()
        rev = -1 if (k * (k - 1) // 2) & 1 else 1
        return rev * sig.metric_sign(m)
    return _sign_map(u, s)


# ---------------------------------------------------------------------------
# the left-multiplication operator


def left_mul_matrix(u: Multivector) -> list[list[Fraction]]:
    """Matrix of v -> u*v in the InvLex-sorted blade basis.

    Entry [i][j] is the coefficient of blade j's image on blade i, so
    column j holds the coordinates of u * e_(basis j).
    """
    sig = u.sig
    size = 1 << sig.n
    zero = Fraction(0)
    mat = [[zero] * size for _ in range(size)]
    for b in range(size):
        for a, ca in u._terms.items():
            sign, m = blade_product(a, b, sig)
            mat[m][b] += ca if sign > 0 else -ca
    return mat
