"""Finite-group layer: the vee group of signed basis blades and the
subgroups attached to a primitive idempotent.

Group elements are (sign, mask) pairs, so products, inverses and
conjugation reduce to bit arithmetic; only span checks convert back to
multivectors.  The main entry point `verify_theorem1` mechanically checks
the ten structural facts relating the stabilizer, idempotent group and
field group of a primitive idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, TYPE_CHECKING

from .core import (
    Multivector,
    Signature,
    blade_product,
    blade_square_sign,
    clifford_mul,
    commutation_sign,
)

if TYPE_CHECKING:
    from .structure import IdempotentFactorization


@dataclass(frozen=True, order=True)
class GroupElement:
    """A signed basis blade, member of the vee group of Cl(p,q).

    Ordering follows the InvLex blade order on masks, with the sign only
    breaking ties.
    """

    mask: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +-1, got {self.sign}")

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.mask, -self.sign)

    def to_multivector(self, sig: Signature) -> Multivector:
        return Multivector.blade(sig, self.mask, self.sign)

    def __str__(self) -> str:
        from .core import blade_name

        return ("-" if self.sign < 0 else "") + blade_name(self.mask)


IDENTITY = GroupElement(0, 1)


def group_mul(sig: Signature, a: GroupElement, b: GroupElement) -> GroupElement:
    sign, mask = blade_product(a.mask, b.mask, sig)
    return GroupElement(mask, sign * a.sign * b.sign)


def group_inv(sig: Signature, a: GroupElement) -> GroupElement:
    # e_I^2 = sigma in {+-1}, so e_I^{-1} = sigma * e_I
    return GroupElement(a.mask, a.sign * blade_square_sign(a.mask, sig))


def conjugate_element(g: GroupElement, h: GroupElement) -> GroupElement:
    """g h g^{-1}; blades either commute or anticommute, so this is +-h."""
    return GroupElement(h.mask, h.sign * commutation_sign(g.mask, h.mask))


def conjugate_multivector(sig: Signature, g: GroupElement, u: Multivector) -> Multivector:
    """g u g^{-1} for a signed blade g: flips blades anticommuting with g."""
    return Multivector(
        sig,
        {m: (c if commutation_sign(g.mask, m) > 0 else -c) for m, c in u.terms()},
    )


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of the vee group, held as an explicit element set."""

    sig: Signature
    elements: frozenset[GroupElement]
    label: str = "custom"

    @classmethod
    def create(
        cls,
        sig: Signature,
        elements: Iterable[GroupElement],
        label: str = "custom",
        validate: bool = True,
    ) -> "Subgroup":
        elems = frozenset(elements)
        if validate:
            if IDENTITY not in elems:
                raise ValueError(f"{label}: identity missing")
            for a in elems:
                if group_inv(sig, a) not in elems:
                    raise ValueError(f"{label}: inverse of {a} missing")
                for b in elems:
                    if group_mul(sig, a, b) not in elems:
                        raise ValueError(f"{label}: not closed under product")
        return cls(sig, elems, label)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(sorted(self.elements))

    def masks(self) -> frozenset[int]:
        return frozenset(g.mask for g in self.elements)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.sig == other.sig and self.elements <= other.elements

    def is_abelian(self) -> bool:
        elems = list(self.elements)
        return all(
            group_mul(self.sig, a, b) == group_mul(self.sig, b, a)
            for i, a in enumerate(elems)
            for b in elems[i + 1 :]
        )

    def is_normal_in(self, other: "Subgroup") -> bool:
        return all(
            conjugate_element(g, h) in self.elements
            for g in other.elements
            for h in self.elements
        )


def _signed(masks: Iterable[int]) -> frozenset[GroupElement]:
    return frozenset(
        GroupElement(m, s) for m in masks for s in (1, -1)
    )


def vee_group(sig: Signature) -> Subgroup:
    """The full vee group {+-e_I}: order 2^(1+p+q).

    Closed by construction (blade products are signed blades), so no
    validation pass is run here; closure is covered by exhaustive tests.
    """
    return Subgroup(sig, _signed(sig.blade_masks()), label="vee")


def stabilizer(sig: Signature, f: Multivector) -> Subgroup:
    """Elements m of the vee group with m f m^{-1} = f."""
    if clifford_mul(f, f) != f:
        raise ValueError("stabilizer requires an idempotent")
    masks = [
        m
        for m in sig.blade_masks()
        if all(commutation_sign(m, b) == 1 for b in f.masks())
    ]
    return Subgroup(sig, _signed(masks), label="stabilizer")


def idempotent_group(factorization: "IdempotentFactorization") -> Subgroup:
    """The abelian group generated by -1 and the idempotent factor blades."""
    return Subgroup(
        factorization.sig,
        _signed(factorization.group_masks()),
        label="idempotent_group",
    )


def field_group(sig: Signature, f: Multivector) -> Subgroup:
    """The group generated by -1 and blades spanning K = f Cl f modulo f.

    The K-basis blades are the minimal coset representatives of the blade
    support of f inside its centralizer; minimal representatives of a
    subspace are closed under XOR, so the result is a genuine subgroup of
    order 2 * dim K.
    """
    if clifford_mul(f, f) != f:
        raise ValueError("field_group requires an idempotent")
    t_masks = frozenset(f.masks())
    stab_masks = [
        m
        for m in sig.blade_masks()
        if all(commutation_sign(m, b) == 1 for b in t_masks)
    ]
    reps = _coset_minima(stab_masks, t_masks)
    return Subgroup(sig, _signed(reps), label="field_group")


def _coset_minima(masks: Iterable[int], subgroup_masks: frozenset[int]) -> list[int]:
    """Smallest representative of each coset m ^ subgroup, in InvLex order."""
    reps: list[int] = []
    seen: set[int] = set()
    for m in sorted(masks):
        if m in seen:
            continue
        reps.append(m)
        seen.update(m ^ t for t in subgroup_masks)
    return reps


def _rep_key(e: GroupElement) -> tuple[int, int]:
    # smallest mask first, +1 sign preferred on ties
    return (e.mask, 0 if e.sign == 1 else 1)


def transversal(h: Subgroup, g: Subgroup) -> tuple[GroupElement, ...]:
    """One representative per left coset of h in g, identity coset first.

    Each representative is the InvLex-smallest blade of its coset with sign
    +1 (cosets of the subgroups used here are sign-symmetric since they all
    contain -1), and representatives are listed by InvLex order, so the
    output is deterministic.
    """
    if not h.is_subgroup_of(g):
        raise ValueError(f"{h.label} is not a subgroup of {g.label}")
    sig = g.sig
    reps: list[GroupElement] = []
    covered: set[GroupElement] = set()
    for candidate in sorted(g.elements, key=_rep_key):
        if candidate in covered:
            continue
        coset = {group_mul(sig, candidate, x) for x in h.elements}
        reps.append(min(coset, key=_rep_key))
        covered |= coset
    return tuple(reps)


def centralizer(g: Subgroup, xs: Iterable[GroupElement]) -> Subgroup:
    """Centralizer in g of a set of elements."""
    targets = list(xs)
    elems = [
        e
        for e in g.elements
        if all(conjugate_element(e, x) == x for x in targets)
    ]
    return Subgroup(g.sig, frozenset(elems), label="centralizer")


# ---------------------------------------------------------------------------
# Theorem-1 style verification


@dataclass(frozen=True)
class ItemResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Theorem1Report:
    sig: Signature
    items: tuple[ItemResult, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def __str__(self) -> str:
        lines = [f"{self.sig} stabilizer structure:"]
        for item in self.items:
            status = "pass" if item.passed else "FAIL"
            suffix = f" ({item.detail})" if item.detail and not item.passed else ""
            lines.append(f"  ({item.name}) {status}{suffix}")
        return "\n".join(lines)


def _coset_id(mask: int, subgroup_masks: frozenset[int]) -> int:
    return min(mask ^ t for t in subgroup_masks)


def _spans_disjointly(
    sig: Signature, monomials: Iterable[GroupElement], f: Multivector, expected: int
) -> bool:
    """True when the products m*f are nonzero with pairwise disjoint blade
    support and there are exactly `expected` of them.

    Disjoint nonzero supports imply linear independence over the rationals,
    which is the exact content of the span checks below (each m*f occupies
    one coset of the idempotent-group masks).
    """
    seen: set[int] = set()
    count = 0
    for m in monomials:
        prod = clifford_mul(m.to_multivector(sig), f)
        if prod.is_zero():
            return False
        support = set(prod.masks())
        if seen & support:
            return False
        seen |= support
        count += 1
    return count == expected


def verify_theorem1(sig: Signature) -> Theorem1Report:
    """Check the ten structural facts tying the vee group G, stabilizer
    G(f), idempotent group T(f) and field group K(f) together.

    Every check is an exact finite computation; a failure of any item is a
    build-stopping bug, reported rather than raised.
    """
    from .structure import classify_algebra, primitive_idempotent

    cls = classify_algebra(sig)
    fact = primitive_idempotent(sig)
    f = fact.expand()
    g = vee_group(sig)
    gf = stabilizer(sig, f)
    t = idempotent_group(fact)
    kf = field_group(sig, f)
    minus_one = GroupElement(0, -1)
    pm_one = {IDENTITY, minus_one}

    items: list[ItemResult] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        items.append(ItemResult(name, bool(passed), detail))

    # (i) elements of T(f) and K(f) commute
    add(
        "i",
        all(
            group_mul(sig, a, b) == group_mul(sig, b, a)
            for a in t.elements
            for b in kf.elements
        ),
    )

    # (ii) T(f) & K(f) meet exactly in the commutator subgroup {+-1}
    add("ii", t.elements & kf.elements == pm_one)

    # (iii) G(f) = T(f)K(f) = K(f)T(f) as sets
    tk = {group_mul(sig, a, b) for a in t.elements for b in kf.elements}
    kt = {group_mul(sig, b, a) for a in t.elements for b in kf.elements}
    add("iii", tk == gf.elements and kt == gf.elements)

    # (iv) |G(f)| = |T(f)||K(f)| / 2
    add(
        "iv",
        2 * len(gf) == len(t) * len(kf),
        f"|G(f)|={len(gf)}, |T|={len(t)}, |K|={len(kf)}",
    )

    # (v) G(f), T(f), K(f) are all normal in G
    add(
        "v",
        gf.is_normal_in(g)
        and t.is_normal_in(g)
        and kf.is_normal_in(g)
        and t.is_normal_in(gf)
        and kf.is_normal_in(gf),
    )

    # (vi) G(f)/K(f) ~ T(f)/{+-1} and G(f)/T(f) ~ K(f)/{+-1}, via the
    # canonical maps t -> tK and k -> kT (well-defined and bijective)
    def quotient_bijection(sub: Subgroup, mod: Subgroup) -> bool:
        # map sub/{+-1} -> gf/mod, x -> x*mod; bijective iff orders match
        # and distinct +-classes land on distinct cosets
        if 2 * len(gf) != len(sub) * len(mod):
            return False
        ids = {
            frozenset(group_mul(sig, x, m) for m in mod.elements)
            for x in sub.elements
        }
        return len(ids) == len(sub) // 2 == len(gf) // len(mod)

    add("vi", quotient_bijection(t, kf) and quotient_bijection(kf, t))

    # (vii) (G(f)/G')/(T/G') ~ G(f)/T ~ K/{+-1}, and the transversal of T
    # in G(f) spans K over R modulo f (two-sided: f m f proportional to m f)
    d6 = transversal(t, gf)
    two_sided = all(
        clifford_mul(f, clifford_mul(m.to_multivector(sig), f))
        == clifford_mul(m.to_multivector(sig), f)
        for m in d6
    )
    add(
        "vii",
        len(gf) // len(t) == len(kf) // 2
        and two_sided
        and _spans_disjointly(sig, d6, f, cls.dim_k),
    )

    # (viii) a transversal of G(f) in G spans S over K modulo f
    d7 = transversal(gf, g)
    k_basis = transversal(t, gf)
    products = [
        group_mul(sig, m, kb) for m in d7 for kb in k_basis
    ]
    add(
        "viii",
        len(d7) == cls.matrix_size
        and _spans_disjointly(sig, products, f, len(d7) * len(k_basis))
        and len(d7) * len(k_basis) == 1 << (sig.n - cls.k),
    )

    # (ix) (G(f)/T) is normal in (G/T) with quotient ~ G/G(f), and a
    # transversal of T in G spans S over R modulo f
    t_masks = t.masks()
    gf_coset_ids = {_coset_id(m, t_masks) for m in gf.masks()}
    quotient_normal = all(
        _coset_id(
            group_mul(sig, group_mul(sig, a, b), group_inv(sig, a)).mask, t_masks
        )
        in gf_coset_ids
        for a in g.elements
        for b in gf.elements
    )
    d5 = transversal(t, g)
    add(
        "ix",
        quotient_normal
        and (len(g) // len(t)) // (len(gf) // len(t)) == len(g) // len(gf)
        and _spans_disjointly(sig, d5, f, 1 << (sig.n - cls.k)),
    )

    # (x) G(f) is the centralizer of T(f) in G
    add("x", centralizer(g, t.elements).elements == gf.elements)

    return Theorem1Report(sig, tuple(items))
