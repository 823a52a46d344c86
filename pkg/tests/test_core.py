"""Kernel tests: blade products against the bubble-sort oracle, the four
(anti-)involutions, the inner product, InvLex ordering, and the
left-multiplication operator."""

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from cliffordlab import (
    Multivector,
    Signature,
    SignatureMismatchError,
    blade_product,
    clifford_mul,
    conjugation,
    dual_pairing,
    grade_involution,
    inner,
    left_mul_matrix,
    metric_involution,
    metric_involution_vector,
    reversion,
    sort_invlex,
    transposition,
    wedge,
)
from cliffordlab import linalg
from conftest import multivectors, small_signatures
from helpers import all_signatures, bubble_blade_product, bubble_wedge, random_multivector

E = Multivector.basis_vector
CL21 = Signature(2, 1)
CL22 = Signature(2, 2)


class TestSignature:
    def test_eps_split(self):
        sig = Signature(1, 1)
        assert sig.eps(1) == 1 and sig.eps(2) == -1

    def test_dimension_cap(self):
        Signature(6, 6)
        with pytest.raises(ValueError):
            Signature(7, 6)
        with pytest.raises(ValueError):
            Signature(-1, 0)

    def test_metric_sign(self):
        sig = Signature(1, 2)
        assert sig.metric_sign(0b001) == 1
        assert sig.metric_sign(0b010) == -1
        assert sig.metric_sign(0b110) == 1


class TestBladeProduct:
    def test_generator_square_positive(self):
        assert blade_product(0b01, 0b01, Signature(2, 0)) == (1, 0)

    def test_anticommutation(self):
        assert blade_product(0b10, 0b01, Signature(2, 0)) == (-1, 0b11)

    def test_mixed_signature_contraction(self):
        # e12 * e1 = -e2 in Cl(1,1), frozen from the string oracle
        assert bubble_blade_product(0b11, 0b01, Signature(1, 1)) == (-1, 0b10)
        assert blade_product(0b11, 0b01, Signature(1, 1)) == (-1, 0b10)

    @pytest.mark.parametrize("sig", all_signatures(5), ids=str)
    def test_exhaustive_against_oracle(self, sig):
        for a in sig.blade_masks():
            for b in sig.blade_masks():
                assert blade_product(a, b, sig) == bubble_blade_product(a, b, sig)

    @pytest.mark.parametrize("sig", all_signatures(5), ids=str)
    def test_generator_relations(self, sig):
        # e_i e_j + e_j e_i = 2 eps_i delta_ij
        for i in range(1, sig.n + 1):
            for j in range(1, sig.n + 1):
                lhs = clifford_mul(E(sig, i), E(sig, j)) + clifford_mul(E(sig, j), E(sig, i))
                expected = Multivector.scalar(sig, 2 * sig.eps(i)) if i == j else Multivector.zero(sig)
                assert lhs == expected


class TestCliffordMul:
    def test_zero_divisor(self):
        sig = Signature(1, 0)
        one = Multivector.one(sig)
        assert clifford_mul(one + E(sig, 1), one - E(sig, 1)).is_zero()

    def test_idempotent_squares(self):
        sig = Signature(3, 0)
        f = Fraction(1, 2) * (Multivector.one(sig) + E(sig, 1))
        assert clifford_mul(f, f) == f

    def test_signature_mismatch(self):
        with pytest.raises(SignatureMismatchError):
            clifford_mul(Multivector.one(Signature(1, 0)), Multivector.one(Signature(0, 1)))

    def test_unit_is_two_sided(self):
        rng = Random(7)
        one = Multivector.one(CL21)
        for _ in range(20):
            u = random_multivector(CL21, rng)
            assert clifford_mul(one, u) == u == clifford_mul(u, one)

    def test_associativity_random_triples(self):
        rng = Random(11)
        for _ in range(100):
            u, v, w = (random_multivector(CL21, rng) for _ in range(3))
            assert clifford_mul(clifford_mul(u, v), w) == clifford_mul(u, clifford_mul(v, w))

    @given(u=multivectors(CL22), v=multivectors(CL22), w=multivectors(CL22))
    @settings(max_examples=40)
    def test_bilinear(self, u, v, w):
        assert clifford_mul(u + v, w) == clifford_mul(u, w) + clifford_mul(v, w)
        assert clifford_mul(w, u + v) == clifford_mul(w, u) + clifford_mul(w, v)


class TestWedge:
    def test_repeated_factor(self):
        sig = Signature(2, 0)
        assert wedge(E(sig, 1), E(sig, 1)).is_zero()

    def test_basic(self):
        sig = Signature(2, 0)
        assert wedge(E(sig, 1), E(sig, 2)) == Multivector.blade(sig, 0b11)

    def test_oracle_exhaustive(self):
        sig = Signature(2, 2)
        for a in sig.blade_masks():
            for b in sig.blade_masks():
                sign, mask = bubble_wedge(a, b)
                got = wedge(Multivector.blade(sig, a), Multivector.blade(sig, b))
                want = Multivector.blade(sig, mask, sign) if sign else Multivector.zero(sig)
                assert got == want

    def test_signature_independent(self):
        rng = Random(3)
        for _ in range(20):
            terms = random_multivector(Signature(4, 0), rng)
            other = random_multivector(Signature(4, 0), rng)
            moved = Multivector(Signature(0, 4), dict(terms.terms()))
            omoved = Multivector(Signature(0, 4), dict(other.terms()))
            assert dict(wedge(terms, other).terms()) == dict(wedge(moved, omoved).terms())

    def test_grades_add(self):
        sig = Signature(3, 0)
        w = wedge(Multivector.blade(sig, 0b011), E(sig, 3))
        assert w == Multivector.blade(sig, 0b111)


class TestInnerAndDual:
    def test_diagonal_values(self):
        sig = Signature(1, 1)
        assert inner(E(sig, 1), E(sig, 1)) == 1
        assert inner(E(sig, 2), E(sig, 2)) == -1
        assert inner(E(sig, 1), E(sig, 2)) == 0

    @pytest.mark.parametrize("sig", all_signatures(5), ids=str)
    def test_dual_basis_orthonormality(self, sig):
        # <metric_involution(e_I), e_J> = delta_IJ
        for a in sig.blade_masks():
            ta = metric_involution(Multivector.blade(sig, a))
            for b in sig.blade_masks():
                expected = 1 if a == b else 0
                assert inner(ta, Multivector.blade(sig, b)) == expected

    def test_dual_pairing_examples(self):
        sig = Signature(2, 2)
        phi = metric_involution(E(sig, 1))
        assert dual_pairing(phi, E(sig, 1)) == 1
        assert dual_pairing(phi, E(sig, 2)) == 0

    @given(u=multivectors(CL22), v=multivectors(CL22))
    @settings(max_examples=40)
    def test_dual_pairing_is_symmetric_coordinate_sum(self, u, v):
        expected = sum((cu * v.coeff(m) for m, cu in u.terms()), Fraction(0))
        assert dual_pairing(u, v) == expected == dual_pairing(v, u)

    @given(u=multivectors(CL22), v=multivectors(CL22))
    @settings(max_examples=40)
    def test_inner_symmetric(self, u, v):
        assert inner(u, v) == inner(v, u)


class TestVectorMetricMap:
    def test_split_signature(self):
        sig = Signature(1, 1)
        assert metric_involution_vector(E(sig, 1)) == E(sig, 1)
        assert metric_involution_vector(E(sig, 2)) == -E(sig, 2)

    def test_euclidean_identity(self):
        sig = Signature(3, 0)
        x = E(sig, 1) + 2 * E(sig, 3)
        assert metric_involution_vector(x) == x

    def test_anti_euclidean_negation(self):
        sig = Signature(0, 3)
        x = E(sig, 1) - 3 * E(sig, 2)
        assert metric_involution_vector(x) == -x

    def test_rejects_non_vectors(self):
        sig = Signature(2, 0)
        with pytest.raises(ValueError):
            metric_involution_vector(Multivector.one(sig))
        with pytest.raises(ValueError):
            metric_involution_vector(Multivector.one(sig) + E(sig, 1))

    def test_zero_passes(self):
        sig = Signature(2, 0)
        assert metric_involution_vector(Multivector.zero(sig)).is_zero()


class TestInvolutions:
    def test_blade_signs(self):
        sig = Signature(2, 0)
        e12 = Multivector.blade(sig, 0b11)
        e1 = E(sig, 1)
        assert reversion(e12) == -e12
        assert grade_involution(e1) == -e1
        assert conjugation(e1) == -e1
        assert grade_involution(e12) == e12
        assert conjugation(e12) == -e12

    @given(u=multivectors(CL22), v=multivectors(CL22))
    @settings(max_examples=60)
    def test_anti_automorphisms(self, u, v):
        uv = clifford_mul(u, v)
        assert reversion(uv) == clifford_mul(reversion(v), reversion(u))
        assert conjugation(uv) == clifford_mul(conjugation(v), conjugation(u))
        assert transposition(uv) == clifford_mul(transposition(v), transposition(u))

    @given(u=multivectors(CL22), v=multivectors(CL22))
    @settings(max_examples=60)
    def test_automorphisms(self, u, v):
        uv = clifford_mul(u, v)
        assert grade_involution(uv) == clifford_mul(grade_involution(u), grade_involution(v))
        assert metric_involution(uv) == clifford_mul(metric_involution(u), metric_involution(v))

    @pytest.mark.parametrize("sig", all_signatures(4), ids=str)
    def test_involutive_on_blades(self, sig):
        for mask in sig.blade_masks():
            b = Multivector.blade(sig, mask)
            for fn in (grade_involution, reversion, conjugation, metric_involution, transposition):
                assert fn(fn(b)) == b

    def test_conjugation_composes(self):
        rng = Random(5)
        for _ in range(30):
            u = random_multivector(CL22, rng)
            assert conjugation(u) == grade_involution(reversion(u)) == reversion(grade_involution(u))

    @pytest.mark.parametrize("sig", all_signatures(6), ids=str)
    def test_transposition_factorization_on_blades(self, sig):
        # transposition = metric_involution o reversion = reversion o metric_involution
        for mask in sig.blade_masks():
            b = Multivector.blade(sig, mask)
            assert transposition(b) == metric_involution(reversion(b))
            assert transposition(b) == reversion(metric_involution(b))

    def test_transposition_factorization_random(self):
        rng = Random(13)
        sig = Signature(3, 2)
        for _ in range(100):
            u = random_multivector(sig, rng)
            assert transposition(u) == metric_involution(reversion(u))

    def test_euclidean_cases(self):
        rng = Random(2)
        sig = Signature(4, 0)
        for _ in range(25):
            u = random_multivector(sig, rng)
            assert transposition(u) == reversion(u)
            assert metric_involution(u) == u

    def test_anti_euclidean_cases(self):
        rng = Random(2)
        sig = Signature(0, 4)
        for _ in range(25):
            u = random_multivector(sig, rng)
            assert transposition(u) == conjugation(u)
            assert metric_involution(u) == grade_involution(u)

    def test_split_example(self):
        sig = Signature(1, 1)
        e12 = Multivector.blade(sig, 0b11)
        assert transposition(e12) == e12

    @pytest.mark.parametrize("sig", all_signatures(6), ids=str)
    def test_monomial_inversion(self, sig):
        # transposition sends every signed basis monomial to its inverse
        one = Multivector.one(sig)
        for mask in sig.blade_masks():
            for sign in (1, -1):
                m = Multivector.blade(sig, mask, sign)
                assert clifford_mul(transposition(m), m) == one


class TestInvLex:
    def test_two_generators(self):
        assert sort_invlex([3, 1, 0, 2]) == [0, 1, 2, 3]

    def test_three_generators_full_order(self):
        # 1, e1, e2, e12, e3, e13, e23, e123
        assert sort_invlex(range(8)) == [0b000, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111]

    def test_grade_one_slice(self):
        masks = sort_invlex([0b100, 0b001, 0b010])
        assert masks == [0b001, 0b010, 0b100]

    def test_unit_first(self):
        assert sort_invlex([5, 0, 3])[0] == 0

    def test_multivector_iteration_follows_invlex(self):
        sig = Signature(2, 1)
        u = Multivector(sig, {0b110: 1, 0b001: 2, 0b000: 3})
        assert [m for m, _ in u.terms()] == [0b000, 0b001, 0b110]


class TestLeftMulMatrix:
    def test_identity_operator(self):
        sig = Signature(2, 0)
        assert left_mul_matrix(Multivector.one(sig)) == linalg.identity(4)

    def test_single_generator(self):
        sig = Signature(1, 0)
        mat = left_mul_matrix(E(sig, 1))
        assert mat == [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]

    def test_multiplicative(self):
        rng = Random(17)
        sig = Signature(2, 1)
        for _ in range(10):
            u = random_multivector(sig, rng)
            v = random_multivector(sig, rng)
            assert linalg.mat_mul(left_mul_matrix(u), left_mul_matrix(v)) == left_mul_matrix(clifford_mul(u, v))

    @pytest.mark.parametrize("sig", all_signatures(4), ids=str)
    def test_transpose_is_transposition(self, sig):
        rng = Random(f"lmul:{sig}")
        for _ in range(12):
            u = random_multivector(sig, rng)
            assert linalg.transpose(left_mul_matrix(u)) == left_mul_matrix(transposition(u))


class TestMultivectorBasics:
    def test_no_zero_terms_stored(self):
        sig = Signature(1, 0)
        u = Multivector(sig, {0: 1, 1: 0})
        assert u.masks() == [0]
        assert (u - u).is_zero()

    def test_zero_grade_is_none(self):
        assert Multivector.zero(Signature(1, 1)).grade() is None

    def test_mixed_grade_raises(self):
        sig = Signature(2, 0)
        with pytest.raises(ValueError):
            (Multivector.one(sig) + E(sig, 1)).grade()

    def test_homogeneous_grade(self):
        sig = Signature(3, 0)
        assert Multivector.blade(sig, 0b101).grade() == 2

    def test_str_forms(self):
        sig = Signature(2, 1)
        u = Multivector(sig, {0: Fraction(1, 2), 0b11: -1, 0b100: Fraction(3, 4)})
        assert str(u) == "1/2 - e12 + 3/4*e3"
        assert str(Multivector.zero(sig)) == "0"

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            Multivector(Signature(1, 0), {0: 0.5})

    def test_hash_and_eq(self):
        sig = Signature(1, 1)
        a = Multivector(sig, {1: Fraction(2, 4)})
        b = Multivector(sig, {1: Fraction(1, 2)})
        assert a == b and hash(a) == hash(b)

    @given(sig=small_signatures(), data=st.data())
    @settings(max_examples=30)
    def test_addition_group(self, sig, data):
        u = data.draw(multivectors(sig))
        v = data.draw(multivectors(sig))
        assert u + v == v + u
        assert (u + v) - v == u
