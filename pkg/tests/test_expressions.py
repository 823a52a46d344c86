"""Expression parser tests: grammar, error offsets, evaluation, and the
parse-print-parse round trip."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from cliffordlab import (
    Multivector,
    ParseError,
    Signature,
    eval_expression,
    evaluate,
    format_expression,
    parse_expression,
    transposition,
    wedge,
)
from cliffordlab.expressions import BinaryOp, BladeAtom, Involution, Literal, Negate

CL30 = Signature(3, 0)
CL11 = Signature(1, 1)
E = Multivector.basis_vector


class TestParseEvaluate:
    def test_idempotent_expression(self):
        f = eval_expression("1/2*(1+e1)", CL30)
        assert f == Fraction(1, 2) * (Multivector.one(CL30) + E(CL30, 1))

    def test_bracket_blade(self):
        assert eval_expression("e[1,2]", CL30) == Multivector.blade(CL30, 0b11)

    def test_transposition_call(self):
        value = eval_expression("tp(e1*e2)", CL11)
        assert value == Multivector.blade(CL11, 0b11)
        assert value == transposition(Multivector.blade(CL11, 0b11))

    def test_all_involutions(self):
        for name in ("rev", "gi", "conj", "tp", "te"):
            assert not eval_expression(f"{name}(e1+e12)", CL30).is_zero()

    def test_wedge_vs_product(self):
        assert eval_expression("e1^e1", CL30).is_zero()
        assert eval_expression("e1*e1", CL30) == Multivector.one(CL30)
        assert eval_expression("e1^e2", CL30) == wedge(E(CL30, 1), E(CL30, 2))

    def test_same_precedence_left_assoc(self):
        # (e1^e2)*e2 = e12 e2 = e1, not e1^(e2*e2) = e1
        tree = parse_expression("e1^e2*e3", CL30)
        assert isinstance(tree, BinaryOp) and tree.op == "*"
        assert isinstance(tree.left, BinaryOp) and tree.left.op == "^"

    def test_additive_chain(self):
        value = eval_expression("1 - e1 + 2*e2 - 1/3", CL30)
        expected = (
            Multivector.scalar(CL30, Fraction(2, 3))
            - E(CL30, 1)
            + 2 * E(CL30, 2)
        )
        assert value == expected

    def test_unary_minus(self):
        assert eval_expression("-e1", CL30) == -E(CL30, 1)
        assert eval_expression("--e1", CL30) == E(CL30, 1)
        assert eval_expression("3*-e1", CL30) == -3 * E(CL30, 1)

    def test_whitespace_insignificant(self):
        a = eval_expression("1/2 * ( 1 + e1 )", CL30)
        b = eval_expression("1/2*(1+e1)", CL30)
        assert a == b

    def test_rational_literal_is_one_token(self):
        # 1/2*e1 is (1/2)*e1, not 1/(2*e1)
        assert eval_expression("1/2*e1", CL30) == Fraction(1, 2) * E(CL30, 1)

    def test_nested_functions(self):
        value = eval_expression("rev(tp(e12))", CL11)
        assert value == Multivector.blade(CL11, 0b11) * -1


class TestParseErrors:
    def test_unexpected_character(self):
        with pytest.raises(ParseError) as err:
            parse_expression("1 + $", CL30)
        assert err.value.offset == 4

    def test_unbalanced_paren(self):
        with pytest.raises(ParseError):
            parse_expression("(1+e1", CL30)

    def test_index_out_of_range(self):
        with pytest.raises(ParseError) as err:
            parse_expression("e4", CL30)
        assert err.value.offset == 0
        with pytest.raises(ParseError):
            parse_expression("e[4]", CL30)

    def test_indices_must_increase(self):
        with pytest.raises(ParseError):
            parse_expression("e21", CL30)
        with pytest.raises(ParseError):
            parse_expression("e[2,2]", CL30)

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_expression("1/0", CL30)

    def test_unknown_function(self):
        with pytest.raises(ParseError) as err:
            parse_expression("norm(e1)", CL30)
        assert err.value.offset == 0

    def test_trailing_tokens(self):
        with pytest.raises(ParseError):
            parse_expression("e1 e2", CL30)

    def test_compact_blades_need_small_dimension(self):
        big = Signature(5, 5)
        with pytest.raises(ParseError):
            parse_expression("e12", big)
        assert eval_expression("e[1,2]", big) == Multivector.blade(big, 0b11)

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_expression("", CL30)


class TestRoundTrip:
    CORPUS = [
        "1/2*(1+e1)",
        "e1^e2*e3",
        "-(1+e1)",
        "tp(e1*e2)-rev(e12)",
        "1-2/3+e123",
        "conj(gi(e1))^e2",
        "3*-e1",
    ]

    @pytest.mark.parametrize("text", CORPUS)
    def test_corpus(self, text):
        tree = parse_expression(text, CL30)
        printed = format_expression(tree, CL30)
        assert parse_expression(printed, CL30) == tree
        assert evaluate(tree, CL30) == eval_expression(printed, CL30)

    def test_bracket_form_for_large_dimension(self):
        big = Signature(6, 5)
        tree = parse_expression("e[1,2]^e[10]", big)
        printed = format_expression(tree, big)
        assert "e[" in printed
        assert parse_expression(printed, big) == tree


def expression_trees(sig: Signature, depth: int = 3):
    """Hypothesis strategy over canonical ASTs for the given signature."""
    literals = st.builds(
        Literal,
        st.builds(
            Fraction,
            st.integers(min_value=0, max_value=9),
            st.integers(min_value=1, max_value=9),
        ),
    )
    indices = st.lists(
        st.integers(min_value=1, max_value=sig.n), min_size=1, max_size=sig.n, unique=True
    ).map(lambda ix: BladeAtom(tuple(sorted(ix))))
    atoms = literals | indices
    return st.recursive(
        atoms,
        lambda children: st.one_of(
            st.builds(Negate, children),
            st.builds(
                BinaryOp, st.sampled_from(["+", "-", "*", "^"]), children, children
            ),
            st.builds(
                Involution, st.sampled_from(["rev", "gi", "conj", "tp", "te"]), children
            ),
        ),
        max_leaves=8,
    )


class TestRoundTripProperty:
    @given(tree=expression_trees(Signature(2, 1)))
    @settings(max_examples=150)
    def test_print_parse_identity(self, tree):
        printed = format_expression(tree, Signature(2, 1))
        assert parse_expression(printed, Signature(2, 1)) == tree
