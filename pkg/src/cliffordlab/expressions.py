"""Parser and evaluator for multivector expressions.

Grammar (whitespace insignificant):

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '^') factor)*
    factor   := rational | blade | func '(' expr ')' | '(' expr ')' | '-' factor
    rational := int ['/' int]
    blade    := 'e' digits | 'e[' int (',' int)* ']'
    func     := 'rev' | 'gi' | 'conj' | 'tp' | 'te'

'*' is the Clifford product, '^' the exterior product, both left
associative at the same precedence.  The compact blade form 'e13' reads one
index per digit and is only available while n <= 9; 'e[1,13]' covers the
rest.  Blade indices must be strictly increasing and within the signature.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .core import (
    Multivector,
    Signature,
    conjugation,
    grade_involution,
    mask_from_indices,
    metric_involution,
    reversion,
    transposition,
    wedge,
)


class ParseError(ValueError):
    """Syntax or range error, carrying the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class BladeAtom:
    indices: tuple[int, ...]


@dataclass(frozen=True)
class Negate:
    operand: "Expression"


@dataclass(frozen=True)
class BinaryOp:
    op: str  # '+', '-', '*', '^'
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Involution:
    name: str  # rev | gi | conj | tp | te
    operand: "Expression"


Expression = Union[Literal, BladeAtom, Negate, BinaryOp, Involution]

INVOLUTIONS: dict[str, Callable[[Multivector], Multivector]] = {
    "rev": reversion,
    "gi": grade_involution,
    "conj": conjugation,
    "tp": transposition,
    "te": metric_involution,
}


# -- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<bladebracket>e\[\s*\d+\s*(?:,\s*\d+\s*)*\])
  | (?P<blade>e\d+)
  | (?P<name>[a-z]+)
  | (?P<int>\d+)
  | (?P<op>[-+*^/()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup or ""
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.sig = sig
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.peek()
        if tok is None or tok.kind != "op" or tok.text != op:
            offset = tok.offset if tok else len(self.text)
            raise ParseError(f"expected {op!r}", offset)
        self.pos += 1

    def parse(self) -> Expression:
        expr = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok.text!r}", tok.offset)
        return expr

    def expr(self) -> Expression:
        node = self.term()
        while (tok := self.peek()) and tok.kind == "op" and tok.text in "+-":
            self.pos += 1
            node = BinaryOp(tok.text, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.factor()
        while (tok := self.peek()) and tok.kind == "op" and tok.text in "*^":
            self.pos += 1
            node = BinaryOp(tok.text, node, self.factor())
        return node

    def factor(self) -> Expression:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        if tok.kind == "op" and tok.text == "-":
            self.pos += 1
            return Negate(self.factor())
        if tok.kind == "op" and tok.text == "(":
            self.pos += 1
            inner = self.expr()
            self.expect_op(")")
            return inner
        if tok.kind == "int":
            return Literal(self.rational())
        if tok.kind == "blade":
            self.pos += 1
            return self.blade_atom(tok, tuple(int(ch) for ch in tok.text[1:]))
        if tok.kind == "bladebracket":
            self.pos += 1
            inner = tok.text[2:-1]
            indices = tuple(int(part) for part in inner.split(","))
            return self.blade_atom(tok, indices)
        if tok.kind == "name":
            if tok.text not in INVOLUTIONS:
                raise ParseError(f"unknown function {tok.text!r}", tok.offset)
            self.pos += 1
            self.expect_op("(")
            inner = self.expr()
            self.expect_op(")")
            return Involution(tok.text, inner)
        raise ParseError(f"unexpected token {tok.text!r}", tok.offset)

    def rational(self) -> Fraction:
        num_tok = self.advance()
        value = int(num_tok.text)
        tok = self.peek()
        if tok and tok.kind == "op" and tok.text == "/":
            self.pos += 1
            den_tok = self.peek()
            if den_tok is None or den_tok.kind != "int":
                offset = den_tok.offset if den_tok else len(self.text)
                raise ParseError("expected integer denominator", offset)
            self.pos += 1
            if int(den_tok.text) == 0:
                raise ParseError("zero denominator", den_tok.offset)
            return Fraction(value, int(den_tok.text))
        return Fraction(value)

    def blade_atom(self, tok: _Token, indices: tuple[int, ...]) -> BladeAtom:
        if any(b <= a for a, b in zip(indices, indices[1:])) or not indices:
            raise ParseError("blade indices must be strictly increasing", tok.offset)
        if indices[0] < 1 or indices[-1] > self.sig.n:
            raise ParseError(
                f"blade index out of range for {self.sig}", tok.offset
            )
        if tok.kind == "blade" and self.sig.n > 9:
            raise ParseError(
                "compact blade form needs n <= 9; use e[i,j,...]", tok.offset
            )
        return BladeAtom(indices)


def parse_expression(text: str, sig: Signature) -> Expression:
    """Parse an expression; raises ParseError with a byte offset on failure."""
    return _Parser(text, sig).parse()


# -- evaluation and printing -------------------------------------------------


def evaluate(expr: Expression, sig: Signature) -> Multivector:
    if isinstance(expr, Literal):
        return Multivector.scalar(sig, expr.value)
    if isinstance(expr, BladeAtom):
        return Multivector.blade(sig, mask_from_indices(expr.indices))
    if isinstance(expr, Negate):
        return -evaluate(expr.operand, sig)
    if isinstance(expr, Involution):
        return INVOLUTIONS[expr.name](evaluate(expr.operand, sig))
    if isinstance(expr, BinaryOp):
        left = evaluate(expr.left, sig)
        right = evaluate(expr.right, sig)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        return wedge(left, right)
    raise TypeError(f"not an expression node: {expr!r}")


def eval_expression(text: str, sig: Signature) -> Multivector:
    return evaluate(parse_expression(text, sig), sig)


_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "^": 2}


def format_expression(expr: Expression, sig: Signature | None = None) -> str:
    """Canonical text form; parsing it again reproduces the same tree.

    Pass the target signature so blades use the bracket form whenever the
    compact form would be rejected on re-parse (n > 9).
    """
    compact_ok = sig is None or sig.n <= 9

    def fmt(node: Expression, parent_prec: int) -> str:
        if isinstance(node, Literal):
            text = str(node.value)
            # a fraction is one token, never a division: safe unparenthesized
            return text
        if isinstance(node, BladeAtom):
            if compact_ok and node.indices[-1] <= 9:
                return "e" + "".join(str(i) for i in node.indices)
            return "e[" + ",".join(str(i) for i in node.indices) + "]"
        if isinstance(node, Negate):
            inner = fmt(node.operand, 3)
            return f"-{inner}"
        if isinstance(node, Involution):
            return f"{node.name}({fmt(node.operand, 0)})"
        if isinstance(node, BinaryOp):
            prec = _PRECEDENCE[node.op]
            left = fmt(node.left, prec - 1)
            # left-associative: the right child needs strictly higher binding
            right = fmt(node.right, prec)
            text = f"{left}{node.op}{right}"
            if prec <= parent_prec:
                return f"({text})"
            return text
        raise TypeError(f"not an expression node: {node!r}")

    return fmt(expr, 0)
