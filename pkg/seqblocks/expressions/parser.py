# ----------------------------------------------------------------------------
#  File:        parser.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Recursive descent parser for the sequence expression language
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

"""
Parser for sequence expressions.

Grammar (whitespace-insensitive)::

    expr      := term (('+' | '-') term)*
    term      := unary (('*' | '/') unary)*
    unary     := ('-' | '+') unary | power
    power     := atom (('^' | '**') unary)?
    atom      := NUMBER | 'n' | 'sinq' '(' 'n' ')' | 'altsign' '(' 'n' ')'
               | 'piecewise' '(' 'mod' INTEGER ';' expr (',' expr)* ')'
               | '(' expr ')'

``sinq(n)`` is sin(n*pi/2), ``altsign(n)`` is (-1)^n and
``piecewise(mod m; e_0, ..., e_{m-1})`` selects ``e_{n mod m}``.
Exponents must be constant integers; division is only allowed by a nonzero
constant or a monomial ``c*n^k``.
"""

from dataclasses import dataclass
from fractions import Fraction

import regex
from loguru import logger

from ..errors import ExpressionSyntaxError, InvalidDivisorError, NonConstantExponentError

TOKEN_PATTERN = regex.compile(
    r"(?P<space>\s+)"
    r"|(?P<number>\d+(?:\.\d+)?)"
    r"|(?P<ident>[A-Za-z_]\w*)"
    r"|(?P<op>\*\*|[-+*/^();,])"
)

BUILTINS = ("sinq", "altsign")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


# ---------------------------------------------------------------------------
# Syntax tree
# ---------------------------------------------------------------------------

class SeqExpr:
    """Base class for expression nodes. ``at(n)`` evaluates the node exactly."""

    def at(self, n):
        raise NotImplementedError


@dataclass(frozen=True)
class Num(SeqExpr):
    value: Fraction

    def at(self, n):
        return self.value

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Index(SeqExpr):
    def at(self, n):
        return Fraction(n)

    def __str__(self):
        return "n"


@dataclass(frozen=True)
class Neg(SeqExpr):
    operand: SeqExpr

    def at(self, n):
        return -self.operand.at(n)

    def __str__(self):
        return f"Neg({self.operand})"


@dataclass(frozen=True)
class BinOp(SeqExpr):
    left: SeqExpr
    right: SeqExpr

    def __str__(self):
        return f"{type(self).__name__}({self.left}, {self.right})"


class Add(BinOp):
    def at(self, n):
        return self.left.at(n) + self.right.at(n)


class Sub(BinOp):
    def at(self, n):
        return self.left.at(n) - self.right.at(n)


class Mul(BinOp):
    def at(self, n):
        return self.left.at(n) * self.right.at(n)


class Div(BinOp):
    def at(self, n):
        return self.left.at(n) / self.right.at(n)


@dataclass(frozen=True)
class Pow(SeqExpr):
    base: SeqExpr
    exponent: int

    def at(self, n):
        return self.base.at(n) ** self.exponent

    def __str__(self):
        return f"Pow({self.base}, {self.exponent})"


@dataclass(frozen=True)
class SinQ(SeqExpr):
    def at(self, n):
        return Fraction((0, 1, 0, -1)[n % 4])

    def __str__(self):
        return "sinq(n)"


@dataclass(frozen=True)
class AltSign(SeqExpr):
    def at(self, n):
        return Fraction(1 if n % 2 == 0 else -1)

    def __str__(self):
        return "altsign(n)"


@dataclass(frozen=True)
class Piecewise(SeqExpr):
    modulus: int
    branches: tuple

    def at(self, n):
        return self.branches[n % self.modulus].at(n)

    def __str__(self):
        return f"piecewise(mod {self.modulus}; {', '.join(str(b) for b in self.branches)})"


def monomial_of(node):
    """
    Return ``(coefficient, exponent)`` when the node is structurally c*n^k.

    Args:
        node: Expression node

    Returns:
        tuple or None: The monomial, or None for anything else
    """
    if isinstance(node, Num):
        return node.value, 0
    if isinstance(node, Index):
        return Fraction(1), 1
    if isinstance(node, Neg):
        inner = monomial_of(node.operand)
        return None if inner is None else (-inner[0], inner[1])
    if isinstance(node, Mul):
        left, right = monomial_of(node.left), monomial_of(node.right)
        if left is None or right is None:
            return None
        return left[0] * right[0], left[1] + right[1]
    if isinstance(node, Div):
        left, right = monomial_of(node.left), monomial_of(node.right)
        if left is None or right is None or right[0] == 0:
            return None
        return left[0] / right[0], left[1] - right[1]
    if isinstance(node, Pow):
        inner = monomial_of(node.base)
        if inner is None or (inner[0] == 0 and node.exponent < 0):
            return None
        return inner[0] ** node.exponent, inner[1] * node.exponent
    return None


# ---------------------------------------------------------------------------
# Tokenizer and parser
# ---------------------------------------------------------------------------

def tokenize(text):
    """
    Split text into tokens carrying UTF-8 byte offsets.

    Args:
        text: Source text

    Returns:
        list: Tokens, terminated by an ``end`` token
    """
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        offset = len(text[:position].encode("utf-8"))
        if match is None:
            raise ExpressionSyntaxError(f"unexpected character {text[position]!r}", offset)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), offset))
        position = match.end()
    tokens.append(Token("end", "", len(text.encode("utf-8"))))
    return tokens


class Parser:
    """Recursive descent parser over the token list of one expression."""

    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0
        self.exponent_depth = 0

    @property
    def current(self):
        return self.tokens[self.position]

    def _advance(self):
        token = self.current
        self.position += 1
        return token

    def _accept(self, *texts):
        if self.current.kind in ("op", "ident") and self.current.text in texts:
            return self._advance()
        return None

    def _expect(self, text):
        token = self._accept(text)
        if token is None:
            self._fail(f"expected {text!r}", (text,))
        return token

    def _fail(self, message, expected):
        found = self.current.text or "end of input"
        raise ExpressionSyntaxError(f"{message}, found {found!r}", self.current.offset, expected)

    def parse(self):
        if self.current.kind == "end":
            self._fail("empty expression", ("expression",))
        node = self._expr()
        if self.current.kind != "end":
            self._fail("unexpected trailing input", ("+", "-", "*", "/", "^", "end of input"))
        return node

    def _expr(self):
        node = self._term()
        while True:
            if self._accept("+"):
                node = Add(node, self._term())
            elif self._accept("-"):
                node = Sub(node, self._term())
            else:
                return node

    def _term(self):
        node = self._unary()
        while True:
            if self._accept("*"):
                node = Mul(node, self._unary())
            elif self.current.text == "/" and self.current.kind == "op":
                offset = self._advance().offset
                divisor = self._unary()
                self._check_divisor(divisor, offset)
                node = Div(node, divisor)
            else:
                return node

    def _unary(self):
        if self._accept("-"):
            return Neg(self._unary())
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        operator = self._accept("^", "**")
        if operator is None:
            return base
        self.exponent_depth += 1
        try:
            exponent_node = self._unary()
        finally:
            self.exponent_depth -= 1
        exponent = constant_value(exponent_node)
        if exponent is None or exponent.denominator != 1:
            raise NonConstantExponentError(
                f"exponent {exponent_node} is not a constant integer", operator.offset + 1
            )
        exponent = int(exponent)
        if exponent < 0:
            inner = monomial_of(base)
            if inner is None or inner[0] == 0:
                raise InvalidDivisorError(
                    f"negative power of {base}, which is not a nonzero constant or c*n^k",
                    operator.offset,
                )
        return Pow(base, exponent)

    def _atom(self):
        token = self.current
        if token.kind == "number":
            self._advance()
            return Num(Fraction(token.text))
        if self._accept("("):
            node = self._expr()
            self._expect(")")
            return node
        if token.kind == "ident":
            if token.text == "n":
                self._advance()
                return Index()
            if token.text in BUILTINS:
                self._advance()
                self._expect("(")
                if self.current.kind != "ident" or self.current.text != "n":
                    self._fail(f"{token.text} only accepts the index variable", ("n",))
                self._advance()
                self._expect(")")
                return SinQ() if token.text == "sinq" else AltSign()
            if token.text == "piecewise":
                self._advance()
                return self._piecewise()
            if self.exponent_depth:
                raise NonConstantExponentError(
                    f"exponent {token.text!r} is not a constant integer", token.offset
                )
            self._fail(f"unknown identifier {token.text!r}", ("n", "sinq", "altsign", "piecewise"))
        self._fail("expected an operand", ("number", "n", "sinq", "altsign", "piecewise", "("))

    def _piecewise(self):
        self._expect("(")
        self._expect("mod")
        token = self.current
        if token.kind != "number" or not token.text.isdigit() or int(token.text) < 1:
            self._fail("piecewise modulus must be a positive integer", ("integer",))
        modulus = int(self._advance().text)
        self._expect(";")
        branches = [self._expr()]
        while self._accept(","):
            branches.append(self._expr())
        if len(branches) != modulus:
            raise ExpressionSyntaxError(
                f"piecewise(mod {modulus}) needs {modulus} branches, got {len(branches)}",
                self.current.offset,
                (")",) if len(branches) > modulus else (",",),
            )
        self._expect(")")
        return Piecewise(modulus, tuple(branches))

    def _check_divisor(self, divisor, offset):
        inner = monomial_of(divisor)
        if inner is None:
            raise InvalidDivisorError(
                f"cannot divide by {divisor}; only nonzero constants and c*n^k are allowed", offset
            )
        if inner[0] == 0:
            raise InvalidDivisorError("division by zero", offset)


def constant_value(node):
    """Fold a node free of the index variable to a rational, else None."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        inner = constant_value(node.operand)
        return None if inner is None else -inner
    if isinstance(node, BinOp):
        left, right = constant_value(node.left), constant_value(node.right)
        if left is None or right is None:
            return None
        if isinstance(node, Add):
            return left + right
        if isinstance(node, Sub):
            return left - right
        if isinstance(node, Mul):
            return left * right
        return left / right if right != 0 else None
    if isinstance(node, Pow):
        base = constant_value(node.base)
        if base is None or (base == 0 and node.exponent < 0):
            return None
        return base ** node.exponent
    return None


def parse(text):
    """
    Parse a sequence expression.

    Args:
        text: Expression source, e.g. ``"n*(sinq(n)-1)"``

    Returns:
        SeqExpr: Syntax tree

    Raises:
        ExpressionError: On syntax errors, non-constant exponents or bad divisors
    """
    tree = Parser(text).parse()
    logger.debug(f"Parsed {text!r} as {tree}")
    return tree
