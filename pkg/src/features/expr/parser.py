"""
Expression Parser
Recursive-descent parser for real expressions in x

Grammar:
    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?
    atom   := number | 'x' | name '(' expr ')' | '(' expr ')'

'^' is right-associative and binds tighter than unary minus, so -x^2 is
-(x^2). U+2212 is accepted as a minus sign.
"""
import math
import re
from dataclasses import dataclass
from typing import List

from src.errors import ParseError

from .nodes import (
    FUNCTIONS, Add, Call, Constant, Div, Expr, Mul, Neg, Pow, Sub, Variable,
)

_NUMBER = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_OPERATORS = {'+': '+', '-': '-', '−': '-', '*': '*', '/': '/', '^': '^', '(': '(', ')': ')'}

_ATOM_START = ('number', 'x', 'function', '(')


@dataclass(frozen=True)
class Token:
    kind: str  # 'number', 'name', an operator symbol, or 'end'
    text: str
    offset: int  # byte offset in the UTF-8 source


def tokenize(text: str) -> List[Token]:
    """
    Split expression text into tokens

    Args:
        text: Expression source

    Returns:
        Tokens, terminated by an 'end' token

    Raises:
        ParseError: On a character that starts no token
    """
    tokens: List[Token] = []
    position = 0

    def byte_offset(index: int) -> int:
        return len(text[:index].encode('utf-8'))

    while position < len(text):
        char = text[position]
        if char.isspace():
            position += 1
            continue

        number = _NUMBER.match(text, position)
        if number:
            tokens.append(Token('number', number.group(), byte_offset(position)))
            position = number.end()
            continue

        name = _NAME.match(text, position)
        if name:
            tokens.append(Token('name', name.group(), byte_offset(position)))
            position = name.end()
            continue

        if char in _OPERATORS:
            tokens.append(Token(_OPERATORS[char], char, byte_offset(position)))
            position += 1
            continue

        raise ParseError(f"unexpected character {char!r}", byte_offset(position), _ATOM_START)

    tokens.append(Token('end', '', byte_offset(len(text))))
    return tokens


class Parser:
    """Recursive-descent parser over a token list"""

    def __init__(self, text: str):
        """
        Initialize the parser

        Args:
            text: Expression source
        """
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            self._fail(f"expected {kind!r}", (kind,))
        return self._advance()

    def _fail(self, message: str, expected) -> None:
        found = self.current.text or 'end of input'
        raise ParseError(f"{message}, found {found!r}", self.current.offset, expected)

    def parse(self) -> Expr:
        """
        Parse the whole input

        Raises:
            ParseError: If the text is not a complete expression
        """
        result = self._expr()
        if self.current.kind != 'end':
            self._fail("unexpected trailing input", ('+', '-', '*', '/', '^', 'end'))
        return result

    def _expr(self) -> Expr:
        node = self._term()
        while self.current.kind in ('+', '-'):
            operator = self._advance().kind
            right = self._term()
            node = Add(node, right) if operator == '+' else Sub(node, right)
        return node

    def _term(self) -> Expr:
        node = self._factor()
        while self.current.kind in ('*', '/'):
            operator = self._advance().kind
            right = self._factor()
            node = Mul(node, right) if operator == '*' else Div(node, right)
        return node

    def _factor(self) -> Expr:
        if self.current.kind == '-':
            self._advance()
            return Neg(self._factor())
        return self._power()

    def _power(self) -> Expr:
        base = self._atom()
        if self.current.kind == '^':
            self._advance()
            return Pow(base, self._factor())
        return base

    def _atom(self) -> Expr:
        token = self.current

        if token.kind == 'number':
            value = float(token.text)
            if not math.isfinite(value):
                self._fail("number literal overflows a double", ('number',))
            self._advance()
            return Constant(value)

        if token.kind == 'name':
            if token.text == 'x':
                self._advance()
                return Variable()
            if token.text not in FUNCTIONS:
                self._fail(f"unknown name {token.text!r}", ('x',) + tuple(FUNCTIONS))
            self._advance()
            self._expect('(')
            argument = self._expr()
            self._expect(')')
            return Call(token.text, argument)

        if token.kind == '(':
            self._advance()
            inner = self._expr()
            self._expect(')')
            return inner

        self._fail("expected an operand", _ATOM_START)


def parse(text: str) -> Expr:
    """
    Parse expression text into an AST

    Args:
        text: Expression source, e.g. "x^2 + 1"

    Returns:
        Expression tree

    Raises:
        ParseError: With the byte offset and the set of expected tokens
    """
    return Parser(text).parse()


def evaluate(expr: Expr, x: float) -> float:
    """
    Evaluate an expression at a point

    Raises:
        EvalError: Outside the expression's domain
    """
    return expr.evaluate(x)
