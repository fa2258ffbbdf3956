"""Integer polynomial expressions in x, parsed by precedence climbing.

Grammar: integers, the variable x, binary + - *, unary -, parentheses and ^ with
a nonnegative integer literal as exponent. Implicit multiplication is not accepted.
"""

import re
from collections import namedtuple
from typing import List

from ..decomposition import Ball
from ..errors import ParseError
from ..polynomial import IntPolynomial

Token = namedtuple('Token', ['kind', 'text', 'position'])

# binding power and associativity of each binary operator
OPERATORS = {
    '+': (1, 'left'),
    '-': (1, 'left'),
    '*': (2, 'left'),
    '^': (3, 'right'),
}
UNARY_MINUS_POWER = 3

TOKEN_PATTERN = re.compile(
    r"(?P<space>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()])|(?P<bad>.)")
BALL_PATTERN = re.compile(r"\s*(-?\d+)\s*\+\s*2\s*\^\s*(\d+)\s*(?:\*\s*Z2\s*)?$")


def tokenize(source: str) -> List[Token]:
    result = []
    for match in TOKEN_PATTERN.finditer(source):
        kind = match.lastgroup
        if kind == 'space':
            continue
        if kind == 'bad':
            raise ParseError(f"Unexpected character {match.group()!r}", match.start())
        if kind == 'name' and match.group() != 'x':
            raise ParseError(f"Unknown identifier {match.group()!r}; the only variable is x",
                             match.start())
        result.append(Token(kind, match.group(), match.start()))
    result.append(Token('end', '', len(source)))
    return result


class ExpressionParser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != 'end':
            self.index += 1
        return token

    def parse(self) -> IntPolynomial:
        if self.current.kind == 'end':
            raise ParseError("Empty expression", 0)
        result = self.expression(0)
        if self.current.kind != 'end':
            raise ParseError(f"Unexpected {self.current.text!r}", self.current.position)
        return result

    def expression(self, min_power: int) -> IntPolynomial:
        left = self.atom()
        while True:
            token = self.current
            if token.kind != 'op' or token.text not in OPERATORS:
                return left
            power, associativity = OPERATORS[token.text]
            if power < min_power:
                return left
            self.advance()
            if token.text == '^':
                left = left ** self.exponent()
                continue
            right = self.expression(power + 1 if associativity == 'left' else power)
            if token.text == '+':
                left = left + right
            elif token.text == '-':
                left = left - right
            else:
                left = left * right

    def exponent(self) -> int:
        token = self.advance()
        if token.kind != 'int':
            raise ParseError("Exponent must be a nonnegative integer literal", token.position)
        if self.current.kind == 'op' and self.current.text == '^':
            raise ParseError("Chained exponents are ambiguous; use parentheses", self.current.position)
        return int(token.text)

    def atom(self) -> IntPolynomial:
        token = self.advance()
        if token.kind == 'int':
            return IntPolynomial.constant(int(token.text))
        if token.kind == 'name':
            return IntPolynomial.identity()
        if token.text == '-':
            return -self.expression(UNARY_MINUS_POWER)
        if token.text == '(':
            inner = self.expression(0)
            closing = self.advance()
            if closing.text != ')':
                raise ParseError("Expected ')'", closing.position)
            return inner
        if token.kind == 'end':
            raise ParseError("Unexpected end of expression", token.position)
        raise ParseError(f"Unexpected {token.text!r}", token.position)


def parse_poly(source: str) -> IntPolynomial:
    return ExpressionParser(source).parse()


def parse_balls(source: str) -> List[Ball]:
    """Comma-separated "c+2^k" terms, each the ball c + 2^k Z_2."""
    balls = []
    offset = 0
    for term in source.split(','):
        match = BALL_PATTERN.match(term)
        if match is None:
            raise ParseError(f"Expected a ball like '5+2^3', got {term.strip()!r}", offset)
        level = int(match.group(2))
        if level < 1:
            raise ParseError(f"Ball level must be at least 1, got {level}", offset)
        balls.append(Ball.of(int(match.group(1)), level))
        offset += len(term) + 1
    return balls
