#!/usr/bin/env python3

"""Exact Expression Parser

This module parses and evaluates exact algebraic constants for the command line, for model files
and for RealAlgebraicField.parse(). The grammar (recursive descent):

    program   := statement (';' statement)* [';']
    statement := [identifier '='] expr
    expr      := term (('+' | '-') term)*
    term      := factor (('*' | '/') factor)*
    factor    := '-' factor | atom ['^' ['-'] integer]
    atom      := number | identifier | 'sqrt(' expr ')' | 'root(' polynomial ',' integer ')'
                 | '(' expr ')'
    polynomial := '[' number (',' number)* ']' | expr in the variable x

Numbers are integers or decimals (exact). A root(...) polynomial is either a list of coefficients
in ascending order ([-2, 0, 1] is x^2 - 2) or an expression in x ("x^2 - 2"). The root index
counts real roots from 0 in ascending order. Identifiers refer to earlier statements.

str() of a parsed expression is fully parenthesized and parses back to an equal expression.
"""

from fractions import Fraction
import re
import common
from ordered_field import FieldError
from polynomial import IntPolynomial, PolynomialError
from realalgebraic import RealAlgebraic, RealAlgebraicError, RealAlgebraicField, ra_real_root

__copyright__ = '''
    Copyright (C) 2019 AccRel developers

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <https://www.gnu.org/licenses/>.
'''
__author__ = common.AUTHOR
__credits__ = common.CREDITS
__license__ = common.LICENSE
__version__ = common.VERSION
__maintainer__ = common.MAINTAINER
__email__ = common.EMAIL
__status__ = common.STATUS

TokenKind = common.enum(Number='number', Identifier='identifier', Operator='operator', End='end')

POLYNOMIAL_VARIABLE = 'x'

_TOKEN_PATTERN = re.compile(r'\s*(?:(?P<number>\d+(?:\.\d+)?)|(?P<identifier>[A-Za-z_]\w*)|'
                            r'(?P<operator>[-+*/^()\[\],;=]))')

class ExpressionError(Exception):
    """Exceptions generated by this module."""

class ExpressionSyntaxError(ExpressionError):
    """The text is not in the grammar."""
    def __init__(self, position, expected):
        """Initialize the ExpressionSyntaxError instance.

        position is the offset into the text, expected the set of tokens that would have fit.
        """
        self.position = position
        self.expected = tuple(sorted(expected))
        names = ["'%s'" % token if len(token) == 1 else token for token in self.expected]
        super().__init__('Syntax error at position %s: expected %s' %
                         (position, common.pretty_list(names, op='or')))

class UnboundVariable(ExpressionError):
    """An identifier that no earlier statement bound."""

class Token():
    """One token: its kind, its text and where it starts."""
    def __init__(self, kind, text, position):
        """Initialize the Token instance."""
        self.kind = kind
        self.text = text
        self.position = position

    def __repr__(self):
        return 'Token(%s, %r, %s)' % (self.kind, self.text, self.position)

def tokenize(text):
    """The tokens of text, ending with an End token."""
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break

        match = _TOKEN_PATTERN.match(text, position)
        if not match:
            raise ExpressionSyntaxError(position, ('number', 'identifier', 'operator'))
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()

    tokens.append(Token(TokenKind.End, '', len(text)))
    return tokens

class Expression():
    """Base class of the syntax tree nodes. Equality is structural."""
    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        if type(other) is not type(self): #pylint: disable=unidiomatic-typecheck
            return NotImplemented
        return self._key() == other._key() #pylint: disable=protected-access

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, self)

class Number(Expression):
    """An exact literal. The literal text is kept for printing."""
    def __init__(self, text):
        self.text = text
        self.value = Fraction(text)

    def _key(self):
        return self.value

    def __str__(self):
        return self.text

class Variable(Expression):
    """A name bound by an earlier statement."""
    def __init__(self, name):
        self.name = name

    def _key(self):
        return self.name

    def __str__(self):
        return self.name

class Negate(Expression):
    """-operand."""
    def __init__(self, operand):
        self.operand = operand

    def _key(self):
        return self.operand

    def __str__(self):
        return '(-%s)' % self.operand

class BinaryOp(Expression):
    """left op right with op one of + - * /."""
    def __init__(self, op, left, right):
        self.op = op
        self.left = left
        self.right = right

    def _key(self):
        return (self.op, self.left, self.right)

    def __str__(self):
        return '(%s %s %s)' % (self.left, self.op, self.right)

class Power(Expression):
    """base ^ exponent, exponent an integer (negative means the inverse)."""
    def __init__(self, base, exponent):
        self.base = base
        self.exponent = exponent

    def _key(self):
        return (self.base, self.exponent)

    def __str__(self):
        return '(%s^%s)' % (self.base, self.exponent)

class Sqrt(Expression):
    """sqrt(argument)."""
    def __init__(self, argument):
        self.argument = argument

    def _key(self):
        return self.argument

    def __str__(self):
        return 'sqrt(%s)' % self.argument

class Root(Expression):
    """The index-th real root of an integer polynomial."""
    def __init__(self, polynomial, index):
        self.polynomial = polynomial
        self.index = index

    def _key(self):
        return (tuple(self.polynomial.coefficients), self.index)

    def __str__(self):
        return 'root(%s, %s)' % (self.polynomial, self.index)

class Statement():
    """name = expression, or a bare expression (name is None)."""
    def __init__(self, name, expression):
        self.name = name
        self.expression = expression

    def __repr__(self):
        return 'Statement(%s, %s)' % (self.name, self.expression)

    def __str__(self):
        if self.name is None:
            return str(self.expression)
        return '%s = %s' % (self.name, self.expression)

class Parser():
    """Recursive descent over a token list."""
    KEYWORDS = ('sqrt', 'root')

    def __init__(self, text):
        """Initialize the Parser instance."""
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        """The current token."""
        return self.tokens[self.index]

    def _advance(self):
        token = self.token
        if token.kind != TokenKind.End:
            self.index += 1
        return token

    def _accept(self, text):
        if self.token.kind == TokenKind.Operator and self.token.text == text:
            return self._advance()
        return None

    def _expect(self, text):
        token = self._accept(text)
        if token is None:
            raise ExpressionSyntaxError(self.token.position, (text,))
        return token

    def _integer(self):
        negative = self._accept('-') is not None
        token = self.token
        if token.kind != TokenKind.Number or '.' in token.text:
            raise ExpressionSyntaxError(token.position, ('integer',))
        self._advance()
        return -int(token.text) if negative else int(token.text)

    def _end(self):
        if self.token.kind != TokenKind.End:
            raise ExpressionSyntaxError(self.token.position, ('end of input',))

    def program(self):
        """Parse statements up to the end of the text."""
        statements = [self.statement()]
        while self._accept(';'):
            if self.token.kind == TokenKind.End:
                break
            statements.append(self.statement())
        if self.token.kind != TokenKind.End:
            raise ExpressionSyntaxError(self.token.position, (';', 'end of input'))
        return statements

    def statement(self):
        """[identifier '='] expr"""
        token = self.token
        following = self.tokens[self.index + 1] if self.index + 1 < len(self.tokens) else None
        if (token.kind == TokenKind.Identifier and token.text not in self.KEYWORDS and
                following is not None and following.text == '='):
            self._advance()
            self._advance()
            return Statement(token.text, self.expr())
        return Statement(None, self.expr())

    def expr(self):
        """term (('+' | '-') term)*"""
        node = self.term()
        while self.token.kind == TokenKind.Operator and self.token.text in '+-':
            op = self._advance().text
            node = BinaryOp(op, node, self.term())
        return node

    def term(self):
        """factor (('*' | '/') factor)*"""
        node = self.factor()
        while self.token.kind == TokenKind.Operator and self.token.text in '*/':
            op = self._advance().text
            node = BinaryOp(op, node, self.factor())
        return node

    def factor(self):
        """'-' factor | atom ['^' integer]"""
        if self._accept('-'):
            return Negate(self.factor())
        node = self.atom()
        if self._accept('^'):
            node = Power(node, self._integer())
        return node

    def atom(self):
        """A number, a variable, a sqrt(), a root() or a parenthesized expression."""
        token = self.token
        if token.kind == TokenKind.Number:
            self._advance()
            return Number(token.text)

        if token.kind == TokenKind.Identifier:
            self._advance()
            if token.text == 'sqrt':
                self._expect('(')
                node = Sqrt(self.expr())
                self._expect(')')
                return node
            if token.text == 'root':
                self._expect('(')
                polynomial = self.polynomial()
                self._expect(',')
                index = self._integer()
                self._expect(')')
                return Root(polynomial, index)
            return Variable(token.text)

        if self._accept('('):
            node = self.expr()
            self._expect(')')
            return node

        raise ExpressionSyntaxError(token.position, ('number', 'identifier', '('))

    def polynomial(self):
        """A coefficient list or an expression in x, as an IntPolynomial."""
        position = self.token.position
        if self._accept('['):
            coefficients = [self._signed_number()]
            while self._accept(','):
                coefficients.append(self._signed_number())
            self._expect(']')
        else:
            coefficients = polynomial_coefficients(self.expr())

        try:
            return IntPolynomial.from_rational_coefficients(coefficients)
        except PolynomialError:
            raise ExpressionSyntaxError(position, ('polynomial',))

    def _signed_number(self):
        negative = self._accept('-') is not None
        token = self.token
        if token.kind != TokenKind.Number:
            raise ExpressionSyntaxError(token.position, ('number',))
        self._advance()
        value = Fraction(token.text)
        return -value if negative else value

def _poly_mul(first, second):
    if not first or not second:
        return []
    product = [Fraction(0)] * (len(first) + len(second) - 1)
    for i, left in enumerate(first):
        for j, right in enumerate(second):
            product[i + j] += left * right
    return product

def _poly_add(first, second, sign=1):
    size = max(len(first), len(second))
    first = first + [Fraction(0)] * (size - len(first))
    second = second + [Fraction(0)] * (size - len(second))
    return [left + sign * right for left, right in zip(first, second)]

def polynomial_coefficients(expression):
    """Ascending rational coefficients of an expression in x.

    Only + - *, division by constants and nonnegative powers are allowed.
    """
    if isinstance(expression, Number):
        return [expression.value]
    if isinstance(expression, Variable):
        if expression.name != POLYNOMIAL_VARIABLE:
            raise ExpressionError('Polynomials are written in %s, not %s' %
                                  (POLYNOMIAL_VARIABLE, expression.name))
        return [Fraction(0), Fraction(1)]
    if isinstance(expression, Negate):
        return [-coefficient for coefficient in polynomial_coefficients(expression.operand)]
    if isinstance(expression, Power):
        if expression.exponent < 0:
            raise ExpressionError('Negative power in a polynomial')
        base = polynomial_coefficients(expression.base)
        result = [Fraction(1)]
        for _ in range(expression.exponent):
            result = _poly_mul(result, base)
        return result
    if isinstance(expression, BinaryOp):
        left = polynomial_coefficients(expression.left)
        right = polynomial_coefficients(expression.right)
        if expression.op == '+':
            return _poly_add(left, right)
        if expression.op == '-':
            return _poly_add(left, right, -1)
        if expression.op == '*':
            return _poly_mul(left, right)
        if any(right[1:]) or not right or right[0] == 0:
            raise ExpressionError('Polynomials may only be divided by nonzero constants')
        return [coefficient / right[0] for coefficient in left]
    raise ExpressionError('%s is not a polynomial' % expression)

def parse_expression(text):
    """Parse a single expression."""
    parser = Parser(text)
    node = parser.expr()
    parser._end() #pylint: disable=protected-access
    return node

def parse_program(text):
    """Parse a ';' separated list of statements."""
    return Parser(text).program()

def parse_polynomial(text):
    """Parse a polynomial (coefficient list or expression in x) on its own."""
    parser = Parser(text)
    polynomial = parser.polynomial()
    parser._end() #pylint: disable=protected-access
    return polynomial

def _power(ctx, value, exponent):
    if exponent < 0:
        return ctx.inv(_power(ctx, value, -exponent))
    result = ctx.one()
    while exponent:
        if exponent & 1:
            result = ctx.mul(result, value)
        exponent >>= 1
        if exponent:
            value = ctx.square(value)
    return result

def evaluate(expression, ctx=None, bindings=None):
    """Value of an expression in a field context (real algebraic numbers by default).

    Errors from the arithmetic (DivisionByZero, NegativeArgument, ...) propagate.
    """
    ctx = ctx or RealAlgebraicField()
    bindings = bindings or {}

    if isinstance(expression, Number):
        return ctx.from_rational(expression.value)

    if isinstance(expression, Variable):
        try:
            return bindings[expression.name]
        except KeyError:
            raise UnboundVariable('"%s" is not bound' % expression.name)

    if isinstance(expression, Negate):
        return ctx.neg(evaluate(expression.operand, ctx, bindings))

    if isinstance(expression, BinaryOp):
        left = evaluate(expression.left, ctx, bindings)
        right = evaluate(expression.right, ctx, bindings)
        return ctx.arith({'+': 'add', '-': 'sub', '*': 'mul', '/': 'div'}[expression.op],
                         left, right)

    if isinstance(expression, Power):
        return _power(ctx, evaluate(expression.base, ctx, bindings), expression.exponent)

    if isinstance(expression, Sqrt):
        return ctx.sqrt(evaluate(expression.argument, ctx, bindings))

    if isinstance(expression, Root):
        try:
            value = ra_real_root(expression.polynomial, expression.index)
        except (RealAlgebraicError, PolynomialError) as e:
            raise ExpressionError(str(e))
        if ctx.is_element(value):
            return value
        if not value.is_rational:
            raise FieldError('%s is irrational, not an element of the %s field' %
                             (expression, ctx.name))
        return ctx.from_rational(value.fast_path)

    raise ExpressionError('Cannot evaluate %r' % (expression,))

def evaluate_program(text, ctx=None, bindings=None):
    """Run the statements of text. Returns the bindings and the value of the last statement."""
    bindings = dict(bindings or {})
    value = None
    for statement in parse_program(text):
        value = evaluate(statement.expression, ctx, bindings)
        if statement.name is not None:
            bindings[statement.name] = value
    return bindings, value

def evaluate_text(text):
    """The real algebraic number a program text evaluates to."""
    _, value = evaluate_program(text, RealAlgebraicField())
    if not isinstance(value, RealAlgebraic):
        value = RealAlgebraic.from_rational(value)
    return value
