#!/usr/bin/env python3

"""Ordered Field Classes

This module contains the quantity structure: an abstract ordered field interface (FieldContext)
and its rational instance, plus the mechanical ordered field axiom checker.

Elements are plain values (Fraction for the rational field, RealAlgebraic for the real algebraic
field). They carry no reference to their context, so every operation goes through the context,
which checks membership and raises ContextMismatch when handed a foreign element.

The real algebraic context lives in realalgebraic, next to the number type it wraps. Use
context_by_name() to get either one by the name the command line uses.
"""

from fractions import Fraction
import math
import random
import common
import defaults
from journal import null_journal
from polynomial import RationalInterval
from reports import AxiomReport

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

Ordering = common.enum(LT=-1, EQ=0, GT=1)

class FieldError(Exception):
    """Exceptions generated by field operations."""

class DivisionByZero(FieldError, ZeroDivisionError):
    """Inverse of, or division by, zero."""

class ContextMismatch(FieldError):
    """An element was handed to a context it does not belong to."""

class SqrtUnavailableInContext(FieldError):
    """The context has no square root for this (nonnegative) element."""

class NegativeArgument(FieldError):
    """Square root of a negative element."""

class SampleConfig():
    """Deterministic sampling configuration: a seed and how many elements to draw."""
    def __init__(self, seed=defaults.SEED, count=defaults.ORDERED_FIELD_SAMPLES):
        """Initialize the SampleConfig instance."""
        self.seed = seed
        self.count = count

    def rng(self, salt=''):
        """A fresh random generator for this configuration.

        The salt separates independent streams drawn from the same seed.
        """
        return random.Random('%s:%s' % (self.seed, salt))

class FieldContext():
    """Abstract ordered field.

    Subclasses provide is_element(), the arithmetic primitives (_add, _mul, _neg, _inv), compare()
    and the conversion helpers. The public methods check membership first.
    """
    name = None
    exact = True
    real_closed = False

    def __repr__(self):
        return '%s()' % self.__class__.__name__

    def is_element(self, value):
        """Whether value belongs to this context."""
        raise NotImplementedError

    def check(self, *values):
        """Raise ContextMismatch unless every value belongs to this context."""
        for value in values:
            if not self.is_element(value):
                raise ContextMismatch('%r is not an element of the %s field' % (value, self.name))

    def from_rational(self, value):
        """The field element equal to a rational."""
        raise NotImplementedError

    def zero(self):
        """Additive identity."""
        return self.from_rational(0)

    def one(self):
        """Multiplicative identity."""
        return self.from_rational(1)

    def add(self, first, second):
        """first + second."""
        self.check(first, second)
        return self._add(first, second)

    def mul(self, first, second):
        """first * second."""
        self.check(first, second)
        return self._mul(first, second)

    def neg(self, value):
        """-value."""
        self.check(value)
        return self._neg(value)

    def inv(self, value):
        """1 / value."""
        self.check(value)
        if self.is_zero(value):
            raise DivisionByZero('Inverse of zero')
        return self._inv(value)

    def sub(self, first, second):
        """first - second."""
        self.check(first, second)
        return self._add(first, self._neg(second))

    def div(self, first, second):
        """first / second."""
        self.check(first, second)
        if self.is_zero(second):
            raise DivisionByZero('Division by zero')
        return self._mul(first, self._inv(second))

    def compare(self, first, second):
        """Ordering.LT, Ordering.EQ or Ordering.GT."""
        raise NotImplementedError

    def leq(self, first, second):
        """first <= second."""
        self.check(first, second)
        return self.compare(first, second) != Ordering.GT

    def equal(self, first, second):
        """Exact equality."""
        self.check(first, second)
        return self.compare(first, second) == Ordering.EQ

    def is_zero(self, value):
        """value == 0."""
        return self.compare(value, self.zero()) == Ordering.EQ

    def sign(self, value):
        """-1, 0 or 1."""
        self.check(value)
        return self.compare(value, self.zero())

    def abs(self, value):
        """|value|."""
        return self.neg(value) if self.sign(value) < 0 else value

    def square(self, value):
        """value * value."""
        return self.mul(value, value)

    def sqrt(self, value):
        """The nonnegative square root, if the context has it."""
        raise NotImplementedError

    def arith(self, op, first, second=None):
        """Dispatch a named field operation (add, mul, neg, inv, sub, div)."""
        if op in ('neg', 'inv'):
            return getattr(self, op)(first)
        if op in ('add', 'mul', 'sub', 'div'):
            return getattr(self, op)(first, second)
        raise FieldError('Unknown field operation "%s"' % op)

    def approximate(self, value, digits):
        """A RationalInterval of width at most 10^-digits containing value."""
        raise NotImplementedError

    def parse(self, text):
        """Element from its text form."""
        raise NotImplementedError

    def format(self, value):
        """Text form of an element."""
        raise NotImplementedError

    def to_json(self, value):
        """JSON-ready form of an element."""
        return self.format(value)

    def sample(self, rng):
        """Draw one element."""
        raise NotImplementedError

    def _add(self, first, second):
        raise NotImplementedError

    def _mul(self, first, second):
        raise NotImplementedError

    def _neg(self, value):
        raise NotImplementedError

    def _inv(self, value):
        raise NotImplementedError

def sample_rational(rng):
    """A small rational: an integer, a dyadic rational, or a general fraction."""
    kind = rng.randrange(3)
    if kind == 0:
        return Fraction(rng.randint(-10, 10))
    if kind == 1:
        return Fraction(rng.randint(-64, 64), 2 ** rng.randint(0, 6))
    return Fraction(rng.randint(-20, 20), rng.randint(1, 20))

class RationalField(FieldContext):
    """The field of rational numbers. Elements are Fractions (ints are accepted too)."""
    name = 'rational'

    def is_element(self, value):
        return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

    def from_rational(self, value):
        return Fraction(value)

    def _add(self, first, second):
        return Fraction(first) + second

    def _mul(self, first, second):
        return Fraction(first) * second

    def _neg(self, value):
        return -Fraction(value)

    def _inv(self, value):
        return 1 / Fraction(value)

    def compare(self, first, second):
        self.check(first, second)
        return (first > second) - (first < second)

    def sqrt(self, value):
        """Exact square root; only perfect squares have one in this field."""
        self.check(value)
        value = Fraction(value)
        if value < 0:
            raise NegativeArgument('Square root of negative %s' % value)

        numerator_root = math.isqrt(value.numerator)
        denominator_root = math.isqrt(value.denominator)
        if (numerator_root ** 2 != value.numerator or
                denominator_root ** 2 != value.denominator):
            raise SqrtUnavailableInContext('%s has no rational square root' % value)
        return Fraction(numerator_root, denominator_root)

    def approximate(self, value, digits):
        return RationalInterval.point(value)

    def parse(self, text):
        """A rational literal, or an expression evaluated in this field.

        Arithmetic errors (DivisionByZero, SqrtUnavailableInContext) propagate; text that is
        not an expression raises FieldError.
        """
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            pass

        # exprparser builds on this module.
        #pylint: disable=import-outside-toplevel
        from exprparser import ExpressionError, evaluate_program
        try:
            _, value = evaluate_program(text, self)
        except ExpressionError as e:
            raise FieldError('Cannot parse rational "%s": %s' % (text, e))
        return Fraction(value)

    def format(self, value):
        return str(Fraction(value))

    def sample(self, rng):
        return sample_rational(rng)

def context_by_name(name):
    """The field context the command line calls name ("rational" or "realalgebraic")."""
    if name == RationalField.name:
        return RationalField()

    # Imported here, realalgebraic itself builds on this module.
    from realalgebraic import RealAlgebraicField #pylint: disable=import-outside-toplevel
    if name == RealAlgebraicField.name:
        return RealAlgebraicField()

    raise FieldError('Unknown field context "%s"' % name)

def field_arith(ctx, op, first, second=None):
    """Exact field operation in ctx."""
    return ctx.arith(op, first, second)

def field_leq(ctx, first, second):
    """Exact truth value of first <= second in ctx."""
    return ctx.leq(first, second)

def sample_elements(ctx, config):
    """config.count elements of ctx, the same ones for the same seed."""
    rng = config.rng(ctx.name)
    return [ctx.sample(rng) for _ in range(config.count)]

def check_ordered_field_axioms(ctx, config, journal=None):
    """Check the ordered field laws on sampled triples. Failures are report content.

    Every sampled element a is paired with its two successors b and c in the sample list, and
    each law is evaluated with exact equality.
    """
    journal = journal or null_journal('field')
    report = AxiomReport('AxOField', context=ctx.name)
    elements = sample_elements(ctx, config)
    journal.log('Checking ordered field laws on %s over the %s field' %
                (common.pluralize('sample', len(elements)), ctx.name))

    zero = ctx.zero()
    one = ctx.one()
    size = len(elements)

    for index, a in enumerate(elements):
        b = elements[(index + 1) % size]
        c = elements[(index + 2) % size]

        def witness(*values, names='abc'):
            return {name: ctx.to_json(value) for name, value in zip(names, values)}

        report.check('additive associativity',
                     ctx.equal(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c))),
                     lambda: witness(a, b, c))
        report.check('additive commutativity', ctx.equal(ctx.add(a, b), ctx.add(b, a)),
                     lambda: witness(a, b))
        report.check('multiplicative associativity',
                     ctx.equal(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c))),
                     lambda: witness(a, b, c))
        report.check('multiplicative commutativity', ctx.equal(ctx.mul(a, b), ctx.mul(b, a)),
                     lambda: witness(a, b))
        report.check('distributivity',
                     ctx.equal(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c))),
                     lambda: witness(a, b, c))
        report.check('additive identity', ctx.equal(ctx.add(a, zero), a), lambda: witness(a))
        report.check('multiplicative identity', ctx.equal(ctx.mul(a, one), a),
                     lambda: witness(a))
        report.check('additive inverse', ctx.equal(ctx.add(a, ctx.neg(a)), zero),
                     lambda: witness(a))
        if not ctx.is_zero(a):
            report.check('multiplicative inverse', ctx.equal(ctx.mul(a, ctx.inv(a)), one),
                         lambda: witness(a))

        a_leq_b = ctx.leq(a, b)
        b_leq_a = ctx.leq(b, a)
        report.check('linearity', a_leq_b or b_leq_a, lambda: witness(a, b))
        report.check('antisymmetry', not (a_leq_b and b_leq_a) or ctx.equal(a, b),
                     lambda: witness(a, b))
        report.check('transitivity',
                     not (a_leq_b and ctx.leq(b, c)) or ctx.leq(a, c),
                     lambda: witness(a, b, c))
        report.check('order translation',
                     not a_leq_b or ctx.leq(ctx.add(a, c), ctx.add(b, c)),
                     lambda: witness(a, b, c))

        for left, right in ((a, b), (ctx.abs(a), ctx.abs(b))):
            positive = ctx.leq(zero, left) and ctx.leq(zero, right)
            report.check('order multiplication',
                         not positive or ctx.leq(zero, ctx.mul(left, right)),
                         lambda left=left, right=right: witness(left, right, names='ab'))

    journal.log('Ordered field laws %s' % ('passed' if report.passed else 'FAILED'))
    return report
