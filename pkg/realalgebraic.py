#!/usr/bin/env python3

"""Real Algebraic Number Classes

This module contains the real closed quantity field: real algebraic numbers with exact
arithmetic, ordering, square roots and roots of odd-degree polynomials.

A RealAlgebraic is a square-free defining polynomial plus an isolator, a rational interval holding
exactly one of its real roots. Defining polynomials are not required to be minimal; equality is
decided by a gcd and a Sturm count instead, so no factoring is ever needed. Rational values always
take the fast path (a linear defining polynomial and the exact Fraction), whatever operation
produced them.

Sums and products come from resultants (see polynomial). The candidate root is then selected by
interval arithmetic on the operands' isolators, refined until exactly one root of the result
polynomial is inside the arithmetic enclosure.
"""

from fractions import Fraction
import math
import common
import defaults
from journal import null_journal
from ordered_field import (DivisionByZero, FieldContext, FieldError, NegativeArgument,
                           Ordering, sample_rational)
from polynomial import (BivariatePolynomial, IntPolynomial, RationalInterval, cauchy_bound,
                        count_real_roots, gcd, isolate_real_roots, refine_interval, resultant,
                        sign, squarefree_part, sturm_sequence)
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

# Radicands of the surds mixed into samples.
SAMPLE_RADICANDS = (2, 3, 5)

class RealAlgebraicError(Exception):
    """Exceptions generated by this module."""

class EvenDegree(RealAlgebraicError):
    """An odd-degree root was asked of an even-degree polynomial."""

class IndexOutOfRange(RealAlgebraicError):
    """The polynomial has fewer real roots than the requested index."""

class RealAlgebraic():
    """A real algebraic number. Instances are immutable; refinement returns new instances."""
    __slots__ = ('defining', 'isolator', 'fast_path', '_sequence')

    def __init__(self, defining, isolator, fast_path=None, sequence=None):
        """Initialize the RealAlgebraic instance.

        Callers are trusted: defining is square-free, primitive, with a positive leading
        coefficient, and isolator holds exactly one of its roots. Use the ra_* functions to
        build values.
        """
        self.defining = defining
        self.isolator = isolator
        self.fast_path = fast_path
        self._sequence = sequence

    @classmethod
    def from_rational(cls, value):
        """The rational value as a real algebraic number."""
        value = Fraction(value)
        isolator = RationalInterval.open(value - Fraction(1, 2), value + Fraction(1, 2))
        return cls(IntPolynomial.from_rational_root(value), isolator, value)

    @property
    def is_rational(self):
        """Whether the value is rational (the fast path is set)."""
        return self.fast_path is not None

    @property
    def sturm(self):
        """Sturm sequence of the defining polynomial, built on first use."""
        if self._sequence is None:
            self._sequence = sturm_sequence(self.defining)
        return self._sequence

    def interval(self):
        """The isolator, or the degenerate interval for a rational."""
        if self.is_rational:
            return RationalInterval.point(self.fast_path)
        return self.isolator

    def refine(self, width):
        """The same number, with an isolator no wider than width."""
        if self.is_rational or self.isolator.width <= width:
            return self
        isolator = refine_interval(self.defining, self.isolator, width, self.sturm)
        if isolator.is_point():
            return RealAlgebraic.from_rational(isolator.lo)
        return RealAlgebraic(self.defining, isolator, None, self._sequence)

    def __repr__(self):
        if self.is_rational:
            return 'RealAlgebraic(%s)' % self.fast_path
        return 'RealAlgebraic(%s, %s)' % (self.defining, self.isolator)

    def __str__(self):
        return RealAlgebraicField().format(self)

    def to_json(self):
        """Exact serialization: the rational, or the defining coefficients and the isolator."""
        if self.is_rational:
            return str(self.fast_path)
        return {'defining': [str(coefficient) for coefficient in self.defining.coefficients],
                'isolator': self.isolator.to_json()}

    @staticmethod
    def _coerce(value):
        if isinstance(value, RealAlgebraic):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return RealAlgebraic.from_rational(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ra_arith('add', self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ra_arith('add', self, ra_arith('neg', other))

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ra_arith('add', other, ra_arith('neg', self))

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ra_arith('mul', self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ra_arith('mul', self, ra_arith('inv', other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ra_arith('mul', other, ra_arith('inv', self))

    def __neg__(self):
        return ra_arith('neg', self)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ra_arith('inv', self) ** (-exponent)

        result = RealAlgebraic.from_rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = ra_arith('mul', result, base)
            exponent >>= 1
            if exponent:
                base = ra_square(base)
        return result

    def _compare(self, other):
        other = self._coerce(other)
        if other is None:
            return None
        return ra_cmp(self, other)

    def __eq__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result == Ordering.EQ

    def __lt__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result == Ordering.LT

    def __le__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result != Ordering.GT

    def __gt__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result == Ordering.GT

    def __ge__(self, other):
        result = self._compare(other)
        return NotImplemented if result is None else result != Ordering.LT

    # Equal values can have different representations.
    __hash__ = None

class _Enclosure():
    """Successively tighter closed enclosures of one value, reusing earlier refinements."""
    def __init__(self, value):
        """Initialize the _Enclosure instance."""
        self.value = value
        self.isolator = value.interval()

    def at(self, width):
        """Closed interval of width at most width (a point for rationals)."""
        if self.value.is_rational or self.isolator.is_point():
            return self.isolator.closure()
        self.isolator = refine_interval(self.value.defining, self.isolator, width,
                                        self.value.sturm)
        return self.isolator.closure()

def _from_root(polynomial, isolator):
    """Build the value of the root of polynomial inside isolator.

    Rational roots are detected exactly: a rational root n/d of an integer polynomial has d
    dividing the leading coefficient, so after refining the isolator below 1/|lc| there is at most
    one candidate multiple of 1/|lc| left to test.
    """
    defining = squarefree_part(polynomial)
    if isolator.is_point():
        return RealAlgebraic.from_rational(isolator.lo)
    if defining.degree == 1:
        return RealAlgebraic.from_rational(Fraction(-defining.coefficients[0], defining.lead))

    sequence = sturm_sequence(defining)
    step = Fraction(1, abs(defining.lead))
    isolator = refine_interval(defining, isolator, step / 2, sequence)
    if isolator.is_point():
        return RealAlgebraic.from_rational(isolator.lo)

    candidate = math.ceil(isolator.lo / step) * step
    if isolator.contains(candidate) and defining.sign_at(candidate) == 0:
        return RealAlgebraic.from_rational(candidate)

    return RealAlgebraic(defining, isolator, None, sequence)

def _select(candidate, enclose):
    """Select the root of candidate that lies in every enclosure enclose(width) returns."""
    candidate = squarefree_part(candidate)
    sequence = sturm_sequence(candidate)
    width = Fraction(1, 4)

    while True:
        box = enclose(width)
        count = count_real_roots(sequence, box)
        if count == 0:
            raise ArithmeticError('Lost the root of %s in %s' % (candidate, box))

        if count == 1:
            for endpoint in (box.lo, box.hi):
                if candidate.sign_at(endpoint) == 0:
                    return RealAlgebraic.from_rational(endpoint)
            return _from_root(candidate, RationalInterval.open(box.lo, box.hi))

        width /= 256

def _add(first, second):
    if first.is_rational and second.is_rational:
        return RealAlgebraic.from_rational(first.fast_path + second.fast_path)
    if first.is_rational:
        first, second = second, first
    if second.is_rational:
        shift = second.fast_path
        if shift == 0:
            return first
        isolator = RationalInterval.open(first.isolator.lo + shift, first.isolator.hi + shift)
        return RealAlgebraic(first.defining.translate(shift).primitive(), isolator)

    candidate = resultant(first.defining,
                          BivariatePolynomial.difference_substitution(second.defining))
    first_enclosure = _Enclosure(first)
    second_enclosure = _Enclosure(second)
    return _select(candidate,
                   lambda width: first_enclosure.at(width) + second_enclosure.at(width))

def _mul(first, second):
    if first.is_rational and second.is_rational:
        return RealAlgebraic.from_rational(first.fast_path * second.fast_path)
    if first.is_rational:
        first, second = second, first
    if second.is_rational:
        factor = second.fast_path
        if factor == 0:
            return RealAlgebraic.from_rational(0)
        if factor == 1:
            return first
        ends = (first.isolator.lo * factor, first.isolator.hi * factor)
        return RealAlgebraic(first.defining.dilate(factor).primitive(),
                             RationalInterval.open(min(ends), max(ends)))

    if first.defining == second.defining and first.isolator == second.isolator:
        return ra_square(first)

    # Neither value is zero, so dropping zero roots keeps both and makes the leading x
    # coefficient of x^m q(y/x) constant.
    candidate = resultant(first.defining.strip_zero_roots(),
                          BivariatePolynomial.quotient_substitution(
                              second.defining.strip_zero_roots()))
    first_enclosure = _Enclosure(first)
    second_enclosure = _Enclosure(second)
    return _select(candidate,
                   lambda width: first_enclosure.at(width) * second_enclosure.at(width))

def _neg(value):
    if value.is_rational:
        return RealAlgebraic.from_rational(-value.fast_path)
    isolator = value.isolator
    return RealAlgebraic(value.defining.reflect().primitive(),
                         RationalInterval(-isolator.hi, -isolator.lo, isolator.hi_open,
                                          isolator.lo_open))

def _inv(value):
    if value.is_rational:
        if value.fast_path == 0:
            raise DivisionByZero('Inverse of zero')
        return RealAlgebraic.from_rational(1 / value.fast_path)

    # Refine until the isolator is on one side of zero.
    isolator = value.isolator
    while isolator.contains(0) or isolator.lo == 0 or isolator.hi == 0:
        isolator = refine_interval(value.defining, isolator, isolator.width / 4, value.sturm)

    return RealAlgebraic(value.defining.reverse().primitive(),
                         RationalInterval.open(1 / isolator.hi, 1 / isolator.lo))

def ra_from_rational(value):
    """The rational value as a real algebraic number."""
    return RealAlgebraic.from_rational(value)

def ra_arith(op, first, second=None):
    """Exact arithmetic: op is add, mul, neg or inv."""
    if op == 'add':
        return _add(first, second)
    if op == 'mul':
        return _mul(first, second)
    if op == 'neg':
        return _neg(first)
    if op == 'inv':
        return _inv(first)
    raise RealAlgebraicError('Unknown operation "%s"' % op)

def ra_square(value):
    """value * value.

    With p(x) = E(x^2) + x O(x^2), the polynomial E(y)^2 - y O(y)^2 has the squares of the roots
    of p as its roots, at no resultant cost.
    """
    if value.is_rational:
        return RealAlgebraic.from_rational(value.fast_path ** 2)

    coefficients = value.defining.coefficients
    even = IntPolynomial(coefficients[0::2])
    odd = IntPolynomial(coefficients[1::2])
    candidate = even * even - IntPolynomial.monomial(1) * odd * odd
    enclosure = _Enclosure(value)
    return _select(candidate, lambda width: enclosure.at(width).square())

def ra_cmp(first, second):
    """Ordering.LT, Ordering.EQ or Ordering.GT, decided exactly."""
    if first.is_rational and second.is_rational:
        return sign(first.fast_path - second.fast_path)

    common_sequence = None
    first_interval = first.interval()
    second_interval = second.interval()

    while True:
        overlap = first_interval.intersection(second_interval)
        if overlap is None:
            return Ordering.LT if first_interval.lo < second_interval.lo else Ordering.GT

        if common_sequence is None:
            common_factor = gcd(first.defining, second.defining)
            common_sequence = sturm_sequence(common_factor) if common_factor.degree >= 1 else ()
        if common_sequence and count_real_roots(common_sequence, overlap) >= 1:
            return Ordering.EQ

        if not first.is_rational:
            first_interval = refine_interval(first.defining, first_interval,
                                             first_interval.width / 2, first.sturm)
        if not second.is_rational:
            second_interval = refine_interval(second.defining, second_interval,
                                              second_interval.width / 2, second.sturm)

def ra_sqrt(value):
    """The nonnegative square root."""
    if ra_cmp(value, RealAlgebraic.from_rational(0)) == Ordering.LT:
        raise NegativeArgument('Square root of negative %s' % value)

    if value.is_rational:
        rational = value.fast_path
        if rational == 0:
            return value
        numerator_root = math.isqrt(rational.numerator)
        denominator_root = math.isqrt(rational.denominator)
        if (numerator_root ** 2 == rational.numerator and
                denominator_root ** 2 == rational.denominator):
            return RealAlgebraic.from_rational(Fraction(numerator_root, denominator_root))

    candidate = value.defining.squared_argument()
    enclosure = _Enclosure(value)

    def enclose(width):
        box = enclosure.at(width)
        return _sqrt_interval(box, width)

    return _select(candidate, enclose)

def _sqrt_interval(box, width):
    """Closed interval containing the square roots of the nonnegative part of box."""
    scale = 1
    while Fraction(1, scale) > width / 4:
        scale *= 2

    lo = max(box.lo, Fraction(0))
    hi = max(box.hi, Fraction(0))
    lower = Fraction(math.isqrt(math.floor(lo * scale * scale)), scale)
    upper = Fraction(math.isqrt(math.ceil(hi * scale * scale)) + 1, scale)
    return RationalInterval(lower, upper)

def ra_real_root(polynomial, index):
    """The index-th real root (ascending) of a nonzero polynomial."""
    roots = isolate_real_roots(polynomial)
    if not 0 <= index < len(roots):
        raise IndexOutOfRange('%s has %s, no root with index %s' %
                              (polynomial, common.pluralize('real root', len(roots)) or
                               'no real roots', index))
    return _from_root(polynomial, roots[index])

def ra_odd_root(polynomial, index=0):
    """The index-th real root of an odd-degree polynomial (there is always at least one)."""
    if polynomial.is_zero() or polynomial.degree % 2 == 0:
        raise EvenDegree('%s does not have odd degree' % polynomial)
    return ra_real_root(polynomial, index)

def ra_approx(value, digits):
    """Interval of width at most 10^-digits containing the value."""
    if value.is_rational:
        return RationalInterval.point(value.fast_path)
    return value.refine(Fraction(1, 10 ** digits)).interval()

def ra_decimal(value, digits):
    """Decimal approximation with the given number of digits after the point (text)."""
    interval = ra_approx(value, digits + 1)
    scaled = round(interval.midpoint * 10 ** digits)
    text = str(abs(scaled)).rjust(digits + 1, '0')
    if digits:
        text = text[:-digits] + '.' + text[-digits:]
    return ('-' if scaled < 0 else '') + text

def ra_root_index(value):
    """Position of the value among the real roots of its defining polynomial."""
    bound = cauchy_bound(value.defining)
    below = RationalInterval(-bound, value.isolator.lo, True, False)
    return count_real_roots(value.sturm, below)

class RealAlgebraicField(FieldContext):
    """The real closed field of real algebraic numbers."""
    name = 'realalgebraic'
    real_closed = True

    def is_element(self, value):
        return isinstance(value, RealAlgebraic)

    def from_rational(self, value):
        return RealAlgebraic.from_rational(value)

    def _add(self, first, second):
        return ra_arith('add', first, second)

    def _mul(self, first, second):
        return ra_arith('mul', first, second)

    def _neg(self, value):
        return ra_arith('neg', value)

    def _inv(self, value):
        return ra_arith('inv', value)

    def compare(self, first, second):
        self.check(first, second)
        return ra_cmp(first, second)

    def is_zero(self, value):
        return value.is_rational and value.fast_path == 0

    def sqrt(self, value):
        self.check(value)
        return ra_sqrt(value)

    def approximate(self, value, digits):
        return ra_approx(value, digits)

    def parse(self, text):
        # exprparser evaluates into this module.
        #pylint: disable=import-outside-toplevel
        from exprparser import ExpressionError, evaluate_text
        try:
            return evaluate_text(text)
        except ExpressionError as e:
            raise FieldError('Cannot parse "%s": %s' % (text, e))

    def format(self, value):
        """Text that parses back to the same value: the rational, or root(polynomial, index)."""
        if value.is_rational:
            return str(value.fast_path)
        return 'root(%s, %s)' % (value.defining, ra_root_index(value))

    def to_json(self, value):
        return value.to_json()

    def sample(self, rng):
        """A rational, a rational multiple of a surd, or a rational plus a surd."""
        kind = rng.randrange(3)
        rational = sample_rational(rng)
        if kind == 0:
            return RealAlgebraic.from_rational(rational)

        surd = ra_sqrt(RealAlgebraic.from_rational(rng.choice(SAMPLE_RADICANDS)))
        if kind == 1:
            return ra_arith('mul', surd, RealAlgebraic.from_rational(rational or 1))
        return ra_arith('add', surd, RealAlgebraic.from_rational(rational))

def random_odd_polynomial(rng, degrees=defaults.RCF_ODD_DEGREES,
                          bound=defaults.RCF_COEFFICIENT_BOUND):
    """An odd-degree polynomial with coefficients in [-bound, bound] and nonzero lead."""
    degree = rng.choice(degrees)
    coefficients = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return IntPolynomial(coefficients + [lead])

def check_real_closed(config, odd_count=defaults.RCF_ODD_POLYNOMIALS, journal=None,
                      certificates=None):
    """Check that nonnegative samples have square roots and odd-degree samples have roots.

    config.count nonnegative values are drawn (the first one is 0), and odd_count odd-degree
    polynomials. If certificates is a list, one entry per sample is appended to it.
    """
    journal = journal or null_journal('rcf')
    ctx = RealAlgebraicField()
    report = AxiomReport('real closed', context=ctx.name)
    zero = RealAlgebraic.from_rational(0)

    rng = config.rng('sqrt')
    values = [zero] + [ctx.abs(ctx.sample(rng)) for _ in range(max(config.count - 1, 0))]
    journal.log('Checking square roots of %s' % common.pluralize('value', len(values)))

    for value in values:
        root = ra_sqrt(value)
        passed = ra_cmp(root, zero) != Ordering.LT and ra_square(root) == value
        report.check('square roots', passed,
                     lambda value=value, root=root: {'value': value, 'root': root})
        if certificates is not None:
            certificates.append({'kind': 'sqrt', 'value': value, 'root': root, 'passed': passed})

    rng = config.rng('odd')
    journal.log('Checking roots of %s' % common.pluralize('odd-degree polynomial', odd_count))

    for _ in range(odd_count):
        polynomial = random_odd_polynomial(rng)
        root = ra_odd_root(polynomial, 0)
        passed = _certify_root(polynomial, root)
        report.check('odd-degree roots', passed,
                     lambda polynomial=polynomial, root=root: {'polynomial': str(polynomial),
                                                               'root': root})
        if certificates is not None:
            certificates.append({'kind': 'odd-root', 'polynomial': str(polynomial),
                                 'root': root, 'passed': passed})

    journal.log('Real closedness %s' % ('passed' if report.passed else 'FAILED'))
    return report

def _certify_root(polynomial, root):
    """Sturm-certified membership of a root of polynomial."""
    if root.is_rational:
        return polynomial.sign_at(root.fast_path) == 0

    refined = root.refine(root.isolator.width / 1024)
    interval = refined.isolator
    if count_real_roots(sturm_sequence(polynomial), interval) < 1:
        return False
    base = squarefree_part(polynomial)
    return base.sign_at(interval.lo) * base.sign_at(interval.hi) <= 0
