# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""Polynomials in the exponent symbols over K(x) and exact determinants

A monomial is a tuple of (symbol, exponent) pairs sorted by symbol with
positive exponents; the empty tuple is the monomial 1.
"""
import logging
from collections import defaultdict

from .exceptions import UserError, ValidationError
from .field import QQ
from .polynomial import XPoly, XRat

__all__ = ['AlphaPoly', 'monomial', 'monomial_mul', 'monomial_degree',
    'format_monomial', 'det_cofactor', 'det_fraction_free',
    'signed_maximal_minors']

logger = logging.getLogger(__name__)

# Dimension up to which determinants use cofactor expansion
COFACTOR_LIMIT = 4


def monomial(exponents):
    "Canonical monomial from a mapping symbol -> exponent"
    items = exponents.items() if hasattr(exponents, 'items') else exponents
    return tuple(sorted((s, e) for s, e in items if e))


def monomial_mul(a, b):
    exponents = dict(a)
    for symbol, exponent in b:
        exponents[symbol] = exponents.get(symbol, 0) + exponent
    return monomial(exponents)


def _monomial_div(a, b):
    exponents = dict(a)
    for symbol, exponent in b:
        remaining = exponents.get(symbol, 0) - exponent
        if remaining < 0:
            return None
        exponents[symbol] = remaining
    return monomial(exponents)


def monomial_degree(mono):
    return sum(e for _, e in mono)


def format_monomial(mono):
    if not mono:
        return '1'
    return '*'.join(s if e == 1 else '%s^%s' % (s, e) for s, e in mono)


class AlphaPoly:
    "Sparse polynomial in the exponent symbols with XRat coefficients"
    __slots__ = ('field', 'terms')

    def __init__(self, terms=None, field=QQ):
        self.field = field
        self.terms = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(coeff, XRat):
                coeff = XRat(coeff if isinstance(coeff, XPoly)
                    else XPoly.constant(coeff, field))
            if coeff:
                self.terms[monomial(mono)] = coeff

    @classmethod
    def _make(cls, terms, field):
        poly = cls.__new__(cls)
        poly.field = field
        poly.terms = {m: c for m, c in terms.items() if c}
        return poly

    @classmethod
    def constant(cls, value, field=None):
        if isinstance(value, (XPoly, XRat)):
            field = value.field
        field = field or QQ
        if not isinstance(value, XRat):
            value = XRat(value if isinstance(value, XPoly)
                else XPoly.constant(value, field))
        return cls._make({(): value}, field)

    @classmethod
    def symbol(cls, name, field=QQ):
        return cls._make({((name, 1),): XRat.one(field)}, field)

    @classmethod
    def zero(cls, field=QQ):
        return cls._make({}, field)

    @classmethod
    def one(cls, field=QQ):
        return cls.constant(XRat.one(field))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not m for m in self.terms)

    def constant_term(self):
        return self.terms.get((), XRat.zero(self.field))

    def coefficient(self, mono):
        return self.terms.get(monomial(mono), XRat.zero(self.field))

    def monomials(self):
        "Monomials in canonical order"
        return sorted(self.terms)

    def symbols(self):
        return {s for m in self.terms for s, _ in m}

    def total_degree(self):
        "Total degree in the symbols, -1 for zero"
        return max((monomial_degree(m) for m in self.terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, AlphaPoly):
            if other.field != self.field:
                raise ValidationError(
                    'Cannot combine values over "%s" and "%s".'
                    % (self.field, other.field))
            return other
        if isinstance(other, (XPoly, XRat)):
            return AlphaPoly.constant(other)
        try:
            return AlphaPoly.constant(self.field(other), self.field)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            if mono in terms:
                terms[mono] = terms[mono] + coeff
            else:
                terms[mono] = coeff
        return AlphaPoly._make(terms, self.field)

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly._make({m: -c for m, c in self.terms.items()},
            self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, XRat):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = defaultdict(lambda: XRat.zero(self.field))
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = monomial_mul(ma, mb)
                terms[mono] = terms[mono] + ca * cb
        return AlphaPoly._make(terms, self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = AlphaPoly.one(self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor):
        "Multiply every coefficient by an element of K(x)"
        if not isinstance(factor, XRat):
            factor = XRat(factor if isinstance(factor, XPoly)
                else XPoly.constant(factor, self.field))
        if not factor:
            return AlphaPoly.zero(self.field)
        return AlphaPoly._make({m: c * factor for m, c in self.terms.items()},
            self.field)

    def derive(self):
        "D acts on the coefficients, the symbols are constants"
        return AlphaPoly._make({m: c.derive() for m, c in self.terms.items()},
            self.field)

    def rename(self, old, new):
        "Replace the symbol old by new"
        result = AlphaPoly.zero(self.field)
        for mono, coeff in self.terms.items():
            exponents = defaultdict(int)
            for symbol, exponent in mono:
                exponents[new if symbol == old else symbol] += exponent
            result = result + AlphaPoly._make({monomial(exponents): coeff},
                self.field)
        return result

    def specialize(self, values):
        "Substitute integers (or field elements) for every symbol"
        result = XRat.zero(self.field)
        for mono, coeff in self.terms.items():
            factor = self.field.one
            for symbol, exponent in mono:
                factor = factor * self.field(values[symbol]) ** exponent
            result = result + coeff * factor
        return result

    def evaluate(self, values, x0, convert=lambda value: value):
        """Numeric value at x = x0 with symbol values taken from values

        Coefficients are evaluated exactly at x0 and passed through convert.
        """
        result = 0
        for mono, coeff in self.terms.items():
            term = convert(coeff(x0))
            for symbol, exponent in mono:
                term = term * values[symbol] ** exponent
            result = result + term
        return result

    def _leading(self, symbols):
        return max(self.terms,
            key=lambda m: tuple(dict(m).get(s, 0) for s in symbols))

    def exquo(self, other):
        "Exact quotient in K(x)[symbols], lex order on the sorted symbols"
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError('division by the zero polynomial')
        symbols = sorted(self.symbols() | other.symbols())
        lead = other._leading(symbols)
        lead_coeff = other.terms[lead]
        quotient = AlphaPoly.zero(self.field)
        remainder = self
        while remainder:
            mono = remainder._leading(symbols)
            shift = _monomial_div(mono, lead)
            if shift is None:
                raise UserError('The division of "%s" by "%s" is not exact.'
                    % (self, other))
            step = AlphaPoly._make(
                {shift: remainder.terms[mono] / lead_coeff}, self.field)
            quotient = quotient + step
            remainder = remainder - step * other
        return quotient

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return 'AlphaPoly(%s)' % self

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for mono in self.monomials():
            coeff = self.terms[mono]
            if not mono:
                parts.append('(%s)' % coeff)
            elif coeff == 1:
                parts.append(format_monomial(mono))
            else:
                parts.append('(%s)*%s' % (coeff, format_monomial(mono)))
        return ' + '.join(parts)


def det_cofactor(matrix):
    "Laplace expansion along the first row"
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    result = matrix[0][0] - matrix[0][0]
    for column, entry in enumerate(matrix[0]):
        if not entry:
            continue
        minor = [row[:column] + row[column + 1:] for row in matrix[1:]]
        term = entry * det_cofactor(minor)
        result = result - term if column % 2 else result + term
    return result


def _bareiss(matrix):
    a = [list(row) for row in matrix]
    n = len(a)
    zero = a[0][0] - a[0][0]
    negate = False
    previous = None
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            return zero
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            negate = not negate
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if previous is not None:
                    value = value.exquo(previous)
                a[i][j] = value
        previous = a[k][k]
    return -a[n - 1][n - 1] if negate else a[n - 1][n - 1]


def det_fraction_free(matrix, one=None):
    """Exact determinant of a square matrix

    Entries are XPoly or AlphaPoly (anything with ring operations and
    exquo).  Small matrices use cofactor expansion, larger ones Bareiss
    elimination whose divisions are exact.
    """
    n = len(matrix)
    if n == 0:
        if one is None:
            raise ValueError('the empty determinant needs an explicit one')
        return one
    if any(len(row) != n for row in matrix):
        raise ValueError('determinant of a non square matrix')
    if n <= COFACTOR_LIMIT:
        return det_cofactor(matrix)
    return _bareiss(matrix)


def signed_maximal_minors(matrix, columns=None, one=None):
    """Signed maximal minors of a matrix with one more column than rows

    Entry c is (-1)^c det(matrix without column c), counting from 0, so
    that matrix . t = 0.
    """
    if columns is None:
        columns = len(matrix[0]) if matrix else 1
    if any(len(row) != columns for row in matrix) or (
            len(matrix) != columns - 1):
        raise ValueError('expected %s rows and %s columns'
            % (columns - 1, columns))
    minors = []
    for column in range(columns):
        sub = [row[:column] + row[column + 1:] for row in matrix]
        value = det_fraction_free(sub, one)
        minors.append(-value if column % 2 else value)
        logger.debug('minor %s of %s computed', column + 1, columns)
    return minors
