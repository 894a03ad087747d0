# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""Algebraic extensions of K(x) and derivatives of pseudopolynomials

The roots u_i are never written down: derivatives of

    y = sum_j a_j * prod_i u_i^alpha_ij

are coordinate vectors over the basis v_j * prod_i u_i^c_i with
0 <= c_i < deg P_i, computed in the product of the residue rings
K(x)[t]/(P_i).
"""
import logging
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod

from mpmath import mp, mpf

from .alpha import AlphaPoly
from .exceptions import (NotInvertible, PoleAtSample, UnsupportedDegree,
    ValidationError)
from .field import QQ
from .polynomial import XPoly, XRat, content_primitive, lcm_monic

__all__ = ['MonicPoly', 'PseudoTerm', 'ProblemSpec', 'TensorVector', 'Lodo',
    'Extension', 'invert_mod', 'root_derivative', 'derivative_table',
    'derive_vector', 'tensor_support', 'dimension_bound', 'apply_lodo',
    'lodo_derive', 'rename_symbol', 'numeric_residual',
    'specialize_coefficients', 'parse_real']

logger = logging.getLogger(__name__)

_TOWER_LOCK = threading.Lock()


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _tsub(a, b, zero):
    n = max(len(a), len(b))
    a = list(a) + [zero] * (n - len(a))
    b = list(b) + [zero] * (n - len(b))
    return _trim(x - y for x, y in zip(a, b))


def _tmul(a, b, zero):
    if not a or not b:
        return []
    result = [zero] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if not c:
            continue
        for j, d in enumerate(b):
            result[i + j] = result[i + j] + c * d
    return _trim(result)


def _tdivmod(a, b, zero):
    remainder = list(a)
    if len(remainder) < len(b):
        return [], _trim(remainder)
    quotient = [zero] * (len(remainder) - len(b) + 1)
    lead = b[-1]
    for k in range(len(quotient) - 1, -1, -1):
        c = remainder[k + len(b) - 1] / lead
        quotient[k] = c
        if not c:
            continue
        for i, d in enumerate(b):
            remainder[k + i] = remainder[k + i] - c * d
    return _trim(quotient), _trim(remainder[:len(b) - 1])


def _format_t(coeffs):
    if not any(coeffs):
        return '0'
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        power = '' if k == 0 else ('*t' if k == 1 else '*t^%s' % k)
        parts.append('(%s)%s' % (c, power))
    return ' + '.join(parts)


@dataclass(frozen=True)
class MonicPoly:
    "Monic polynomial in t over K(x), coefficients ascending in t"
    id: str
    coeffs: tuple

    @property
    def field(self):
        return self.coeffs[0].field

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def validate(self):
        if self.degree < 1:
            raise ValidationError('Polynomial "%s" must have degree at '
                'least 1 in t.' % self.id)
        if self.coeffs[-1] != 1:
            raise ValidationError('Polynomial "%s" is not monic.' % self.id)
        if not self.coeffs[0]:
            raise ValidationError('Polynomial "%s" has a zero constant '
                'term, so its root is not an invertible root.' % self.id)

    def __str__(self):
        return _format_t(self.coeffs)


@dataclass(frozen=True)
class PseudoTerm:
    "The term a * prod_i u_i^alpha_i, exponents as (polynomial id, symbol)"
    a: XRat
    exponents: tuple = ()

    def exponent(self, poly_id):
        for ident, symbol in self.exponents:
            if ident == poly_id:
                return symbol
        return None


@dataclass(frozen=True)
class ProblemSpec:
    "Polynomials P_i and the pseudopolynomial built from their roots"
    field: object
    polynomials: tuple
    terms: tuple
    alphas: tuple

    def validate(self):
        ids = set()
        for poly in self.polynomials:
            if poly.id in ids:
                raise ValidationError(
                    'Polynomial id "%s" is used more than once.' % poly.id)
            ids.add(poly.id)
            poly.validate()
        symbols = set()
        for symbol in self.alphas:
            if not symbol:
                raise ValidationError(
                    'Exponent symbols must be nonempty identifiers.')
            if symbol in symbols:
                raise ValidationError(
                    'Exponent symbol "%s" is declared more than '
                    'once.' % symbol)
            symbols.add(symbol)
        used = set()
        for index, term in enumerate(self.terms):
            factors = set()
            for poly_id, symbol in term.exponents:
                if poly_id not in ids:
                    raise ValidationError('Term %s refers to the unknown '
                        'polynomial "%s".' % (index + 1, poly_id))
                if poly_id in factors:
                    raise ValidationError('Term %s uses polynomial "%s" more '
                        'than once.' % (index + 1, poly_id))
                factors.add(poly_id)
                if symbol not in symbols:
                    raise ValidationError(
                        'Exponent symbol "%s" is not declared.' % symbol)
                used.add(symbol)
        for symbol in self.alphas:
            if symbol not in used:
                raise ValidationError('Exponent symbol "%s" is declared but '
                    'no term uses it.' % symbol)

    def polynomial(self, poly_id):
        return next(p for p in self.polynomials if p.id == poly_id)

    @property
    def tower(self):
        tower = self.__dict__.get('_tower')
        if tower is None:
            with _TOWER_LOCK:
                tower = self.__dict__.get('_tower')
                if tower is None:
                    tower = Tower(self)
                    object.__setattr__(self, '_tower', tower)
        return tower


class Extension:
    "The residue ring K(x)[t]/(P), residues as tuples of XRat of length d"

    def __init__(self, poly):
        self.poly = poly
        self.field = poly.field
        self.degree = poly.degree
        self.zero = XRat.zero(self.field)

    def reduce(self, coeffs):
        coeffs = list(coeffs)
        d = self.degree
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if not c:
                continue
            for i in range(d):
                coeffs[k - d + i] = coeffs[k - d + i] - c * self.poly.coeffs[i]
        coeffs = coeffs[:d]
        return tuple(coeffs + [self.zero] * (d - len(coeffs)))

    def mul(self, a, b):
        return self.reduce(_tmul(_trim(a), _trim(b), self.zero)
            or [self.zero])

    def basis(self, power):
        "The residue of t^power"
        return self.reduce([self.zero] * power + [XRat.one(self.field)])

    def invert(self, a):
        "Extended Euclid in K(x)[t]"
        a = _trim(a)
        r0, r1 = list(self.poly.coeffs), a
        s0, s1 = [], [XRat.one(self.field)]
        while r1:
            quotient, remainder = _tdivmod(r0, r1, self.zero)
            r0, r1 = r1, remainder
            s0, s1 = s1, _tsub(s0, _tmul(quotient, s1, self.zero), self.zero)
        if len(r0) != 1:
            raise NotInvertible('The residue "%s" is not invertible modulo '
                '"%s".' % (_format_t(a), self.poly))
        unit = r0[0]
        return self.reduce([c / unit for c in s0] or [self.zero])

    @cached_property
    def root_derivative(self):
        "Du = -P_x(u) / P_t(u) reduced modulo P"
        coeffs = self.poly.coeffs
        by_x = self.reduce([c.derive() for c in coeffs])
        by_t = self.reduce([c * k for k, c in enumerate(coeffs)][1:]
            or [self.zero])
        du = self.mul(by_x, self.invert(by_t))
        return tuple(-c for c in du)

    @cached_property
    def logarithmic_derivative(self):
        "Du / u"
        return self.mul(self.root_derivative, self.invert(self.basis(1)))


def invert_mod(a, poly):
    "Inverse of the residue a modulo the monic polynomial poly"
    return Extension(poly).invert(a)


def root_derivative(poly):
    "Du for a root u of poly, as a residue modulo poly"
    return Extension(poly).root_derivative


class TensorVector:
    "Coordinates (term index j, multi-index c) -> AlphaPoly, zeros dropped"
    __slots__ = ('entries',)

    def __init__(self, entries=None):
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def is_zero(self):
        return not self.entries

    def __bool__(self):
        return bool(self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return sorted(self.entries.items(), key=lambda item: item[0])

    def support(self):
        return sorted(self.entries)

    def coordinate(self, j, c):
        entry = self.entries.get((j, tuple(c)))
        if entry is None:
            return AlphaPoly.zero()
        return entry

    def __add__(self, other):
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries[key] + value if key in entries else value
        return TensorVector(entries)

    def __neg__(self):
        return TensorVector({k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return TensorVector({k: v * factor for k, v in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return 'TensorVector(%s)' % ', '.join('%s: %s' % (k, v)
            for k, v in self.items())


class Tower:
    "Derivation tables shared by every derivative of one problem"

    def __init__(self, problem):
        self.problem = problem
        self.field = problem.field
        self.extensions = [Extension(p) for p in problem.polynomials]
        self.shape = tuple(e.degree for e in self.extensions)
        # power[i][a] = D(u_i^a), shift[i][a] = u_i^a * Du_i / u_i
        self.power = []
        self.shift = []
        for extension in self.extensions:
            du = extension.root_derivative
            w = extension.logarithmic_derivative
            zero = (extension.zero,) * extension.degree
            self.power.append([zero] + [
                    tuple(c * a for c in extension.mul(extension.basis(a - 1),
                            du))
                    for a in range(1, extension.degree)])
            self.shift.append([extension.mul(extension.basis(a), w)
                    for a in range(extension.degree)])
        self._derivatives = [self.initial()]
        self._lock = threading.Lock()
        logger.debug('tower with basis shape %s and %s terms', self.shape,
            len(problem.terms))

    def initial(self):
        origin = (0,) * len(self.extensions)
        return TensorVector({(j, origin): AlphaPoly.constant(term.a)
                for j, term in enumerate(self.problem.terms)})

    def derive(self, vector):
        "Apply D to a vector in tensor coordinates"
        result = {}

        def add(key, value):
            if key in result:
                result[key] = result[key] + value
            else:
                result[key] = value

        for (j, c), coeff in vector.entries.items():
            derived = coeff.derive()
            if derived:
                add((j, c), derived)
            term = self.problem.terms[j]
            for i, extension in enumerate(self.extensions):
                power = self.power[i][c[i]]
                symbol = term.exponent(extension.poly.id)
                shift = self.shift[i][c[i]] if symbol else None
                with_symbol = (coeff * AlphaPoly.symbol(symbol, self.field)
                    if symbol else None)
                for k in range(extension.degree):
                    value = None
                    if power[k]:
                        value = coeff.scale(power[k])
                    if shift is not None and shift[k]:
                        scaled = with_symbol.scale(shift[k])
                        value = scaled if value is None else value + scaled
                    if value:
                        add((j, c[:i] + (k,) + c[i + 1:]), value)
        return TensorVector(result)

    def derivative(self, order):
        with self._lock:
            while len(self._derivatives) <= order:
                self._derivatives.append(
                    self.derive(self._derivatives[-1]))
            return self._derivatives[order]


def derivative_table(problem, orders):
    "Map each order m to the tensor coordinates of D^m y"
    tower = problem.tower
    return {m: tower.derivative(m) for m in sorted(set(orders))}


def derive_vector(vector, problem):
    return problem.tower.derive(vector)


def tensor_support(problem, max_order):
    "Basis coordinates occurring in D^0 y, ..., D^max_order y"
    support = set()
    for vector in derivative_table(problem, range(max_order + 1)).values():
        support.update(vector.entries)
    return sorted(support)


def dimension_bound(problem):
    "Worst-case dimension M * prod d_i of the span of the derivatives"
    return len(problem.terms) * prod(p.degree for p in problem.polynomials)


class Lodo:
    "Linear ordinary differential operator sum_m coefficient_m * D^m"
    __slots__ = ('field', 'terms')

    def __init__(self, terms=(), field=QQ):
        if hasattr(terms, 'items'):
            terms = terms.items()
        terms = list(terms)
        for _, coeff in terms:
            if isinstance(coeff, AlphaPoly):
                field = coeff.field
                break
        collected = {}
        for order, coeff in terms:
            if not isinstance(coeff, AlphaPoly):
                coeff = AlphaPoly.constant(coeff, field)
            if order in collected:
                collected[order] = collected[order] + coeff
            else:
                collected[order] = coeff
        self.field = field
        self.terms = tuple((m, collected[m]) for m in sorted(collected)
            if collected[m])

    @property
    def order(self):
        "Highest order, -1 for the zero operator"
        return self.terms[-1][0] if self.terms else -1

    def orders(self):
        return [m for m, _ in self.terms]

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, order):
        return dict(self.terms).get(order, AlphaPoly.zero(self.field))

    def scale(self, factor):
        return Lodo([(m, c * factor) for m, c in self.terms], self.field)

    def rename(self, old, new):
        "Replace one exponent symbol by another in every coefficient"
        return Lodo([(m, c.rename(old, new)) for m, c in self.terms],
            self.field)

    def derive(self):
        return lodo_derive(self)

    def flat_coefficients(self):
        "((order, monomial), XRat) pairs, highest order first"
        for order, coeff in reversed(self.terms):
            for mono in coeff.monomials():
                yield (order, mono), coeff.terms[mono]

    def primitive(self):
        """Clear denominators and divide out the content

        The first coefficient (highest order, canonical monomial order) gets
        a positive leading coefficient over Q or is made monic over F_p.
        """
        if not self.terms:
            return self
        flat = list(self.flat_coefficients())
        den = XPoly.one(self.field)
        for _, coeff in flat:
            den = lcm_monic(den, coeff.den)
        polys = [(coeff * XRat.from_poly(den)).num for _, coeff in flat]
        _, prims = content_primitive(polys)
        result = {}
        for ((order, mono), _), prim in zip(flat, prims):
            term = AlphaPoly._make({mono: XRat.from_poly(prim)}, self.field)
            result[order] = result[order] + term if order in result else term
        return Lodo(result, self.field)

    def __eq__(self, other):
        if not isinstance(other, Lodo):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return 'Lodo(%s)' % self

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join('[%s]*D^%s' % (c, m)
            for m, c in reversed(self.terms))


def apply_lodo(lodo, problem):
    "Tensor coordinates of lodo applied to y, zero iff lodo annihilates y"
    if lodo.is_zero():
        return TensorVector()
    table = derivative_table(problem, lodo.orders())
    result = TensorVector()
    for order, coeff in lodo.terms:
        result = result + table[order].scale(coeff)
    return result


def lodo_derive(lodo):
    "Left composition D o lodo"
    terms = []
    for order, coeff in lodo.terms:
        terms.append((order, coeff.derive()))
        terms.append((order + 1, coeff))
    return Lodo(terms, lodo.field)


def rename_symbol(lodo, old, new):
    "The resolvent of the pseudopolynomial with symbol old written as new"
    return lodo.rename(old, new)


_REAL = re.compile(r'^\s*(?:(?P<const>pi|e)|sqrt\((?P<sqrt>[^()]+)\)'
    r'|(?P<number>[-+]?[0-9./eE+-]+))\s*$')


def parse_real(value):
    """Real number at the current mpmath precision

    Accepts mpmath numbers, integers, Fractions, decimal or 'p/q' strings,
    'pi', 'e' and 'sqrt(<number>)'.
    """
    if isinstance(value, Fraction):
        return mpf(value.numerator) / value.denominator
    if not isinstance(value, str):
        return mp.mpf(value)
    match = _REAL.match(value)
    if not match:
        raise ValidationError('Cannot read a real number from "%s".' % value)
    if match.group('const'):
        return +mp.pi if match.group('const') == 'pi' else +mp.e
    if match.group('sqrt'):
        return mp.sqrt(parse_real(match.group('sqrt')))
    number = match.group('number')
    try:
        if '/' in number:
            return parse_real(Fraction(number))
        return mpf(number)
    except (ValueError, ZeroDivisionError) as exception:
        raise ValidationError(
            'Cannot read a real number from "%s".' % value) from exception


def _numeric_values(lodo, values, problem=None):
    symbols = set()
    for _, coeff in lodo.terms:
        symbols |= coeff.symbols()
    if problem is not None:
        symbols.update(problem.alphas)
    result = {}
    for symbol in symbols | set(values):
        if symbol not in values:
            raise ValidationError('No numeric value given for the '
                'exponent symbol "%s".' % symbol)
        result[symbol] = parse_real(values[symbol])
    return result


def _check_linear(problem):
    if problem.field != QQ:
        raise UnsupportedDegree('Numeric evaluation is only available over '
            'Q, not over "%s".' % problem.field)
    for poly in problem.polynomials:
        if poly.degree != 1:
            raise UnsupportedDegree('Numeric evaluation needs linear '
                'polynomials, "%s" has degree %s.' % (poly.id, poly.degree))


def numeric_residual(lodo, values, problem, x0, precision=30):
    """Relative residual |sum_m c_m(x0) D^m y(x0)| / max_m |c_m(x0) D^m y(x0)|

    Only linear polynomials are supported: each root is the rational
    function -P_i(0) and D^m y(x0) is read from the tensor coordinates.
    """
    _check_linear(problem)
    if lodo.is_zero():
        return mpf(0)
    x0 = Fraction(x0)
    table = derivative_table(problem, lodo.orders())
    with mp.workdps(precision):
        numeric = _numeric_values(lodo, values, problem)
        roots = {}
        for poly in problem.polynomials:
            try:
                root = -poly.coeffs[0](x0)
            except ZeroDivisionError as exception:
                raise PoleAtSample('The sample point x0 = %s is a pole '
                    'or a zero of the root of %s.' % (x0, poly.id)
                    ) from exception
            if not root:
                raise PoleAtSample('The sample point x0 = %s is a pole '
                    'or a zero of the root of %s.' % (x0, poly.id))
            roots[poly.id] = parse_real(root)
        powers = []
        for term in problem.terms:
            value = mpf(1)
            for poly_id, symbol in term.exponents:
                value *= mp.power(roots[poly_id], numeric[symbol])
            powers.append(value)
        terms = []
        try:
            for order, coeff in lodo.terms:
                derivative = 0
                for (j, _), coordinate in table[order].entries.items():
                    derivative += coordinate.evaluate(numeric, x0,
                        parse_real) * powers[j]
                terms.append(coeff.evaluate(numeric, x0, parse_real)
                    * derivative)
        except ZeroDivisionError as exception:
            raise PoleAtSample('The sample point x0 = %s is a pole of '
                'the operator.' % x0) from exception
        scale = max(abs(t) for t in terms)
        if not scale:
            return mpf(0)
        residual = abs(sum(terms)) / scale
        logger.info('numeric residual %s at x0 = %s', mp.nstr(residual, 5),
            x0)
        return residual


def specialize_coefficients(lodo, values, precision=30):
    """Numeric coefficients of each order, ascending in x

    Every coefficient must be polynomial in x.
    """
    result = {}
    with mp.workdps(precision):
        numeric = _numeric_values(lodo, values)
        for order, coeff in lodo.terms:
            column = []
            for mono, rat in coeff.terms.items():
                if not rat.is_polynomial():
                    raise ValidationError('The coefficient %s of D^%s is not '
                        'a polynomial in x.' % (rat, order))
                factor = mpf(1)
                for symbol, exponent in mono:
                    factor *= numeric[symbol] ** exponent
                for k, c in enumerate(rat.num.coeffs):
                    while len(column) <= k:
                        column.append(mpf(0))
                    column[k] += parse_real(Fraction(c)) * factor
            result[order] = column
    return result
