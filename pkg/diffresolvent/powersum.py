# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""Resolvent templates and the powersum formula

Each coefficient-function of a resolvent is a signed maximal minor of the
matrix whose rows are the template evaluated on the combined permutation
sums at one integer specialization of the exponent symbols.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from itertools import product
from math import prod

from . import config
from .alpha import AlphaPoly, format_monomial, monomial, signed_maximal_minors
from .exceptions import DimensionMismatch, ValidationError
from .polynomial import XPoly, XRat, content_primitive, lcm_monic
from .symmetric import PowersumTable, Specialization, combined_sum
from .tower import Lodo

__all__ = ['ResolventTemplate', 'Resolvent', 'IdenticallyZero',
    'single_polynomial_template', 'build_specialization_matrix',
    'powersum_resolvent', 'default_specializations']

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResolventTemplate:
    "Entries (order, monomial), one per unknown coefficient-function"
    entries: tuple

    @classmethod
    def from_pairs(cls, pairs):
        return cls(tuple((order, monomial(mono)) for order, mono in pairs))

    @property
    def psi(self):
        return len(self.entries)

    def symbols(self):
        return sorted({s for _, mono in self.entries for s, _ in mono})

    def validate(self):
        if self.psi < 2:
            raise ValidationError('A resolvent template needs at least two '
                'entries, got %s.' % self.psi)
        seen = set()
        for order, mono in self.entries:
            if (order, mono) in seen:
                raise ValidationError('The template entry (order %s, '
                    'monomial %s) appears more than once.'
                    % (order, format_monomial(mono)))
            seen.add((order, mono))

    def __str__(self):
        return ', '.join('(%s, %s)' % (order, format_monomial(mono))
            for order, mono in self.entries)


@dataclass(frozen=True)
class Resolvent:
    "Raw minors t, their content chi and the primitive parts r"
    template: ResolventTemplate
    raw_t: tuple
    content: XPoly
    primitive_r: tuple
    specializations: tuple = ()
    method: str = 'powersum'
    status = 'ok'

    @property
    def field(self):
        return self.content.field

    def to_lodo(self):
        "sum over entries of r_(k,s) * monomial_s * D^(m_k)"
        terms = []
        for (order, mono), r in zip(self.template.entries, self.primitive_r):
            terms.append((order, AlphaPoly._make({mono: XRat.from_poly(r)},
                        self.field)))
        return Lodo(terms, self.field)


@dataclass(frozen=True)
class IdenticallyZero:
    "Every minor vanished, the specializations must change"
    template: ResolventTemplate
    specializations: tuple = ()
    method: str = 'powersum'
    status = 'identically_zero'
    hint: str = dataclass_field(default='', compare=False)


def single_polynomial_template(n, alpha):
    """Default shape sum_m sum_j r_(j,m) alpha^j D^m for one polynomial of
    degree n, j up to n(n-1)/2 + 1 - m, without the alpha-free zero order
    term"""
    if n < 1:
        raise ValidationError('A template for %s needs a polynomial of '
            'degree at least 1, got %s.' % (alpha, n))
    entries = []
    top = n * (n - 1) // 2 + 1
    for order in range(n, -1, -1):
        for j in range(0, top - order + 1):
            if order == 0 and j == 0:
                continue
            entries.append((order, monomial({alpha: j})))
    return ResolventTemplate(tuple(entries))


def _monomial_value(mono, specialization, field):
    value = field.one
    for symbol, exponent in mono:
        value = value * field(specialization[symbol]) ** exponent
    return value


def _check_specializations(problem, template, specializations):
    expected = template.psi - 1
    if len(specializations) != expected:
        raise DimensionMismatch('A template with %s entries needs %s '
            'specializations, got %s.'
            % (template.psi, expected, len(specializations)))
    seen = set()
    result = []
    for specialization in specializations:
        specialization = Specialization(specialization)
        specialization.check(problem)
        key = specialization.key(problem.alphas)
        if key in seen:
            raise ValidationError('Specialization %s is used more than '
                'once.' % specialization.format())
        seen.add(key)
        result.append(specialization)
    return result


def build_specialization_matrix(problem, template, specializations):
    """(Psi - 1) x Psi matrix of XRat in template column order

    Entry (s, k) is monomial_k(s) * sum over combined permutations of
    D^(m_k) y at the specialization s.
    """
    template.validate()
    for symbol in template.symbols():
        if symbol not in problem.alphas:
            raise ValidationError(
                'Exponent symbol "%s" is not declared.' % symbol)
    specializations = _check_specializations(problem, template,
        specializations)
    top = max((max(s.values(), default=0) for s in specializations),
        default=0)
    table = PowersumTable(problem, top)
    field = problem.field
    matrix = []
    for specialization in specializations:
        sums = {}
        row = []
        for order, mono in template.entries:
            if order not in sums:
                sums[order] = combined_sum(problem, specialization, order,
                    table)
            row.append(sums[order] * _monomial_value(mono, specialization,
                    field))
        matrix.append(row)
    logger.info('specialization matrix %sx%s built', len(matrix),
        template.psi)
    return matrix


def _clear_denominators(row):
    den = XPoly.one(row[0].field)
    for entry in row:
        den = lcm_monic(den, entry.den)
    scale = XRat.from_poly(den)
    return [(entry * scale).num for entry in row]


def powersum_resolvent(problem, template, specializations):
    "Coefficient-functions by the powersum formula, or IdenticallyZero"
    matrix = build_specialization_matrix(problem, template, specializations)
    specializations = tuple(Specialization(s) for s in specializations)
    rows = [_clear_denominators(row) for row in matrix]
    raw = signed_maximal_minors(rows, template.psi,
        XPoly.one(problem.field))
    logger.info('%s signed maximal minors computed', len(raw))
    if all(t.is_zero() for t in raw):
        hint = ('Every minor vanished for the specializations %s, retry '
            'with different specializations.'
            % ', '.join(s.format() for s in specializations))
        logger.warning(hint)
        return IdenticallyZero(template, specializations, hint=hint)
    content, prims = content_primitive(raw)
    logger.info('content of degree %s extracted', content.degree)
    return Resolvent(template, tuple(raw), content, tuple(prims),
        specializations)


def _grid_widths(count, dimension):
    "Widths doubling round-robin from the last symbol until they cover count"
    widths = [1] * dimension
    position = dimension - 1
    while dimension and (count > 1 and prod(widths) < count):
        widths[position] *= 2
        position = (position - 1) % dimension
    return widths


def default_specializations(template, problem, strategy=None, explicit=None,
        start=None):
    """Psi - 1 distinct specializations

    'grid' enumerates a box of small positive vectors lexicographically,
    'explicit' returns the given ones unchanged.
    """
    strategy = strategy or config.get('strategy', 'grid')
    count = template.psi - 1
    if strategy == 'explicit':
        return [Specialization(s) for s in (explicit or [])]
    if strategy != 'grid':
        raise ValidationError(
            'Unknown specialization strategy "%s".' % strategy)
    if start is None:
        start = config.getint('grid_start', 1)
    symbols = list(problem.alphas)
    widths = _grid_widths(count, len(symbols))
    result = []
    for values in product(*(range(start, start + w) for w in widths)):
        if len(result) == count:
            break
        result.append(Specialization(zip(symbols, values)))
    return result
