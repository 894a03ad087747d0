# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""Powersums of roots and their sums over combined permutations"""
import logging

from .exceptions import ValidationError
from .polynomial import XRat

__all__ = ['Specialization', 'PowersumTable', 'elementary_symmetric',
    'powersums_from_elementary', 'combined_sum']

logger = logging.getLogger(__name__)


class Specialization(dict):
    "Assignment of nonnegative integers to every exponent symbol"

    def check(self, problem):
        for symbol in problem.alphas:
            if symbol not in self:
                raise ValidationError('Specialization %s does not assign '
                    'the exponent symbol "%s".' % (self.format(), symbol))
            if self[symbol] < 0:
                raise ValidationError('Specialization %s assigns a negative '
                    'value to "%s".' % (self.format(), symbol))

    def key(self, symbols):
        return tuple(self[s] for s in symbols)

    def format(self):
        return '(%s)' % ', '.join('%s=%s' % (s, v) for s, v in self.items())


def elementary_symmetric(poly):
    "e_0..e_d from P = sum_k (-1)^(d-k) e_(d-k) t^k"
    d = poly.degree
    return [poly.coeffs[d - k] * (-1) ** k for k in range(d + 1)]


def powersums_from_elementary(poly, count):
    """p_0..p_count of the roots of poly by Newton's identities

    The division-free form is used so the same recursion holds over F_p:
    p_k = e_1 p_(k-1) - e_2 p_(k-2) + ... + (-1)^(k-1) k e_k.
    """
    field = poly.field
    e = elementary_symmetric(poly)
    d = poly.degree
    sums = [XRat.constant(field(d), field)]
    for k in range(1, count + 1):
        value = XRat.zero(field)
        for i in range(1, min(k, d + 1)):
            term = e[i] * sums[k - i]
            value = value - term if i % 2 == 0 else value + term
        if k <= d:
            term = e[k] * k
            value = value - term if k % 2 == 0 else value + term
        sums.append(value)
    return sums


class PowersumTable:
    "Powersums per polynomial id, extended on demand"

    def __init__(self, problem, count=0):
        self.problem = problem
        self._sums = {}
        for poly in problem.polynomials:
            self._sums[poly.id] = powersums_from_elementary(poly,
                max(count, 1))

    def powersums(self, poly_id, count):
        sums = self._sums[poly_id]
        if len(sums) <= count:
            poly = self.problem.polynomial(poly_id)
            sums = powersums_from_elementary(poly, count)
            self._sums[poly_id] = sums
        return sums[:count + 1]

    def __getitem__(self, key):
        poly_id, k = key
        return self.powersums(poly_id, k)[k]


def combined_sum(problem, specialization, order, table=None):
    """Sum of D^order of the specialized y over all combined permutations

    Every root of every polynomial ranges independently, so the sum of
    term j factors as a_j * prod_i p^(i)_(alpha_ij) with p^(i)_0 = d_i.
    """
    specialization = Specialization(specialization)
    specialization.check(problem)
    if table is None:
        table = PowersumTable(problem)
    total = XRat.zero(problem.field)
    for term in problem.terms:
        value = term.a
        for poly in problem.polynomials:
            symbol = term.exponent(poly.id)
            exponent = specialization[symbol] if symbol else 0
            value = value * table[poly.id, exponent]
        total = total + value
    for _ in range(order):
        total = total.derive()
    return total
