# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""JSON files for problems, templates, specializations and resolvents

Rationals are written as "num/den" strings and polynomials in x as
ascending coefficient lists, so nothing goes through a float.

A problem file looks like::

    {
      "field": "Q",
      "polynomials": [{"id": "z", "coeffs": [["0", "-1"], ["1"]]}],
      "pseudopolynomial": {
        "alphas": ["alpha"],
        "terms": [{"a": ["1"], "factors": [["z", "alpha"]]}]
      }
    }

Each coefficient of a polynomial in t is either a list (a polynomial in x)
or an object {"num": [...], "den": [...]}.
"""
import json
import logging

from .alpha import format_monomial, monomial
from .elimination import Degenerate
from .exceptions import ParseError, UserError, ValidationError
from .field import field_from_descriptor
from .polynomial import XPoly, XRat
from .powersum import IdenticallyZero, Resolvent, ResolventTemplate
from .symmetric import Specialization
from .tower import MonicPoly, ProblemSpec, PseudoTerm

__all__ = ['parse_problem', 'dump_problem', 'parse_template',
    'dump_template', 'parse_specializations',
    'parse_resolvent', 'dump_resolvent', 'dump_lodo', 'read_file']

logger = logging.getLogger(__name__)


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exception:
        raise ParseError('Invalid JSON: %s' % exception.msg,
            location='line %s column %s' % (exception.lineno,
                exception.colno)) from exception


def _dumps(data):
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def _get(data, key, path):
    if not isinstance(data, dict) or key not in data:
        raise ParseError('Missing key "%s" at "%s".' % (key, path or '/'),
            location=path or '/')
    return data[key]


def _list(value, path):
    if not isinstance(value, list):
        raise ParseError('A list is expected at "%s".' % path, location=path)
    return value


def _poly(value, field, path):
    coeffs = []
    for index, item in enumerate(_list(value, path)):
        try:
            coeffs.append(field.parse(str(item)))
        except UserError as exception:
            location = '%s[%s]' % (path, index)
            raise ParseError('Invalid value at "%s": %s' % (location, item),
                location=location) from exception
    return XPoly(coeffs, field)


def _rat(value, field, path):
    if isinstance(value, dict):
        num = _poly(_get(value, 'num', path), field, path + '.num')
        den = _poly(_get(value, 'den', path), field, path + '.den')
        if den.is_zero():
            raise ParseError('Zero denominator at "%s.den".' % path,
                location=path + '.den')
        return XRat(num, den)
    return XRat.from_poly(_poly(value, field, path))


def _format_poly(poly):
    return [poly.field.format(c) for c in poly.coeffs]


def _format_rat(rat):
    if rat.is_polynomial():
        # den is the constant 1
        return _format_poly(rat.num)
    return {'num': _format_poly(rat.num), 'den': _format_poly(rat.den)}


def _field(data):
    try:
        return field_from_descriptor(_get(data, 'field', ''))
    except ParseError:
        raise
    except UserError as exception:
        raise ParseError(exception.message, location='field') from exception


def problem_from_data(data):
    field = _field(data)
    polynomials = []
    for index, item in enumerate(_list(_get(data, 'polynomials', ''),
                'polynomials')):
        path = 'polynomials[%s]' % index
        ident = _get(item, 'id', path)
        coeffs = tuple(_rat(c, field, '%s.coeffs[%s]' % (path, k))
            for k, c in enumerate(_list(_get(item, 'coeffs', path),
                    path + '.coeffs')))
        if not coeffs:
            raise ParseError('Polynomial "%s" must have degree at least 1 '
                'in t.' % ident, location=path + '.coeffs')
        polynomials.append(MonicPoly(str(ident), coeffs))
    pseudo = _get(data, 'pseudopolynomial', '')
    alphas = tuple(str(a) for a in _list(
            _get(pseudo, 'alphas', 'pseudopolynomial'),
            'pseudopolynomial.alphas'))
    terms = []
    for index, item in enumerate(_list(_get(pseudo, 'terms',
                    'pseudopolynomial'), 'pseudopolynomial.terms')):
        path = 'pseudopolynomial.terms[%s]' % index
        a = _rat(_get(item, 'a', path), field, path + '.a')
        factors = []
        for k, factor in enumerate(_list(item.get('factors', []),
                    path + '.factors')):
            if not isinstance(factor, list) or len(factor) != 2:
                location = '%s.factors[%s]' % (path, k)
                raise ParseError('Invalid value at "%s": %s'
                    % (location, factor), location=location)
            factors.append((str(factor[0]), str(factor[1])))
        terms.append(PseudoTerm(a, tuple(factors)))
    problem = ProblemSpec(field, tuple(polynomials), tuple(terms), alphas)
    problem.validate()
    logger.debug('problem with %s polynomials and %s terms parsed',
        len(polynomials), len(terms))
    return problem


def parse_problem(text):
    "Parse and validate a problem file"
    return problem_from_data(_loads(text))


def problem_to_data(problem):
    return {
        'field': problem.field.descriptor(),
        'polynomials': [{
                'id': p.id,
                'coeffs': [_format_rat(c) for c in p.coeffs],
                } for p in problem.polynomials],
        'pseudopolynomial': {
            'alphas': list(problem.alphas),
            'terms': [{
                    'a': _format_rat(t.a),
                    'factors': [list(f) for f in t.exponents],
                    } for t in problem.terms],
            },
        }


def dump_problem(problem):
    return _dumps(problem_to_data(problem))


def _template_from_data(value, path):
    entries = []
    for index, item in enumerate(_list(value, path)):
        location = '%s[%s]' % (path, index)
        order = _get(item, 'order', location)
        exponents = item.get('monomial', {})
        if (not isinstance(order, int) or order < 0
                or not isinstance(exponents, dict)
                or not all(isinstance(e, int) and e >= 0
                    for e in exponents.values())):
            raise ParseError('Invalid value at "%s": %s' % (location, item),
                location=location)
        entries.append((order, monomial(exponents)))
    template = ResolventTemplate(tuple(entries))
    template.validate()
    return template


def _template_to_data(template):
    return [{'order': order, 'monomial': dict(mono)}
        for order, mono in template.entries]


def parse_template(text):
    'Template file: {"template": [{"order": m, "monomial": {sym: e}}]}'
    data = _loads(text)
    return _template_from_data(_get(data, 'template', ''), 'template')


def dump_template(template):
    return _dumps({'template': _template_to_data(template)})


def _specializations_from_data(value, path):
    result = []
    for index, item in enumerate(_list(value, path)):
        location = '%s[%s]' % (path, index)
        if not isinstance(item, dict) or not all(
                isinstance(v, int) for v in item.values()):
            raise ParseError('Invalid value at "%s": %s' % (location, item),
                location=location)
        result.append(Specialization(item))
    return result


def parse_specializations(text):
    data = _loads(text)
    return _specializations_from_data(_get(data, 'specializations', ''),
        'specializations')


def resolvent_to_data(result, field):
    data = {
        'status': result.status,
        'field': field.descriptor(),
        'provenance': {
            'method': getattr(result, 'method', 'eliminate'),
            'specializations': [dict(s)
                for s in getattr(result, 'specializations', ())],
            },
        }
    if isinstance(result, Degenerate):
        data['provenance']['orders'] = list(result.orders)
    else:
        data['template'] = _template_to_data(result.template)
    if isinstance(result, Resolvent):
        data['raw_t'] = [_format_poly(t) for t in result.raw_t]
        data['content'] = _format_poly(result.content)
        data['primitive_r'] = [_format_poly(r) for r in result.primitive_r]
    return data


def dump_resolvent(result, field):
    "Serialize a Resolvent, IdenticallyZero or Degenerate result"
    return _dumps(resolvent_to_data(result, field))


def parse_resolvent(text):
    "Parse a resolvent file back to the result object it was written from"
    data = _loads(text)
    field = _field(data)
    status = _get(data, 'status', '')
    provenance = data.get('provenance', {})
    method = provenance.get('method', 'powersum')
    specializations = tuple(_specializations_from_data(
            provenance.get('specializations', []),
            'provenance.specializations'))
    if status == Degenerate.status:
        return Degenerate(tuple(provenance.get('orders', ())))
    template = _template_from_data(_get(data, 'template', ''), 'template')
    if status == IdenticallyZero.status:
        return IdenticallyZero(template, specializations, method)
    if status != Resolvent.status:
        raise ParseError('Unknown resolvent status "%s".' % status,
            location='status')
    raw = tuple(_poly(t, field, 'raw_t[%s]' % k)
        for k, t in enumerate(_list(_get(data, 'raw_t', ''), 'raw_t')))
    content = _poly(_get(data, 'content', ''), field, 'content')
    prims = tuple(_poly(r, field, 'primitive_r[%s]' % k)
        for k, r in enumerate(_list(_get(data, 'primitive_r', ''),
                'primitive_r')))
    if not (len(raw) == len(prims) == template.psi):
        raise ValidationError('A template with %s entries needs %s '
            'coefficients, got %s.' % (template.psi, template.psi, len(prims)))
    return Resolvent(template, raw, content, prims, specializations, method)


def read_file(path):
    with open(path, encoding='utf-8') as fp:
        return fp.read()


def describe_template(template):
    "One line per entry, for the command line"
    return '\n'.join('D^%s * %s' % (order, format_monomial(mono))
        for order, mono in template.entries)


def lodo_to_data(lodo):
    "Coefficients of an operator, highest order first"
    return {
        'field': lodo.field.descriptor(),
        'coefficients': [{
                'order': order,
                'monomial': dict(mono),
                'coeffs': _format_rat(coeff),
                } for (order, mono), coeff in lodo.flat_coefficients()],
        }


def dump_lodo(lodo):
    return _dumps(lodo_to_data(lodo))
