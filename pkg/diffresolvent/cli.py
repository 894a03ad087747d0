# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""Command line interface

Exit status is 0 on success, 1 on error and 2 when a resolvent came out
identically zero (or degenerate) and other specializations or orders
should be tried.
"""
import argparse
import json
import logging
import sys
from fractions import Fraction

from mpmath import mp

from . import config
from .bell import bell_b, log_resolvent, pochhammer
from .elimination import (Degenerate, eliminate_resolvent,
    resolvent_from_lodo)
from .exceptions import NotAnnihilated, ParseError, UserError, ValidationError
from .fileio import (dump_lodo, dump_resolvent, dump_template, parse_problem,
    parse_resolvent, parse_specializations, parse_template, read_file,
    describe_template)
from .powersum import (IdenticallyZero, default_specializations,
    powersum_resolvent, single_polynomial_template)
from .symmetric import PowersumTable
from .tower import apply_lodo, numeric_residual, specialize_coefficients

__all__ = ['main', 'build_parser']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ZERO = 2


def _write(text, path=None):
    if path:
        with open(path, 'w', encoding='utf-8') as fp:
            fp.write(text)
        logger.info('written %s', path)
    else:
        sys.stdout.write(text)


def _print_json(data):
    _write(json.dumps(data, indent=2, sort_keys=True) + '\n')


def _orders(text):
    try:
        return [int(o) for o in text.split(',') if o.strip()]
    except ValueError as exception:
        raise ValidationError('Derivative orders "%s" must be comma separated '
            'integers.' % text) from exception


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exception:
        raise ValidationError('Cannot read a rational x0 from "%s".' % text
            ) from exception


def _substitutions(items):
    values = {}
    for item in items or ():
        symbol, sep, value = item.partition('=')
        if not sep or not symbol.strip():
            raise ValidationError('Substitutions are written SYMBOL=REAL, '
                'not "%s".' % item)
        values[symbol.strip()] = value.strip()
    return values


def _default_template(problem):
    if len(problem.polynomials) != 1 or len(problem.alphas) != 1:
        raise ParseError('A template is needed unless the problem has a '
            'single polynomial and a single exponent symbol.',
            location='--template')
    return single_polynomial_template(problem.polynomials[0].degree,
        problem.alphas[0])


def command_powersums(args):
    problem = parse_problem(read_file(args.problem))
    table = PowersumTable(problem, args.max)
    _print_json({poly.id: [str(p) for p in table.powersums(poly.id, args.max)]
            for poly in problem.polynomials})
    return EXIT_OK


def command_resolve(args):
    problem = parse_problem(read_file(args.problem))
    if args.method == 'eliminate':
        orders = _orders(args.orders) if args.orders else None
        result = eliminate_resolvent(problem, orders)
        if not isinstance(result, Degenerate):
            result = resolvent_from_lodo(result)
    else:
        if args.template:
            template = parse_template(read_file(args.template))
        else:
            template = _default_template(problem)
        if args.specs:
            specializations = parse_specializations(read_file(args.specs))
        else:
            specializations = default_specializations(template, problem,
                args.strategy)
        result = powersum_resolvent(problem, template, specializations)
    _write(dump_resolvent(result, problem.field), args.out)
    if isinstance(result, (IdenticallyZero, Degenerate)):
        return EXIT_ZERO
    return EXIT_OK


def _read_lodo(path):
    result = parse_resolvent(read_file(path))
    if result.status != 'ok':
        raise ValidationError('Resolvent status "%s" has no operator.'
            % result.status)
    return result.to_lodo()


def command_verify(args):
    problem = parse_problem(read_file(args.problem))
    lodo = _read_lodo(args.resolvent)
    remainder = apply_lodo(lodo, problem)
    if remainder:
        raise NotAnnihilated('The operator does not annihilate the '
            'pseudopolynomial, %s coordinates remain nonzero.'
            % len(remainder))
    _print_json({'annihilates': True, 'order': lodo.order})
    return EXIT_OK


def command_eval(args):
    problem = parse_problem(read_file(args.problem))
    lodo = _read_lodo(args.resolvent)
    values = _substitutions(args.subst)
    precision = args.precision or config.precision()
    tolerance = config.getfloat('tolerance', 1e-9)
    residual = numeric_residual(lodo, values, problem, _fraction(args.x0),
        precision)
    output = {
        'x0': args.x0,
        'precision': precision,
        'residual': mp.nstr(residual, 15),
        'within_tolerance': bool(residual <= tolerance),
        }
    if args.coefficients:
        with mp.workdps(precision):
            coefficients = specialize_coefficients(lodo, values, precision)
            output['coefficients'] = {str(order): [mp.nstr(c, 15)
                    for c in column]
                for order, column in sorted(coefficients.items())}
    _print_json(output)
    return EXIT_OK


def command_bell(args):
    _print_json({
            'm': args.m,
            'k': args.k,
            'b': bell_b(args.m, args.k),
            'pochhammer': str(pochhammer('alpha', args.k)),
            })
    return EXIT_OK


def command_logres(args):
    _write(dump_lodo(log_resolvent(args.alpha)))
    return EXIT_OK


def command_template(args):
    template = single_polynomial_template(args.degree, args.alpha)
    if args.out:
        _write(dump_template(template), args.out)
    else:
        _write(describe_template(template) + '\n')
    return EXIT_OK


class ArgumentParser(argparse.ArgumentParser):
    "Command line errors are reported like every other input error"

    def error(self, message):
        raise ParseError(message, location='command line')


def build_parser():
    parser = ArgumentParser(prog='diffresolvent',
        description='Differential resolvents of pseudopolynomials')
    parser.add_argument('--version', action='version',
        version='%(prog)s ' + config.version())
    parser.add_argument('-v', '--verbose', action='store_true',
        help='log progress on standard error')
    commands = parser.add_subparsers(dest='command', required=True)

    powersums = commands.add_parser('powersums',
        help='powersums of the roots of every polynomial')
    powersums.add_argument('--problem', required=True)
    powersums.add_argument('--max', type=int, default=5)
    powersums.set_defaults(func=command_powersums)

    resolve = commands.add_parser('resolve', help='compute a resolvent')
    resolve.add_argument('--problem', required=True)
    resolve.add_argument('--template')
    resolve.add_argument('--specs')
    resolve.add_argument('--strategy', choices=['grid'])
    resolve.add_argument('--method', choices=['powersum', 'eliminate'],
        default='powersum')
    resolve.add_argument('--orders', help='comma separated derivative orders')
    resolve.add_argument('--out')
    resolve.set_defaults(func=command_resolve)

    verify = commands.add_parser('verify',
        help='check symbolically that a resolvent annihilates')
    verify.add_argument('--problem', required=True)
    verify.add_argument('--resolvent', required=True)
    verify.set_defaults(func=command_verify)

    evaluate = commands.add_parser('eval', help='numeric residual')
    evaluate.add_argument('--problem', required=True)
    evaluate.add_argument('--resolvent', required=True)
    evaluate.add_argument('--subst', action='append', default=[],
        metavar='SYMBOL=REAL')
    evaluate.add_argument('--x0', default='1')
    evaluate.add_argument('--precision', type=int)
    evaluate.add_argument('--coefficients', action='store_true')
    evaluate.set_defaults(func=command_eval)

    bell = commands.add_parser('bell', help='the integer b(m, k)')
    bell.add_argument('--m', type=int, required=True)
    bell.add_argument('--k', type=int, required=True)
    bell.set_defaults(func=command_bell)

    logres = commands.add_parser('logres',
        help='resolvent of e^(alpha x) + (ln x)^alpha')
    logres.add_argument('--alpha', type=int, required=True)
    logres.set_defaults(func=command_logres)

    template = commands.add_parser('template',
        help='default template for one polynomial')
    template.add_argument('--degree', type=int, required=True)
    template.add_argument('--alpha', default='alpha')
    template.add_argument('--out')
    template.set_defaults(func=command_template)
    return parser


def _error(exception):
    data = {
        'error': exception.__class__.__name__,
        'message': getattr(exception, 'message', str(exception)),
        'location': getattr(exception, 'location', None),
        }
    sys.stderr.write(json.dumps(data, sort_keys=True) + '\n')


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exception:
        _error(exception)
        return EXIT_ERROR
    logging.basicConfig(stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args)
    except UserError as exception:
        logger.debug('command failed', exc_info=True)
        _error(exception)
    except OSError as exception:
        _error(exception)
    return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
