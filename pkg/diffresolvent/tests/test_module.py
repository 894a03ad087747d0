# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
import os
import random
import unittest
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial
from unittest import mock

import sympy
from mpmath import mpf
from trytond.exceptions import UserError as TrytonUserError
from trytond.model.exceptions import ValidationError as TrytonValidationError

from diffresolvent import config
from diffresolvent.alpha import (AlphaPoly, det_cofactor, det_fraction_free,
    signed_maximal_minors)
from diffresolvent.bell import (FormalBasisFunction, apply_to_basis, bell_b,
    bell_partial, log_derivative, log_resolvent, pochhammer)
from diffresolvent.elimination import (Degenerate, eliminate_resolvent,
    equal_up_to_unit, expansion_cost, template_from_lodo)
from diffresolvent.exceptions import (AllZero, DimensionMismatch,
    NotInvertible, ParseError, TooLarge, UnsupportedDegree, UserError,
    ValidationError)
from diffresolvent.field import QQ, PrimeField
from diffresolvent.fileio import (dump_problem, dump_resolvent,
    parse_problem, parse_resolvent, parse_template, dump_template)
from diffresolvent.polynomial import XPoly, XRat, content_primitive, gcd_monic
from diffresolvent.powersum import (IdenticallyZero, ResolventTemplate,
    default_specializations, powersum_resolvent, single_polynomial_template)
from diffresolvent.symmetric import (PowersumTable, Specialization,
    combined_sum, powersums_from_elementary)
from diffresolvent.tower import (Extension, Lodo, MonicPoly, ProblemSpec,
    PseudoTerm, apply_lodo, invert_mod,
    derivative_table, derive_vector, dimension_bound, lodo_derive,
    numeric_residual, parse_real, rename_symbol, tensor_support)

from . import fixture
from .tools import ALPHA, BETA, X, poly, single_problem

SX = sympy.Symbol('x')


def to_sympy(p):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator)
            for c in reversed(p.coeffs)], SX, domain='QQ')


def from_sympy(p):
    return XPoly([Fraction(int(c.p), int(c.q))
            for c in reversed(p.all_coeffs())])


def _read(name):
    with open(fixture(name), encoding='utf-8') as fp:
        return fp.read()


def random_poly(rng, degree):
    coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        for _ in range(degree)]
    coeffs.append(Fraction(rng.choice([-3, -2, -1, 1, 2, 3])))
    return XPoly(coeffs)


def random_alpha(rng):
    result = AlphaPoly.zero()
    for _ in range(rng.randint(0, 3)):
        mono = ALPHA ** rng.randint(0, 2) * BETA ** rng.randint(0, 1)
        coeff = XRat(XPoly([rng.randint(-3, 3), rng.randint(-2, 2)]),
            XPoly([rng.randint(1, 2)]))
        result = result + mono.scale(coeff)
    return result


def monic(ident, t_coeffs):
    return MonicPoly(ident, tuple(XRat.from_poly(XPoly(c)) for c in t_coeffs))


class FieldTestCase(unittest.TestCase):
    'Test exact coefficient fields'

    def test_prime_field(self):
        F7 = PrimeField(7)
        self.assertEqual(F7(3) / F7(5) * 5, 3)
        self.assertEqual(F7(-1), 6)
        self.assertEqual(PrimeField(3).parse('1/2'), 2)
        self.assertEqual(F7.descriptor(), {'Fp': 7})

    def test_invalid_prime(self):
        for p in (1, 4, 91, 2 ** 61 + 1):
            with self.assertRaises(ValidationError):
                PrimeField(p)
        self.assertEqual(PrimeField(2 ** 61 - 1).characteristic, 2 ** 61 - 1)

    def test_field_mismatch(self):
        with self.assertRaises(ValidationError):
            XPoly([1], PrimeField(3)) + XPoly([1], PrimeField(5))

    def test_user_errors(self):
        with self.assertRaises(TrytonValidationError) as cm:
            single_problem([[1], [2]]).validate()
        self.assertEqual(cm.exception.message, 'Polynomial "u" is not monic.')
        self.assertTrue(issubclass(ParseError, TrytonUserError))
        self.assertEqual(ParseError('Bad', location='x').location, 'x')


class PolynomialTestCase(unittest.TestCase):
    'Test polynomials and rational functions in x'

    def setUp(self):
        self.rng = random.Random(20240607)

    def test_arithmetic_against_sympy(self):
        for _ in range(40):
            a = random_poly(self.rng, self.rng.randint(0, 4))
            b = random_poly(self.rng, self.rng.randint(0, 3))
            self.assertEqual(a * b, from_sympy(to_sympy(a) * to_sympy(b)))
            self.assertEqual(a - b, from_sympy(to_sympy(a) - to_sympy(b)))
            quotient, remainder = divmod(a, b)
            sq, sr = sympy.div(to_sympy(a), to_sympy(b))
            self.assertEqual(quotient, from_sympy(sq))
            self.assertEqual(remainder, from_sympy(sr) if not sr.is_zero
                else XPoly.zero())

    def test_gcd_against_sympy(self):
        for _ in range(30):
            g = random_poly(self.rng, self.rng.randint(1, 2))
            a = g * random_poly(self.rng, self.rng.randint(0, 2))
            b = g * random_poly(self.rng, self.rng.randint(0, 2))
            expected = to_sympy(a).gcd(to_sympy(b)).monic()
            self.assertEqual(gcd_monic(a, b), from_sympy(expected))
            self.assertEqual(gcd_monic(a, b).leading, 1)

    def test_derive_against_sympy(self):
        for _ in range(30):
            num = random_poly(self.rng, self.rng.randint(0, 3))
            den = random_poly(self.rng, self.rng.randint(1, 2))
            f = XRat(num, den)
            derived = f.derive()
            expected = sympy.diff(to_sympy(num).as_expr()
                / to_sympy(den).as_expr(), SX)
            ours = (to_sympy(derived.num).as_expr()
                / to_sympy(derived.den).as_expr())
            self.assertEqual(sympy.cancel(ours - expected), 0)

    def test_leibniz(self):
        for _ in range(30):
            f = XRat(random_poly(self.rng, self.rng.randint(0, 3)),
                random_poly(self.rng, self.rng.randint(1, 2)))
            g = XRat(random_poly(self.rng, self.rng.randint(0, 2)),
                random_poly(self.rng, self.rng.randint(1, 2)))
            self.assertEqual((f * g).derive(),
                f.derive() * g + f * g.derive())
            self.assertEqual((f + g).derive(), f.derive() + g.derive())

    def test_rational_function_is_reduced(self):
        f = XRat(X * X - 1, X * 2 - 2)
        self.assertEqual(f.num, poly(Fraction(1, 2), Fraction(1, 2)))
        self.assertEqual(f.den, XPoly.one())
        self.assertTrue(f.is_polynomial())
        with self.assertRaises(ZeroDivisionError):
            XRat(XPoly.one(), X)(0)

    def test_exquo(self):
        self.assertEqual((X * X - 1).exquo(X + 1), X - 1)
        with self.assertRaises(UserError):
            (X * X + 1).exquo(X + 1)

    def test_content_primitive(self):
        content, prims = content_primitive([X * 2, poly(4)])
        self.assertEqual(content, poly(2))
        self.assertEqual(prims, [X, poly(2)])
        content, prims = content_primitive([-X, XPoly.one()])
        self.assertEqual(content, poly(-1))
        self.assertEqual(prims, [X, poly(-1)])
        content, prims = content_primitive([X * X * 3, X * 6, XPoly.zero()])
        self.assertEqual(content, X * 3)
        self.assertEqual(prims, [X, poly(2), XPoly.zero()])
        with self.assertRaises(AllZero):
            content_primitive([XPoly.zero(), XPoly.zero()])

    def test_content_primitive_prime_field(self):
        F3 = PrimeField(3)
        content, prims = content_primitive([poly(0, 2, field=F3),
                poly(2, field=F3)])
        self.assertEqual(content, poly(2, field=F3))
        self.assertEqual(prims, [poly(0, 1, field=F3), poly(1, field=F3)])


class AlphaPolyTestCase(unittest.TestCase):
    'Test polynomials in the exponent symbols'

    def test_arithmetic(self):
        self.assertEqual((ALPHA + 1) * (ALPHA - 1), ALPHA ** 2 - 1)
        self.assertEqual((ALPHA ** 2 - 1).exquo(ALPHA + 1), ALPHA - 1)
        self.assertEqual(((ALPHA * X + BETA) * (ALPHA - BETA)).exquo(
                ALPHA - BETA), ALPHA * X + BETA)
        with self.assertRaises(UserError):
            (ALPHA ** 2 + 1).exquo(ALPHA + 1)

    def test_derive_and_specialize(self):
        f = ALPHA * (X ** 2) + BETA
        self.assertEqual(f.derive(), ALPHA * (X * 2))
        self.assertEqual(f.specialize({'alpha': 3, 'beta': 2}),
            XRat.from_poly(X ** 2 * 3 + 2))
        self.assertEqual(f.rename('beta', 'alpha'), ALPHA * (X ** 2 + 1))
        self.assertEqual(f.total_degree(), 1)
        self.assertEqual(f.symbols(), {'alpha', 'beta'})

    def test_ring_laws(self):
        rng = random.Random(4242)
        values = {'alpha': 3, 'beta': -2}
        for _ in range(30):
            a, b, c = (random_alpha(rng) for _ in range(3))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertTrue((a - a).is_zero())
            self.assertEqual(a * AlphaPoly.one(), a)
            self.assertEqual((a * b).derive(),
                a.derive() * b + a * b.derive())
            self.assertEqual((a * b).specialize(values),
                a.specialize(values) * b.specialize(values))
            if b:
                self.assertEqual((a * b).exquo(b), a)


class DeterminantTestCase(unittest.TestCase):
    'Test exact determinants and signed minors'

    def setUp(self):
        self.rng = random.Random(31415)

    def random_entry(self):
        return XPoly([self.rng.randint(-3, 3) for _ in range(
                    self.rng.randint(0, 2))])

    def test_fraction_free_matches_cofactor(self):
        for _ in range(60):
            n = self.rng.randint(1, 5)
            matrix = [[self.random_entry() for _ in range(n)]
                for _ in range(n)]
            self.assertEqual(det_fraction_free(matrix, XPoly.one()),
                det_cofactor(matrix))

    def test_alpha_entries(self):
        rng = random.Random(2024)
        for n in range(1, 6):
            for _ in range(4):
                matrix = [[random_alpha(rng) for _ in range(n)]
                    for _ in range(n)]
                expected = det_cofactor(matrix)
                with mock.patch('diffresolvent.alpha.COFACTOR_LIMIT', 1):
                    self.assertEqual(
                        det_fraction_free(matrix, AlphaPoly.one()), expected)
                self.assertEqual(det_fraction_free(matrix, AlphaPoly.one()),
                    expected)

    def test_row_operations(self):
        rng = random.Random(2025)
        for n in range(2, 6):
            matrix = [[random_alpha(rng) for _ in range(n)]
                for _ in range(n)]
            value = det_fraction_free(matrix, AlphaPoly.one())
            swapped = [matrix[1], matrix[0]] + matrix[2:]
            self.assertEqual(det_fraction_free(swapped, AlphaPoly.one()),
                -value)
            repeated = [matrix[0], matrix[0]] + matrix[2:]
            self.assertTrue(
                det_fraction_free(repeated, AlphaPoly.one()).is_zero())

    def test_bareiss_with_zero_pivot(self):
        identity = [[XPoly.one() if i == j else XPoly.zero()
                for j in range(5)] for i in range(5)]
        swapped = [identity[1], identity[0]] + identity[2:]
        self.assertEqual(det_fraction_free(swapped), poly(-1))
        self.assertEqual(det_fraction_free([], XPoly.one()), XPoly.one())

    def test_signed_minors_annihilate(self):
        for _ in range(200):
            columns = self.rng.randint(2, 5)
            matrix = [[self.random_entry() for _ in range(columns)]
                for _ in range(columns - 1)]
            minors = signed_maximal_minors(matrix, columns, XPoly.one())
            for row in matrix:
                total = XPoly.zero()
                for entry, minor in zip(row, minors):
                    total = total + entry * minor
                self.assertTrue(total.is_zero())

    def test_signed_minors_convention(self):
        minors = signed_maximal_minors([[poly(1), poly(2), poly(3)],
                [poly(4), poly(5), poly(6)]], 3, XPoly.one())
        self.assertEqual(minors, [poly(-3), poly(6), poly(-3)])


class SymmetricTestCase(unittest.TestCase):
    'Test powersums and combined permutation sums'

    def setUp(self):
        self.rng = random.Random(2718)

    def test_newton_against_planted_roots(self):
        for _ in range(50):
            degree = self.rng.randint(1, 3)
            roots = [XRat(XPoly([self.rng.randint(-4, 4),
                        self.rng.randint(-3, 3)]),
                    XPoly([self.rng.randint(1, 3)]))
                for _ in range(degree)]
            coeffs = [XRat.one()]
            for root in roots:
                shifted = [XRat.zero()] + coeffs
                for k, c in enumerate(coeffs):
                    shifted[k] = shifted[k] - root * c
                coeffs = shifted
            sums = powersums_from_elementary(MonicPoly('u', tuple(coeffs)), 6)
            self.assertEqual(sums[0], degree)
            for k in range(1, 7):
                expected = XRat.zero()
                for root in roots:
                    expected = expected + root ** k
                self.assertEqual(sums[k], expected)

    def test_prime_field_powersums(self):
        problem = parse_problem(_read('cubic_f3_problem.json'))
        F3 = problem.field
        table = PowersumTable(problem, 3)
        self.assertEqual(table['u', 1], XRat.zero(F3))
        self.assertEqual(table['u', 2], XRat.from_poly(poly(0, -2, field=F3)))
        self.assertEqual(table['u', 3], XRat.zero(F3))

    def test_combined_sum(self):
        problem = parse_problem(_read('two_powers_problem.json'))
        value = combined_sum(problem, {'alpha': 2, 'beta': 1}, 1)
        # D(x^2 + (x + 1))
        self.assertEqual(value, XRat.from_poly(X * 2 + 1))
        with self.assertRaises(ValidationError):
            combined_sum(problem, {'alpha': 2}, 0)
        with self.assertRaises(ValidationError):
            combined_sum(problem, {'alpha': 2, 'beta': -1}, 0)

    def test_combined_sum_multiplicative(self):
        z = monic('z', [[1], [0, -1], [1]])
        w = monic('w', [[0, 1], [1], [1]])
        both = ProblemSpec(QQ, (z, w),
            (PseudoTerm(XRat.one(), (('z', 'alpha'), ('w', 'beta'))),),
            ('alpha', 'beta'))
        only_z = ProblemSpec(QQ, (z,),
            (PseudoTerm(XRat.one(), (('z', 'alpha'),)),), ('alpha',))
        only_w = ProblemSpec(QQ, (w,),
            (PseudoTerm(XRat.one(), (('w', 'beta'),)),), ('beta',))
        for a in range(4):
            for b in range(4):
                self.assertEqual(
                    combined_sum(both, {'alpha': a, 'beta': b}, 0),
                    combined_sum(only_z, {'alpha': a}, 0)
                    * combined_sum(only_w, {'beta': b}, 0))

    def test_combined_sum_absent_polynomial(self):
        # y = z^alpha summed over the two roots of w as well
        problem = ProblemSpec(QQ, (monic('z', [[1], [0, -1], [1]]),
                monic('w', [[0, 1], [1], [1]])),
            (PseudoTerm(XRat.one(), (('z', 'alpha'),)),), ('alpha',))
        table = PowersumTable(problem, 5)
        for k in range(6):
            self.assertEqual(combined_sum(problem, {'alpha': k}, 0, table),
                table['z', k] * 2)
        self.assertEqual(table['w', 0], 2)

    def test_combined_sum_from_coordinates(self):
        problem = ProblemSpec(QQ, (monic('z', [[1], [0, -1], [1]]),
                monic('v', [[-1, -1], [1]])),
            (PseudoTerm(XRat.one(), (('z', 'alpha'),)),
                PseudoTerm(XRat.from_poly(X), (('v', 'beta'),))),
            ('alpha', 'beta'))
        table = PowersumTable(problem, 6)
        derivatives = derivative_table(problem, [0, 1, 2])
        for specialization in [{'alpha': 2, 'beta': 1},
                {'alpha': 3, 'beta': 2}, {'alpha': 0, 'beta': 4}]:
            for order, vector in derivatives.items():
                total = XRat.zero()
                for (j, c), coeff in vector.items():
                    term = problem.terms[j]
                    value = coeff.specialize(specialization)
                    for i, polynomial in enumerate(problem.polynomials):
                        symbol = term.exponent(polynomial.id)
                        exponent = specialization[symbol] if symbol else 0
                        value = value * table[polynomial.id, exponent + c[i]]
                    total = total + value
                self.assertEqual(total,
                    combined_sum(problem, specialization, order, table))


class TowerTestCase(unittest.TestCase):
    'Test residue rings and derivatives in tensor coordinates'

    def test_inverse(self):
        problem = single_problem([[0, -1], [], [1]])
        extension = Extension(problem.polynomials[0])
        t = (XRat.zero(), XRat.one())
        inverse = extension.invert(t)
        self.assertEqual(extension.mul(t, inverse), (XRat.one(), XRat.zero()))
        self.assertEqual(inverse, (XRat.zero(), XRat(XPoly.one(), X)))
        with self.assertRaises(NotInvertible):
            extension.invert((XRat.zero(), XRat.zero()))

    def test_invert_mod(self):
        rng = random.Random(1729)
        for _ in range(20):
            degree = rng.randint(1, 4)
            lower = [rng.randint(-3, 3) for _ in range(degree)]
            lower[0] = lower[0] or 1
            # Eisenstein at x, so every nonzero residue is invertible
            poly = MonicPoly('u', tuple(XRat.from_poly(X * c) for c in lower)
                + (XRat.one(),))
            residue = tuple(XRat(XPoly([rng.randint(-3, 3),
                            rng.randint(-2, 2)]), XPoly([rng.randint(1, 3)]))
                for _ in range(degree))
            if not any(residue):
                residue = (XRat.one(),) + residue[1:]
            extension = Extension(poly)
            inverse = invert_mod(residue, poly)
            self.assertEqual(extension.mul(residue, inverse),
                extension.basis(0))

    def test_root_derivative(self):
        extension = Extension(single_problem([[1], [0, -1], [1]])
            .polynomials[0])
        du = extension.root_derivative
        # Du = u^2 / (u^2 - 1) = (x u - 2) / (x^2 - 4)
        den = X ** 2 - 4
        self.assertEqual(du, (XRat(poly(-2), den), XRat(X, den)))

    def test_first_derivative(self):
        problem = single_problem([[0, -1], [1]])
        first = derivative_table(problem, [1])[1]
        self.assertEqual(first.coordinate(0, (0,)),
            ALPHA.scale(XRat(XPoly.one(), X)))
        self.assertEqual(derive_vector(problem.tower.initial(), problem),
            first)
        self.assertEqual(dimension_bound(problem), 1)
        self.assertEqual(tensor_support(problem, 3), [(0, (0,))])

    def test_linear_collapse(self):
        problem = parse_problem(_read('two_powers_problem.json'))
        table = derivative_table(problem, range(5))
        origin = (0, 0)
        for a in range(4):
            for b in range(4):
                values = {'alpha': a, 'beta': b}
                expected = XRat.from_poly(X ** a + (X + 1) ** b)
                for order in range(5):
                    vector = table[order]
                    self.assertEqual(vector.support(),
                        [(0, origin), (1, origin)])
                    collapsed = (vector.coordinate(0, origin).specialize(
                            values) * XRat.from_poly(X ** a)
                        + vector.coordinate(1, origin).specialize(values)
                        * XRat.from_poly((X + 1) ** b))
                    self.assertEqual(collapsed, expected)
                    expected = expected.derive()

    def test_symbol_degree_bound(self):
        problem = ProblemSpec(QQ, (monic('z', [[1], [0, -1], [1]]),
                monic('v', [[-1, -1], [1]])),
            (PseudoTerm(XRat.one(), (('z', 'alpha'), ('v', 'beta'))),),
            ('alpha', 'beta'))
        for order, vector in derivative_table(problem, range(5)).items():
            for _, coeff in vector.items():
                self.assertLessEqual(coeff.total_degree(), order)

    def test_shared_problem_across_threads(self):
        text = _read('two_powers_problem.json')
        expected = derivative_table(parse_problem(text), [6])[6]
        problem = parse_problem(text)

        def compute(_):
            return problem.tower, derivative_table(problem, [6])[6]

        with ThreadPoolExecutor(max_workers=4) as executor:
            results = list(executor.map(compute, range(8)))
        self.assertEqual(len({id(tower) for tower, _ in results}), 1)
        for _, vector in results:
            self.assertEqual(vector, expected)

    def test_validation(self):
        with self.assertRaises(ValidationError):
            single_problem([[0, -1], [2]]).validate()
        with self.assertRaises(ValidationError):
            single_problem([[], [1]]).validate()
        with self.assertRaises(ValidationError):
            single_problem([[3]]).validate()

    def test_lodo_derive_naturality(self):
        problem = parse_problem(_read('two_powers_problem.json'))
        lodo = Lodo([(1, ALPHA * X), (0, BETA + 1)])
        self.assertEqual(apply_lodo(lodo_derive(lodo), problem),
            derive_vector(apply_lodo(lodo, problem), problem))

    def test_lodo_primitive(self):
        lodo = Lodo([(1, ALPHA.scale(XRat(poly(-2), X))), (0, BETA * 4)])
        self.assertEqual(lodo.primitive(),
            Lodo([(1, ALPHA * 1), (0, BETA * (X * -2))]))
        self.assertEqual(lodo.rename('beta', 'gamma').coefficient(0),
            AlphaPoly.symbol('gamma') * 4)
        self.assertEqual(Lodo([(0, ALPHA - ALPHA)]).order, -1)

    def test_rename_symbol(self):
        problem = single_problem([[1], [0, -1], [1]])
        lodo = eliminate_resolvent(problem)
        renamed = ProblemSpec(QQ, problem.polynomials,
            (PseudoTerm(XRat.one(), (('u', 'beta'),)),), ('beta',))
        other = rename_symbol(lodo, 'alpha', 'beta')
        self.assertEqual(other.coefficient(0), -(BETA ** 2))
        self.assertTrue(apply_lodo(other, renamed).is_zero())
        self.assertFalse(apply_lodo(lodo, renamed).is_zero())

    def test_parse_real(self):
        self.assertAlmostEqual(float(parse_real('sqrt(7)')), 7 ** 0.5)
        self.assertAlmostEqual(float(parse_real('-3/4')), -0.75)
        self.assertEqual(parse_real(Fraction(1, 2)), mpf('0.5'))
        with self.assertRaises(ValidationError):
            parse_real('seven')

    def test_numeric_residual_limits(self):
        problem = single_problem([[0, -1], [], [1]])
        with self.assertRaises(UnsupportedDegree):
            numeric_residual(Lodo([(0, ALPHA)]), {'alpha': 1}, problem, 1)


class PowersumTestCase(unittest.TestCase):
    'Test templates and the powersum formula'

    def test_default_template(self):
        template = single_polynomial_template(1, 'alpha')
        self.assertEqual(template.entries,
            ((1, ()), (0, (('alpha', 1),))))
        template = single_polynomial_template(2, 'alpha')
        self.assertEqual(template.psi, 5)
        self.assertEqual([order for order, _ in template.entries],
            [2, 1, 1, 0, 0])

    def test_template_validation(self):
        with self.assertRaises(ValidationError):
            ResolventTemplate.from_pairs([(1, {})]).validate()
        with self.assertRaises(ValidationError):
            ResolventTemplate.from_pairs([(1, {}), (1, {})]).validate()

    def test_grid(self):
        problem = parse_problem(_read('two_powers_problem.json'))
        template = parse_template(_read('two_powers_template.json'))
        specializations = default_specializations(template, problem, 'grid')
        self.assertEqual([s.key(('alpha', 'beta')) for s in specializations],
            [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (2, 4)])
        with self.assertRaises(ValidationError):
            default_specializations(template, problem, 'random')

    def test_linear(self):
        problem = single_problem([[0, -1], [1]])
        template = single_polynomial_template(1, 'alpha')
        result = powersum_resolvent(problem, template, [{'alpha': 1}])
        self.assertEqual(result.primitive_r, (X, poly(-1)))
        self.assertEqual(result.to_lodo(), Lodo([(1, AlphaPoly.constant(X)),
                    (0, -ALPHA)]))

    def test_identically_zero(self):
        problem = single_problem([[0, -1], [], [1]])
        template = single_polynomial_template(1, 'alpha')
        result = powersum_resolvent(problem, template, [{'alpha': 1}])
        self.assertIsInstance(result, IdenticallyZero)
        self.assertEqual(result.status, 'identically_zero')
        result = powersum_resolvent(problem, template, [{'alpha': 2}])
        self.assertEqual(result.primitive_r, (X * 2, poly(-1)))

    def test_specialization_errors(self):
        problem = single_problem([[0, -1], [1]])
        template = single_polynomial_template(2, 'alpha')
        with self.assertRaises(DimensionMismatch):
            powersum_resolvent(problem, template, [{'alpha': 1}])
        with self.assertRaises(ValidationError):
            powersum_resolvent(problem, template,
                [{'alpha': 1}, {'alpha': 1}, {'alpha': 2}, {'alpha': 3}])
        with self.assertRaises(ValidationError):
            powersum_resolvent(problem, single_polynomial_template(1, 'beta'),
                [{'alpha': 1}])

    def test_quadratic_default_template(self):
        problem = single_problem([[1], [0, -1], [1]])
        template = single_polynomial_template(2, 'alpha')
        specializations = default_specializations(template, problem)
        self.assertEqual(len(specializations), 4)
        result = powersum_resolvent(problem, template, specializations)
        lodo = result.to_lodo()
        self.assertTrue(apply_lodo(lodo, problem).is_zero())
        self.assertEqual(lodo, Lodo([(2, AlphaPoly.constant(X ** 2 - 4)),
                    (1, AlphaPoly.constant(X)), (0, -(ALPHA ** 2))]))


class EliminationTestCase(unittest.TestCase):
    'Test the elimination oracle'

    def test_linear(self):
        problem = single_problem([[0, -1], [1]])
        self.assertEqual(eliminate_resolvent(problem),
            Lodo([(1, AlphaPoly.constant(X)), (0, -ALPHA)]))

    def test_square_root(self):
        problem = single_problem([[0, -1], [], [1]])
        lodo = eliminate_resolvent(problem, (0, 1))
        self.assertEqual(lodo,
            Lodo([(1, AlphaPoly.constant(X * 2)), (0, -ALPHA)]))
        template = template_from_lodo(lodo)
        result = powersum_resolvent(problem, template, [{'alpha': 2}])
        self.assertTrue(equal_up_to_unit(lodo, result.to_lodo()))

    def test_quadratic(self):
        problem = single_problem([[1], [0, -1], [1]])
        lodo = eliminate_resolvent(problem)
        self.assertEqual(lodo, Lodo([(2, AlphaPoly.constant(X ** 2 - 4)),
                    (1, AlphaPoly.constant(X)), (0, -(ALPHA ** 2))]))
        self.assertTrue(apply_lodo(lodo, problem).is_zero())

    def test_equal_up_to_unit(self):
        lodo = Lodo([(1, AlphaPoly.constant(X)), (0, -ALPHA)])
        self.assertTrue(equal_up_to_unit(lodo, lodo.scale(X + 2)))
        self.assertFalse(equal_up_to_unit(lodo, lodo_derive(lodo)))

    def test_orders(self):
        problem = single_problem([[0, -1], [1]])
        with self.assertRaises(ValidationError):
            eliminate_resolvent(problem, (1, 0))
        with self.assertRaises(DimensionMismatch):
            eliminate_resolvent(problem, (0, 1, 2))
        with self.assertRaises(TooLarge):
            eliminate_resolvent(problem, (0, 1), guard=1)

    def test_degenerate(self):
        twice = PseudoTerm(XRat.one(), (('u', 'alpha'),))
        problem = single_problem([[0, -1], [1]])
        problem = ProblemSpec(QQ, problem.polynomials, (twice, twice),
            ('alpha',))
        result = eliminate_resolvent(problem)
        self.assertIsInstance(result, Degenerate)
        self.assertEqual(result.orders, (0, 1, 2))
        self.assertEqual(result.status, 'degenerate')

    def test_orders_without_zero(self):
        problem = single_problem([[0, -1], [1]])
        result = eliminate_resolvent(problem, (1, 2))
        self.assertNotIsInstance(result, Degenerate)
        self.assertTrue(apply_lodo(result, problem).is_zero())

    def test_expansion_cost(self):
        self.assertAlmostEqual(expansion_cost(1), 0)
        self.assertAlmostEqual(expansion_cost(5), 2.0791812460476247)


class BellTestCase(unittest.TestCase):
    'Test Bell polynomials and the logarithm resolvent'

    def test_pochhammer(self):
        self.assertEqual(pochhammer('alpha', 0), AlphaPoly.one())
        self.assertEqual(pochhammer('alpha', 2), ALPHA ** 2 - ALPHA)
        self.assertEqual(pochhammer('alpha', 3),
            ALPHA ** 3 - ALPHA ** 2 * 3 + ALPHA * 2)
        for k in range(1, 5):
            value = pochhammer('alpha', k)
            for point in range(k):
                self.assertTrue(value.specialize({'alpha': point}).is_zero())

    def test_bell_b(self):
        expected = {(0, 0): 1, (1, 1): 1, (2, 1): -1, (2, 2): 1, (3, 1): 2,
            (3, 2): -3, (3, 3): 1, (2, 0): 0, (2, 3): 0}
        for (m, k), value in expected.items():
            self.assertEqual(bell_b(m, k), value)

    def test_bell_b_against_differentiation(self):
        log_x = sympy.Symbol('L')
        power = 10
        for m in range(1, 7):
            derivative = sympy.diff(sympy.log(SX) ** power, SX, m) * SX ** m
            expression = sympy.expand(derivative).subs(sympy.log(SX), log_x)
            coefficients = sympy.Poly(expression, log_x)
            for k in range(1, m + 1):
                falling = factorial(power) // factorial(power - k)
                self.assertEqual(
                    coefficients.coeff_monomial(log_x ** (power - k)),
                    bell_b(m, k) * falling)

    def test_bell_partial(self):
        rng = random.Random(1618)
        args = [XRat(poly(rng.randint(1, 9)), X + rng.randint(1, 3))
            for _ in range(5)]
        for n in range(1, 6):
            self.assertEqual(bell_partial(n, 1, args), args[n - 1])
        self.assertEqual(bell_partial(2, 2, args), args[0] ** 2)
        self.assertEqual(bell_partial(0, 0, args), 1)
        self.assertEqual(bell_partial(3, 0, args), 0)

    def test_bell_partial_logarithm_arguments(self):
        for m in range(1, 6):
            args = [XRat(poly((-1) ** (j - 1) * factorial(j - 1)), X ** j)
                for j in range(1, m + 1)]
            for k in range(1, m + 1):
                self.assertEqual(bell_partial(m, k, args),
                    XRat(poly(bell_b(m, k)), X ** m))

    def test_homogeneity(self):
        rng = random.Random(4242)
        for n in range(1, 6):
            for k in range(1, n + 1):
                args = [Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                    for _ in range(n)]
                c = Fraction(rng.randint(1, 7), rng.randint(1, 7))
                scaled = [c ** (j + 1) * a for j, a in enumerate(args)]
                self.assertEqual(bell_partial(n, k, scaled),
                    c ** n * bell_partial(n, k, args))

    def test_log_derivative(self):
        exp_coefficient, logs = log_derivative(2)
        self.assertEqual(exp_coefficient, ALPHA ** 2)
        inverse = XRat(XPoly.one(), X ** 2)
        self.assertEqual(logs, {1: (-ALPHA).scale(inverse),
                2: (ALPHA ** 2 - ALPHA).scale(inverse)})

    def test_log_resolvent(self):
        self.assertEqual(log_resolvent(0), Lodo([(1, AlphaPoly.one())]))
        expected = Lodo([(3, AlphaPoly.constant(X ** 2 + X)),
                (2, AlphaPoly.constant(2 - X ** 2)),
                (1, AlphaPoly.constant(-(X + 2)))])
        self.assertEqual(log_resolvent(1), expected)

    def test_log_resolvent_annihilates_basis(self):
        for alpha_val in range(1, 4):
            lodo = log_resolvent(alpha_val)
            self.assertEqual(lodo.order, alpha_val + 2)
            basis = [FormalBasisFunction('exp')] + [
                FormalBasisFunction('log', k) for k in range(alpha_val + 1)]
            for function in basis:
                self.assertEqual(apply_to_basis(lodo, function, alpha_val),
                    {})

    def test_log_resolvent_keeps_other_functions(self):
        lodo = log_resolvent(1)
        # e^(2x) is not a solution for alpha = 1
        self.assertNotEqual(apply_to_basis(lodo, FormalBasisFunction('exp'),
                2), {})


class FileTestCase(unittest.TestCase):
    'Test file formats'

    def test_problem_round_trip(self):
        text = _read('two_powers_problem.json')
        problem = parse_problem(text)
        self.assertEqual(len(problem.polynomials), 2)
        self.assertEqual(len(problem.terms), 2)
        self.assertEqual(parse_problem(dump_problem(problem)), problem)
        self.assertEqual(dump_problem(parse_problem(dump_problem(problem))),
            dump_problem(problem))

    def test_template_round_trip(self):
        template = parse_template(_read('two_powers_template.json'))
        self.assertEqual(template.psi, 9)
        self.assertEqual(parse_template(dump_template(template)), template)

    def test_resolvent_round_trip(self):
        problem = parse_problem(_read('cubic_f3_problem.json'))
        template = parse_template(_read('cubic_f3_template.json'))
        for spec in (1, 2):
            result = powersum_resolvent(problem, template, [{'alpha': spec}])
            text = dump_resolvent(result, problem.field)
            self.assertEqual(parse_resolvent(text), result)
            self.assertEqual(dump_resolvent(parse_resolvent(text),
                    problem.field), text)

    def test_parse_errors(self):
        with self.assertRaises(ParseError) as cm:
            parse_problem('{"field": "Q",\n "polynomials": [}')
        self.assertTrue(cm.exception.location.startswith('line 2'))
        with self.assertRaises(ParseError) as cm:
            parse_problem('{"field": "Q"}')
        self.assertEqual(cm.exception.location, '/')
        with self.assertRaises(ParseError) as cm:
            parse_problem('{"field": "Q", "polynomials": [{"id": "u", '
                '"coeffs": [["a"], ["1"]]}], "pseudopolynomial": '
                '{"alphas": [], "terms": []}}')
        self.assertEqual(cm.exception.location,
            'polynomials[0].coeffs[0][0]')

    def test_validation_errors(self):
        body = ('{"field": "Q", "polynomials": [{"id": "u", "coeffs": %s}], '
            '"pseudopolynomial": {"alphas": ["alpha"], "terms": '
            '[{"a": ["1"], "factors": [["u", "alpha"]]}]}}')
        with self.assertRaises(ValidationError) as cm:
            parse_problem(body % '[["0", "-1"], ["2"]]')
        self.assertIn('monic', str(cm.exception))
        with self.assertRaises(ValidationError) as cm:
            parse_problem(body % '[[], ["1"]]')
        self.assertIn('invertible root', str(cm.exception))

    def test_repeated_factor(self):
        text = ('{"field": "Q", "polynomials": [{"id": "u", "coeffs": '
            '[["1"], ["1"]]}], "pseudopolynomial": {"alphas": ["alpha", '
            '"beta"], "terms": [{"a": ["1"], "factors": [["u", "alpha"], '
            '["u", "beta"]]}]}}')
        with self.assertRaises(ValidationError) as cm:
            parse_problem(text)
        self.assertIn('more than once', cm.exception.message)


class ConfigTestCase(unittest.TestCase):
    'Test configuration defaults'

    def test_defaults(self):
        self.assertEqual(config.getint('elimination_guard'), 9)
        self.assertEqual(config.get('strategy'), 'grid')
        self.assertEqual(config.version(), '1.0.0')
        self.assertIsInstance(Specialization({'alpha': 1}), dict)

    def test_precision_environment(self):
        with mock.patch.dict(os.environ, {config.PRECISION_ENVIRON: '50'}):
            self.assertEqual(config.precision(), 50)
        with mock.patch.dict(os.environ, {config.PRECISION_ENVIRON: ''}):
            self.assertEqual(config.precision(), 30)

