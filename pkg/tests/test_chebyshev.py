import random
import unittest

from chebdyn.chebyshev import (EvenCasePrediction, coefficient_sum, derivative_mod4_check,
                               displacement_valuation, lemma31_check, odd_coefficients, s_of_m,
                               same_structure, theorem_prediction, verify_theorem)
from chebdyn.decomposition import Ball, basin_oracle, decompose, whole_space
from chebdyn.errors import ContractError
from chebdyn.polynomial import chebyshev_recurrence


class TestParameter(unittest.TestCase):
    def test_values(self):
        self.assertEqual(s_of_m(3).s, 2)
        self.assertEqual(s_of_m(5).s, 2)
        self.assertEqual(s_of_m(7).s, 3)
        self.assertEqual(s_of_m(9).s, 3)
        self.assertEqual(s_of_m(15).s, 4)
        self.assertEqual(s_of_m(17).s, 4)
        self.assertEqual(s_of_m(31).s, 5)
        self.assertEqual(s_of_m(33).s, 5)

    def test_decomposes_m(self):
        for m in range(3, 200, 2):
            p = s_of_m(m)
            self.assertEqual((p.q << p.s) + p.sign, m)
            self.assertEqual(p.q % 2, 1)

    def test_rejects_even_and_small(self):
        for m in (1, 2, 4, -3):
            with self.assertRaises(ContractError):
                s_of_m(m)


class TestCoefficients(unittest.TestCase):
    def test_t5(self):
        report = lemma31_check(5)
        self.assertEqual(report.coefficients, (5, -20, 16))
        self.assertEqual([v.k for v in report.valuations], [0, 2, 4])
        self.assertTrue(report.passed)

    def test_odd_coefficients_formula(self):
        self.assertEqual(odd_coefficients(3), (-3, 4))
        for m in range(3, 40, 2):
            f = chebyshev_recurrence(m)
            self.assertEqual(odd_coefficients(m), tuple(f.coefficient(j) for j in range(1, m + 1, 2)))

    def test_lemma_up_to_101(self):
        for m in range(3, 102, 2):
            report = lemma31_check(m)
            self.assertTrue(report.passed, (m, report.failures))
            self.assertEqual(report.valuations[1], report.parameter.s)

    def test_coefficients_are_big(self):
        self.assertGreater(max(abs(c) for c in lemma31_check(101).coefficients).bit_length(), 64)

    def test_identities(self):
        for m in range(3, 40, 2):
            self.assertEqual(coefficient_sum(m), 1)
            self.assertTrue(derivative_mod4_check(m))


class TestValuationIdentities(unittest.TestCase):
    def test_near_zero_and_near_plus_minus_one(self):
        rng = random.Random(31)
        for m in (3, 7, 9):
            f = chebyshev_recurrence(m)
            s = s_of_m(m).s
            for _ in range(100):
                n, t = rng.randrange(1, 9), rng.randrange(0, 1 << 20)
                x0 = (1 + 2 * t) << n
                self.assertEqual(displacement_valuation(f, x0), n + s, (m, n, t))
            for _ in range(100):
                n, t = rng.randrange(2, 9), 2 * rng.randrange(0, 1 << 20) + 1
                for sign in (1, -1):
                    x0 = sign + (t << n)
                    self.assertEqual(displacement_valuation(f, x0), n + s + 1, (m, n, t, sign))

    def test_fixed_points(self):
        for m in (3, 5, 7):
            f = chebyshev_recurrence(m)
            for x0 in (0, 1, -1):
                self.assertTrue(displacement_valuation(f, x0).infinite)


class TestPrediction(unittest.TestCase):
    def test_t3_budget_8(self):
        prediction = theorem_prediction(3, 8)
        self.assertTrue(prediction.is_tiling())
        self.assertEqual(prediction.pending, (Ball.of(0, 7), Ball.of(1, 6), Ball.of(-1, 6)))
        balls = set(prediction.balls())
        self.assertIn(Ball.of(2, 3), balls)
        self.assertIn(Ball.of(6, 3), balls)
        self.assertIn(Ball.of(5, 5), balls)
        self.assertIn(Ball.of(-5, 5), balls)

    def test_tiling_for_every_s(self):
        for m in (3, 7, 15, 31, 63):
            for budget in range(s_of_m(m).s + 2, 16):
                self.assertTrue(theorem_prediction(m, budget).is_tiling(), (m, budget))

    def test_family_sizes(self):
        prediction = theorem_prediction(7, 10)
        s = 3
        counts = {}
        for member in prediction.members:
            counts[member.family] = counts.get(member.family, 0) + 1
        self.assertEqual(counts['E1'], (10 - s) * (1 << (s - 1)))
        self.assertEqual(counts['E2'], (10 - s - 2) * (1 << s))
        self.assertEqual(counts['E3'], counts['E2'])

    def test_budget_too_small(self):
        with self.assertRaises(ContractError):
            theorem_prediction(7, 4)

    def test_even_case(self):
        prediction = theorem_prediction(4, 10)
        self.assertIsInstance(prediction, EvenCasePrediction)
        self.assertEqual(prediction.attractor, 1)
        self.assertEqual(prediction.region, whole_space())

    def test_depends_only_on_s(self):
        self.assertTrue(same_structure(3, 5, 10))
        self.assertTrue(same_structure(7, 9, 10))
        self.assertTrue(same_structure(15, 17, 12))
        self.assertFalse(same_structure(3, 7, 10))


class TestVerifyTheorem(unittest.TestCase):
    def test_odd_m(self):
        for m in (3, 5, 7, 9, 15, 17, 31, 33):
            with self.subTest(m=m):
                verdict = verify_theorem(m, 12)
                self.assertTrue(verdict.passed, verdict.problems)
                self.assertEqual(verdict.fixed_points, (-1, 0, 1))
                self.assertEqual(len(verdict.matched), len(theorem_prediction(m, 12).members))

    def test_every_odd_m_up_to_33(self):
        components = {}
        for m in range(3, 34, 2):
            with self.subTest(m=m):
                verdict = verify_theorem(m, 10)
                self.assertTrue(verdict.passed, verdict.problems)
                components[m] = {c.balls for c in decompose(chebyshev_recurrence(m), 10).components}
        for m in components:
            for other in components:
                if s_of_m(m).s == s_of_m(other).s:
                    self.assertTrue(same_structure(m, other, 10), (m, other))
                    self.assertEqual(components[m], components[other], (m, other))

    def test_even_m(self):
        for m in range(2, 21, 2):
            with self.subTest(m=m):
                f = chebyshev_recurrence(m)
                self.assertTrue(basin_oracle(f, whole_space(), [Ball.of(1, 12)], 12))
                result = decompose(f, 12)
                self.assertEqual(len(result.basins), 1)
                self.assertEqual(result.basins[0].attractor_orbit, (Ball.of(1, 12),))
                self.assertTrue(verify_theorem(m, 12).passed)

    def test_contract(self):
        with self.assertRaises(ContractError):
            verify_theorem(1, 8)


if __name__ == '__main__':
    unittest.main()
