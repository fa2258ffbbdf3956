import unittest

from chebdyn.dynamics import (Behavior, Cycle, a_n, b_n, classify, cycles_at_level, lifts,
                              linearization, make_cycle)
from chebdyn.errors import BudgetExceeded, ContractError
from chebdyn.padic import Residue
from chebdyn.polynomial import IntPolynomial, chebyshev_recurrence

T2 = chebyshev_recurrence(2)
T3 = chebyshev_recurrence(3)
x = IntPolynomial.identity()

CORPUS = {
    'T_3': T3,
    'T_5': chebyshev_recurrence(5),
    'T_7': chebyshev_recurrence(7),
    'x^2': x ** 2,
    'x^2 + 1': x ** 2 + 1,
    'x^2 + x': x ** 2 + x,
    '4*x^3 - 3*x + 8': 4 * x ** 3 - 3 * x + 8,
}


def iterate_mod(f, value, times, modulus):
    for _ in range(times):
        value = f.eval_at(value, modulus)
    return value


class TestCycles(unittest.TestCase):
    def test_level_one(self):
        self.assertEqual([c.values for c in cycles_at_level(T3, 1)], [(0,), (1,)])
        self.assertEqual([c.values for c in cycles_at_level(T2, 1)], [(1,)])

    def test_every_residue_of_t3_mod_8_is_fixed(self):
        cycles = cycles_at_level(T3, 3)
        self.assertEqual([c.values for c in cycles], [(v,) for v in range(8)])

    def test_every_residue_reaches_a_cycle(self):
        for name, f in CORPUS.items():
            for n in (1, 4, 8):
                modulus = 1 << n
                periodic = {v for c in cycles_at_level(f, n) for v in c.values}
                for start in range(modulus):
                    y = start
                    for _ in range(modulus):
                        y = f.eval_at(y, modulus)
                    self.assertIn(y, periodic, (name, n, start))

    def test_lifts_of_every_cycle_are_the_next_level(self):
        for name, f in CORPUS.items():
            for n in range(1, 8):
                above = sorted((lift.values for c in cycles_at_level(f, n) for lift in lifts(f, c)))
                self.assertEqual(above, sorted(c.values for c in cycles_at_level(f, n + 1)), (name, n))

    def test_cycle_rotates_to_its_minimum(self):
        c = Cycle(2, (Residue(2, 3), Residue(2, 1)))
        self.assertEqual(c.values, (1, 3))

    def test_make_cycle_checks_the_orbit(self):
        make_cycle(x ** 2 + 1, 1, (0, 1))
        with self.assertRaises(ContractError):
            make_cycle(T3, 3, (2, 6))

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            cycles_at_level(T3, 25)
        with self.assertRaises(BudgetExceeded):
            cycles_at_level(T3, 6, limit=5)
        with self.assertRaises(ContractError):
            cycles_at_level(T3, 0)


class TestCoefficients(unittest.TestCase):
    def test_a_n(self):
        self.assertEqual(a_n(T3, make_cycle(T3, 2, (1,))), 1)
        self.assertEqual(a_n(T2, make_cycle(T2, 1, (1,))) % 2, 0)
        f = 2 * x ** 2 + x
        self.assertEqual(a_n(f, make_cycle(f, 1, (0,))), 1)

    def test_b_n(self):
        for n in range(1, 10):
            self.assertEqual(b_n(T3, make_cycle(T3, n, (0,))), 0)
        self.assertEqual(b_n(T3, make_cycle(T3, 3, (2,))), 1)
        self.assertEqual(b_n(T3, make_cycle(T3, 3, (5,))), 0)

    def test_b_n_needs_odd_a(self):
        with self.assertRaises(ContractError):
            b_n(T2, make_cycle(T2, 1, (1,)))


class TestClassify(unittest.TestCase):
    def test_examples(self):
        cls = classify(T3, make_cycle(T3, 3, (2,)))
        self.assertIs(cls.behavior, Behavior.STRONGLY_GROWS)
        self.assertEqual((cls.a_mod4, cls.b_mod2), (1, 1))
        self.assertIs(classify(T3, make_cycle(T3, 1, (0,))).behavior, Behavior.STRONGLY_SPLITS)
        tails = classify(T2, make_cycle(T2, 1, (1,)))
        self.assertIs(tails.behavior, Behavior.GROWS_TAILS)
        self.assertIsNone(tails.b_mod2)

    def test_tag_table(self):
        for f in CORPUS.values():
            for n in range(1, 7):
                for c in cycles_at_level(f, n):
                    cls = classify(f, c)
                    self.assertEqual(cls.grows_tails, cls.a_mod4 % 2 == 0)
                    if not cls.grows_tails:
                        self.assertEqual(cls.grows, cls.b_mod2 == 1)
                        self.assertEqual(cls.strong, cls.a_mod4 == 1)


class TestLifts(unittest.TestCase):
    def test_examples(self):
        self.assertEqual([c.values for c in lifts(T3, make_cycle(T3, 3, (2,)))], [(2, 10)])
        self.assertEqual([c.values for c in lifts(T3, make_cycle(T3, 1, (0,)))], [(0,), (2,)])
        following = lifts(T2, make_cycle(T2, 1, (1,)))
        self.assertEqual([len(c) for c in following], [1])

    def test_structural_laws(self):
        for name, f in CORPUS.items():
            for n in range(1, 13):
                for c in cycles_at_level(f, n):
                    cls = classify(f, c)
                    # lifts() raises ConsistencyFault when the lift-count law fails
                    following = lifts(f, c, cls)
                    if cls.grows_tails:
                        self.assertTrue(classify(f, following[0]).grows_tails, (name, str(c)))
                    if cls.behavior is Behavior.STRONGLY_GROWS and n >= 2:
                        self.assertIs(classify(f, following[0]).behavior, Behavior.STRONGLY_GROWS,
                                      (name, str(c)))

    def test_lifts_cover_the_children(self):
        for f in CORPUS.values():
            for c in cycles_at_level(f, 5):
                following = lifts(f, c)
                covered = {v for d in following for v in d.values}
                own = {v for p in c.points for v in (p.value, p.value + c.modulus)}
                self.assertLessEqual(covered, own)


class TestLinearization(unittest.TestCase):
    def test_congruence(self):
        for name, f in CORPUS.items():
            for n in range(1, 11):
                modulus = 1 << (2 * n)
                for c in cycles_at_level(f, n):
                    lin = linearization(f, c)
                    x1 = c.points[0].value
                    for t in (0, 1):
                        image = iterate_mod(f, x1 + (t << n), len(c), modulus)
                        expected = (x1 + (lin.phi(t) << n)) % modulus
                        self.assertEqual(image, expected, (name, str(c), t))

    def test_agrees_with_classification(self):
        for f in CORPUS.values():
            for c in cycles_at_level(f, 4):
                lin = linearization(f, c)
                self.assertEqual(lin.a % 4, a_n(f, c))
                if lin.a % 2:
                    self.assertEqual(lin.b % 2, b_n(f, c))


if __name__ == '__main__':
    unittest.main()
