import random
import unittest

from chebdyn.errors import ContractError, LevelMismatch
from chebdyn.padic import INFINITE, Residue, Valuation, children, reduce, v2


class TestValuation(unittest.TestCase):
    def test_small_values(self):
        self.assertEqual(v2(1), 0)
        self.assertEqual(v2(24), 3)
        self.assertEqual(v2(-8), 3)
        self.assertEqual(v2(480), 5)

    def test_zero_is_infinite(self):
        self.assertIs(v2(0), INFINITE)
        self.assertTrue(v2(0).infinite)
        self.assertGreater(v2(0), 10 ** 6)
        self.assertEqual(repr(v2(0)), 'Infinite')

    def test_big_integers(self):
        self.assertEqual(v2(3 << 500), 500)
        self.assertEqual(v2(-(1 << 200)), 200)

    def test_product_adds_valuations(self):
        rng = random.Random(2)
        for _ in range(200):
            a = rng.randrange(1, 1 << 80) * rng.choice((1, -1))
            b = rng.randrange(1, 1 << 80)
            self.assertEqual(v2(a * b), v2(a) + v2(b))

    def test_sum_is_at_least_the_minimum(self):
        rng = random.Random(3)
        for _ in range(200):
            a, b = rng.randrange(-10 ** 9, 10 ** 9), rng.randrange(-10 ** 9, 10 ** 9)
            self.assertGreaterEqual(v2(a + b), min(v2(a), v2(b)))

    def test_sum_of_distinct_valuations_is_the_minimum(self):
        rng = random.Random(4)
        for _ in range(300):
            a = rng.randrange(1, 1 << 40) << rng.randrange(0, 30)
            b = rng.randrange(1, 1 << 40) << rng.randrange(0, 30)
            if v2(a) == v2(b):
                continue
            self.assertEqual(v2(a + b), min(v2(a), v2(b)))
            self.assertEqual(v2(a - b), min(v2(a), v2(b)))

    def test_infinite_absorbs_addition(self):
        self.assertIs(INFINITE + 3, INFINITE)
        self.assertEqual(Valuation(2) + Valuation(5), 7)

    def test_hash_agrees_with_int(self):
        self.assertEqual(hash(Valuation(3)), hash(3))
        self.assertEqual({Valuation(3): 'x'}[3], 'x')
        self.assertIn(3, {v2(8)})
        self.assertIn(v2(24), {3})


class TestResidue(unittest.TestCase):
    def test_reduce_wraps_negatives(self):
        self.assertEqual(reduce(-1, 3), Residue(3, 7))
        self.assertEqual(reduce(1 << 100, 4).value, 0)

    def test_reduce_is_congruent(self):
        rng = random.Random(6)
        for _ in range(300):
            a, level = rng.randrange(-(1 << 120), 1 << 120), rng.randrange(1, 100)
            r = reduce(a, level)
            self.assertEqual(r.level, level)
            self.assertEqual((r.value - a) % (1 << level), 0)
            self.assertTrue(0 <= r.value < 1 << level)

    def test_reduce_rejects_level_zero(self):
        with self.assertRaises(ContractError):
            reduce(5, 0)

    def test_value_out_of_range(self):
        with self.assertRaises(ContractError):
            Residue(3, 8)

    def test_signed_form(self):
        self.assertEqual(Residue(3, 7).signed, -1)
        self.assertEqual(Residue(3, 4).signed, 4)
        self.assertEqual(Residue(3, 5).signed, -3)

    def test_arithmetic(self):
        a, b = Residue(4, 13), Residue(4, 7)
        self.assertEqual(a + b, Residue(4, 4))
        self.assertEqual(a - b, Residue(4, 6))
        self.assertEqual(a * b, Residue(4, 11))
        self.assertEqual(-a, Residue(4, 3))
        self.assertEqual(a + 3, Residue(4, 0))

    def test_mixed_levels_are_rejected(self):
        with self.assertRaises(LevelMismatch):
            Residue(3, 1) + Residue(4, 1)
        with self.assertRaises(LevelMismatch):
            Residue(3, 1) * Residue(2, 1)

    def test_children(self):
        low, high = children(Residue(3, 5))
        self.assertEqual((low, high), (Residue(4, 5), Residue(4, 13)))

    def test_children_reduce_to_the_parent(self):
        rng = random.Random(7)
        for _ in range(300):
            parent = reduce(rng.randrange(-(1 << 64), 1 << 64), rng.randrange(1, 60))
            low, high = children(parent)
            self.assertNotEqual(low, high)
            for child in (low, high):
                self.assertEqual(child.level, parent.level + 1)
                self.assertEqual(reduce(child.value, parent.level), parent)


if __name__ == '__main__':
    unittest.main()
