"""Divisor machinery, the elliptic pairing, and degree bookkeeping."""

import math
import random
from fractions import Fraction

import pytest

from qminv.arith import (
    BaseDegrees,
    ChernClass,
    DomainError,
    InvariantQuery,
    NormalizationError,
    canonical_u_choice,
    chi_pairing_elliptic,
    divisors,
    is_prime,
    sigma_minus_one,
    solve_base_degrees,
    torsion_order,
)

F = Fraction


class TestDivisors:
    @pytest.mark.parametrize(
        "w, expected",
        [(1, [1]), (6, [1, 2, 3, 6]), (9, [1, 3, 9]), (12, [1, 2, 3, 4, 6, 12])],
    )
    def test_examples(self, w, expected):
        assert divisors(w) == expected

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            divisors(0)

    def test_increasing_and_complete(self):
        for w in range(1, 200):
            ds = divisors(w)
            assert ds == sorted(ds)
            assert ds == [m for m in range(1, w + 1) if w % m == 0]


class TestSigmaMinusOne:
    @pytest.mark.parametrize("w, expected", [(1, F(1)), (6, F(2)), (4, F(7, 4))])
    def test_examples(self, w, expected):
        assert sigma_minus_one(w) == expected

    def test_times_w_is_divisor_total(self):
        # sigma_{-1}(w) * w equals the plain sum of divisors; the right side
        # is accumulated in integer arithmetic without the divisors helper.
        for w in range(1, 10001):
            total = 0
            d = 1
            while d * d <= w:
                if w % d == 0:
                    total += d
                    if d != w // d:
                        total += w // d
                d += 1
            assert sigma_minus_one(w) * w == total

    def test_small_range_full_brute_force(self):
        for w in range(1, 1501):
            assert sigma_minus_one(w) * w == sum(
                m for m in range(1, w + 1) if w % m == 0
            )

    @pytest.mark.parametrize("a, b", [(4, 9), (3, 5), (8, 27), (5, 7), (9, 16), (11, 25)])
    def test_multiplicative_on_coprime_arguments(self, a, b):
        assert math.gcd(a, b) == 1
        assert sigma_minus_one(a * b) == sigma_minus_one(a) * sigma_minus_one(b)


class TestChiPairing:
    def test_rank_two_unit(self):
        assert chi_pairing_elliptic(ChernClass(2, 1), ChernClass(1, 0)) == 1

    def test_zero_class(self):
        assert chi_pairing_elliptic(ChernClass(7, 3), ChernClass(0, 0)) == 0

    def test_rank_three_unit(self):
        assert chi_pairing_elliptic(ChernClass(3, 1), ChernClass(1, 0)) == 1

    def test_canonical_choice_pairs_to_one(self):
        for r in range(2, 13):
            for a in range(1, r):
                if math.gcd(r, a) != 1:
                    continue
                u = canonical_u_choice(r, a)
                assert chi_pairing_elliptic(ChernClass(r, a), u) == 1

    def test_canonical_choice_needs_coprimality(self):
        with pytest.raises(DomainError):
            canonical_u_choice(6, 3)


class TestSolveBaseDegrees:
    def test_rank_two_standard(self):
        assert solve_base_degrees(2, 1, 3, ChernClass(1, 0)) == BaseDegrees(3, 0)

    def test_degree_zero(self):
        assert solve_base_degrees(2, 1, 0, ChernClass(1, 0)) == BaseDegrees(0, 0)

    def test_rank_three(self):
        assert solve_base_degrees(3, 1, 5, ChernClass(1, 0)) == BaseDegrees(5, 0)

    def test_singular_system(self):
        with pytest.raises(NormalizationError):
            solve_base_degrees(2, 1, 3, ChernClass(0, 0))

    def test_non_integer_solution(self):
        # chi pairing 2 makes the determinant 2; odd w has no integer solution
        with pytest.raises(NormalizationError):
            solve_base_degrees(2, 1, 3, ChernClass(0, 1))

    def test_resubstitution_on_random_valid_queries(self):
        rng = random.Random(2024)
        for _ in range(300):
            r = rng.randrange(2, 12)
            choices = [a for a in range(1, r) if math.gcd(r, a) == 1]
            a = rng.choice(choices)
            base = canonical_u_choice(r, a)
            s = rng.randrange(-4, 5)
            u = ChernClass(base.rank + r * s, base.deg - a * s)
            assert chi_pairing_elliptic(ChernClass(r, a), u) == 1
            w = rng.randrange(0, 500)
            bd = solve_base_degrees(r, a, w, u)
            assert bd.c1 * u.deg + bd.ch2 * u.rank == 0
            assert bd.c1 * a - bd.ch2 * r == w


class TestTorsionOrder:
    @pytest.mark.parametrize("n, expected", [(1, 1), (3, 9), (10, 100)])
    def test_examples(self, n, expected):
        assert torsion_order(n) == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            torsion_order(0)


class TestIsPrime:
    def test_small_table(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
        for n in range(25):
            assert is_prime(n) == (n in primes)


class TestInvariantQuery:
    def test_default_u_choice_for_a_one(self):
        q = InvariantQuery(r=2, d=1, a=1, w=3, g=2)
        assert q.u_choice == ChernClass(1, 0)

    def test_u_choice_required_otherwise(self):
        with pytest.raises(ValueError, match="u_choice is required"):
            InvariantQuery(r=5, d=1, a=2, w=4, g=2)

    def test_rejects_bad_pairing(self):
        with pytest.raises(ValueError, match="pair to 1"):
            InvariantQuery(r=2, d=1, a=1, w=3, g=2, u_choice=ChernClass(0, 1))

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError, match="gcd"):
            InvariantQuery(r=4, d=1, a=2, w=1, g=2, u_choice=ChernClass(1, 0))

    def test_rejects_low_genus(self):
        with pytest.raises(ValueError, match="genus"):
            InvariantQuery(r=2, d=1, a=1, w=3, g=1)

    def test_rejects_a_out_of_range(self):
        with pytest.raises(ValueError, match="lie in"):
            InvariantQuery(r=2, d=1, a=3, w=3, g=2)

    def test_base_degrees_shortcut(self):
        q = InvariantQuery(r=2, d=1, a=1, w=6, g=2)
        assert q.base_degrees() == BaseDegrees(6, 0)
