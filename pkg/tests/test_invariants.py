"""Invariant evaluation on both routes and the series identities."""

from fractions import Fraction

import pytest

from qminv.arith import InvariantQuery, canonical_u_choice, divisors, sigma_minus_one
from qminv.exactalg import series_log_product
from qminv.invariants import (
    ROUTE_ORACLE,
    UnsupportedQueryError,
    degree_congruent,
    gw_moduli,
    qm_conjectural,
    qm_constant_map,
    qm_degree_zero,
    qm_elliptic_closed,
    qm_elliptic_oracle,
    qm_moduli,
    series_identity_even,
    series_identity_odd,
    vafa_witten,
)

F = Fraction


def q2(d, w, g=2):
    return InvariantQuery(r=2, d=d, a=1, w=w, g=g)


class TestClosedForm:
    def test_rank_two_degree_three(self):
        assert qm_elliptic_closed(q2(1, 3)).value_t == F(8, 3)

    def test_parity_zero_branch(self):
        result = qm_elliptic_closed(q2(0, 3))
        assert result.value_t == 0
        assert result.breakdown == ()

    def test_degree_one(self):
        assert qm_elliptic_closed(q2(1, 1)).value_t == F(2)

    def test_breakdown_sums_to_value(self):
        result = qm_elliptic_closed(q2(0, 12))
        assert sum(c for _, c in result.breakdown) == result.value_t
        assert [m for m, _ in result.breakdown] == divisors(12)

    def test_unsupported_rank_raises(self):
        # rank 3, w = 5: the divisor 5 is 2 mod 3
        query = InvariantQuery(r=3, d=2, a=1, w=5, g=2)
        with pytest.raises(UnsupportedQueryError):
            qm_elliptic_closed(query)

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            qm_elliptic_closed(q2(0, 0))


class TestOracle:
    def test_rank_two_degree_three_with_breakdown(self):
        result = qm_elliptic_oracle(q2(1, 3))
        assert result.value_t == F(8, 3)
        assert result.breakdown == ((1, F(2)), (3, F(2, 3)))
        assert result.route == ROUTE_ORACLE
        assert not result.conjectural

    def test_degree_one_genus_five(self):
        assert qm_elliptic_oracle(q2(1, 1, g=5)).value_t == F(8)

    def test_congruence_gate_rank_three(self):
        # degree 3 pins the base degree to 0 mod 3, so d = 0 carries the
        # invariant and d = 1 gives the empty moduli space
        compatible = InvariantQuery(r=3, d=0, a=1, w=3, g=2)
        result = qm_elliptic_oracle(compatible)
        assert result.value_t == F(8, 3)
        assert not result.conjectural
        empty = InvariantQuery(r=3, d=1, a=1, w=3, g=2)
        assert qm_elliptic_oracle(empty).value_t == 0

    def test_permissive_flags_conjectural(self):
        query = InvariantQuery(r=3, d=2, a=1, w=5, g=2)
        result = qm_elliptic_oracle(query, strict=False)
        assert result.conjectural
        assert result.value_t == 2 * sigma_minus_one(5)

    def test_oracle_equals_closed_small_grid(self):
        for d in (0, 1):
            for g in (2, 3):
                for w in range(1, 61):
                    query = q2(d, w, g)
                    assert (
                        qm_elliptic_oracle(query).value_t
                        == qm_elliptic_closed(query).value_t
                    )


class TestModuliSide:
    def test_degree_one(self):
        assert qm_moduli(q2(1, 1)).value_t == F(32)

    def test_even_branch(self):
        assert qm_moduli(q2(0, 2)).value_t == F(48)

    def test_zero_branch(self):
        assert qm_moduli(q2(1, 2)).value_t == 0

    def test_correspondence_factor(self):
        for w in (1, 2, 5, 6):
            for g in (2, 3, 4):
                query = q2(w % 2, w, g)
                elliptic = qm_elliptic_oracle(query)
                moduli = qm_moduli(query, route=ROUTE_ORACLE)
                assert moduli.value_t == F(2) ** (2 * g) * elliptic.value_t

    def test_needs_prime_rank(self):
        query = InvariantQuery(r=9, d=1, a=1, w=1, g=2)
        with pytest.raises(UnsupportedQueryError):
            qm_moduli(query)

    def test_vafa_witten_alias(self):
        assert vafa_witten is qm_moduli

    def test_gw_alias_odd_degree_only(self):
        assert gw_moduli(q2(1, 3)).value_t == qm_moduli(q2(1, 3)).value_t
        with pytest.raises(UnsupportedQueryError):
            gw_moduli(q2(0, 2))


class TestConstantMap:
    @pytest.mark.parametrize(
        "r, g, expected", [(2, 2, 4), (3, 2, 9), (2, 3, 16), (5, 4, 5**6)]
    )
    def test_values(self, r, g, expected):
        assert qm_constant_map(r, 1, g) == expected

    def test_rejects_zero_a(self):
        with pytest.raises(UnsupportedQueryError):
            qm_constant_map(3, 0, 2)

    def test_rejects_composite_rank(self):
        with pytest.raises(UnsupportedQueryError):
            qm_constant_map(4, 1, 2)

    def test_degree_zero_routing(self):
        assert qm_degree_zero(q2(0, 0)).value_t == F(4)
        # base degree 1 is incompatible with a degree-zero quasisection
        assert qm_degree_zero(q2(1, 0)).value_t == 0


class TestGenusBehaviour:
    def test_linear_in_two_g_minus_two(self):
        for w in (1, 3, 4, 12):
            base = qm_elliptic_closed(q2(w % 2, w, 2)).value_t
            for g in range(3, 7):
                assert qm_elliptic_closed(q2(w % 2, w, g)).value_t == (g - 1) * base

    def test_congruence_vanishing_both_routes(self):
        for w in range(1, 30):
            query = q2((w + 1) % 2, w)
            assert not degree_congruent(query)
            assert qm_elliptic_closed(query).value_t == 0
            assert qm_elliptic_oracle(query).value_t == 0


class TestSeriesIdentities:
    def test_odd_identity_low_coefficients(self):
        check = series_identity_odd(2, 3)
        assert check.equal
        assert check.lhs.coefficient(1) == F(32)
        assert check.lhs.coefficient(2) == 0
        assert check.rhs.coefficient(1) == F(32)

    def test_odd_identity_genus_three_q3(self):
        check = series_identity_odd(3, 3)
        assert check.equal
        assert check.lhs.coefficient(3) == F(1024, 3)

    def test_even_identity_low_coefficients(self):
        check = series_identity_even(2, 4)
        assert check.equal
        assert check.lhs.coefficient(1) == 0
        assert check.lhs.coefficient(2) == F(48)
        assert check.lhs.coefficient(4) == F(56)

    def test_identities_across_genera(self):
        for g in range(2, 6):
            assert series_identity_odd(g, 25).equal
            assert series_identity_even(g, 25).equal

    def test_odd_series_matches_elliptic_target_count(self):
        # after stripping the prefactor, the odd part of the moduli series
        # is twice the positive-degree genus-1 count of the elliptic curve
        # itself, whose generating series is -log prod (1 - q^k)
        g, order = 3, 21
        check = series_identity_odd(g, order)
        prefactor = F((2 - 2 * g) * 2 ** (2 * g - 1))
        minus_u = series_log_product(order).scale(-1)
        for w in range(1, order + 1, 2):
            assert check.lhs.coefficient(w) / prefactor == -2 * minus_u.coefficient(w)


class TestConjecturalFormula:
    def test_proven_case_cross_checked(self):
        result = qm_conjectural(InvariantQuery(r=3, d=1, a=1, w=1, g=2))
        assert result.value_t == F(162)
        assert not result.conjectural

    def test_congruence_zero(self):
        result = qm_conjectural(InvariantQuery(r=3, d=2, a=1, w=1, g=2))
        assert result.value_t == 0

    def test_rank_five_flagged(self):
        u = canonical_u_choice(5, 2)
        incompatible = InvariantQuery(r=5, d=1, a=2, w=4, g=2, u_choice=u)
        result = qm_conjectural(incompatible)
        assert result.value_t == 0
        assert result.conjectural
        compatible = InvariantQuery(r=5, d=2, a=2, w=4, g=2, u_choice=u)
        result = qm_conjectural(compatible)
        assert result.value_t == 2 * F(5) ** 4 * sigma_minus_one(4)
        assert result.conjectural

    def test_matches_moduli_closed_form_when_proven(self):
        for w in (1, 2, 3, 4, 6, 9):
            query = q2(w % 2, w, 3)
            assert qm_conjectural(query).value_t == qm_moduli(query).value_t
            assert not qm_conjectural(query).conjectural
