# -*- coding: utf-8 -*-
from __future__ import annotations

from types import SimpleNamespace

import pytest
import sympy

from srg_lab.params import (
    FeasibilityReason,
    IdentityViolationError,
    InfeasibleParamsError,
    SrgParams,
    _multiplicity_check,
    anchor_triangle_count,
    check_identity,
    enumerate_family,
    expected_counts,
    family_order,
    family_status,
    integrality_test,
    spectrum_of,
    triangle_bookkeeping,
)

SRG19 = SrgParams(19, 6, 1, 2)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Params
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestSrgParams:

    def test_str(self):
        """Verify the srg(n,k,l,m) rendering."""
        assert str(SRG19) == "srg(19,6,1,2)"

    @pytest.mark.parametrize("args", [(0, 0, 0, 0), (5, 5, 0, 0), (5, 2, 2, 1), (5, 2, 0, 3)])
    def test_out_of_range_rejected(self, args):
        """Verify basic range checks on n, k, lambda, mu."""
        with pytest.raises(ValueError):
            SrgParams(*args)

    def test_family_order(self):
        """Verify n = k(k-2)/2 + k + 1 for the lambda=1, mu=2 family."""
        assert family_order(4) == 9
        assert family_order(6) == 19
        assert family_order(14) == 99
        assert family_order(3, 0, 1) == 10

    def test_family_order_odd_k(self):
        """Verify odd k has no lambda=1, mu=2 family member."""
        with pytest.raises(InfeasibleParamsError):
            family_order(3)

    def test_identity(self):
        """Verify the parameter identity and its complete-graph exemption."""
        assert check_identity(SRG19)
        assert check_identity(SrgParams(10, 3, 0, 1))
        assert check_identity(SrgParams(3, 2, 1, 2))
        assert not check_identity(SrgParams(9, 4, 1, 3))


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Integrality
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestIntegrality:

    def test_family_passes_exactly_known_k(self):
        """Verify k <= 1000 passes exactly at 2, 4, 14, 22, 112, 994."""
        verdicts = enumerate_family(1, 2, 1000)
        assert [v.params.k for v in verdicts] == list(range(2, 1001, 2))
        passing = [v.params.k for v in verdicts if v.passes_integrality]
        assert passing == [2, 4, 14, 22, 112, 994]

    def test_k6_fails_with_non_square_discriminant(self):
        """Verify srg(19,6,1,2) fails with D = 17."""
        verdict = integrality_test(SRG19)
        assert not verdict.passes_integrality
        assert verdict.reason is FeasibilityReason.NON_SQUARE_DISCRIMINANT
        assert spectrum_of(SRG19).discriminant == 17
        assert spectrum_of(SRG19).numerator == -6

    def test_k8_fails_with_non_integer_multiplicity(self):
        """Verify srg(33,8,1,2) has square D but fractional multiplicities."""
        verdict = integrality_test(SrgParams(33, 8, 1, 2))
        assert verdict.reason is FeasibilityReason.NON_INTEGER_MULTIPLICITY

    def test_small_tables(self):
        """Verify the k_max boundaries of the family table."""
        assert len(enumerate_family(1, 2, 6)) == 3
        assert enumerate_family(1, 2, 1) == []

    def test_identity_violation_verdict(self):
        """Verify failing the identity is reported before the spectrum."""
        verdict = integrality_test(SrgParams(9, 4, 1, 3))
        assert verdict.reason is FeasibilityReason.IDENTITY_VIOLATION
        with pytest.raises(IdentityViolationError):
            spectrum_of(SrgParams(9, 4, 1, 3))

    def test_zero_discriminant_has_its_own_reason(self):
        """Verify D = 0 with a non-zero numerator is not reported as non-square."""
        raw = SimpleNamespace(n=5, k=1, lam=1, mu=1)
        assert _multiplicity_check(raw) == (0, 2, FeasibilityReason.ZERO_DISCRIMINANT)

    def test_verdict_to_dict(self):
        """Verify the feasibility row schema."""
        assert integrality_test(SRG19).to_dict() == {
            "k": 6, "n": 19, "pass": False,
            "reason": "non_square_discriminant_with_nonzero_numerator"}

    def test_mu_zero_family_rejected(self):
        """Verify family enumeration needs mu >= 1."""
        with pytest.raises(InfeasibleParamsError):
            enumerate_family(1, 0, 10)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Spectrum
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestSpectrum:

    def test_spot_values(self):
        """Verify hand-derived eigenvalues and multiplicities."""
        s = spectrum_of(SrgParams(9, 4, 1, 2))
        assert (s.r, s.s, s.f, s.g) == (1, -2, 4, 4)
        s = spectrum_of(SrgParams(99, 14, 1, 2))
        assert (s.r, s.s, s.f, s.g) == (3, -4, 54, 44)
        s = spectrum_of(SrgParams(10, 3, 0, 1))
        assert (s.r, s.s, s.f, s.g) == (1, -2, 5, 4)

    def test_conference_case(self):
        """Verify the pentagon has irrational eigenvalues with f = g = 2."""
        s = spectrum_of(SrgParams(5, 2, 0, 1))
        assert s.integral
        assert s.f == 2 and s.g == 2
        assert sympy.simplify(s.r - (sympy.sqrt(5) - 1) / 2) == 0

    def test_identities_over_passing_family(self):
        """Verify f+g, trace and product identities for every passing k <= 1000."""
        for verdict in enumerate_family(1, 2, 1000):
            if not verdict.passes_integrality:
                continue
            p = verdict.params
            s = spectrum_of(p)
            assert s.f + s.g == p.n - 1
            assert sympy.simplify(p.k + s.f * s.r + s.g * s.s) == 0
            assert sympy.simplify(s.r * s.s - (p.mu - p.k)) == 0
            assert sympy.simplify(s.r + s.s - (p.lam - p.mu)) == 0


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Counting
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestCounting:

    def test_expected_counts(self):
        """Verify triangle totals and partition sizes."""
        counts = expected_counts(SRG19)
        assert (counts.triangles, counts.triangles_per_vertex) == (19, 3)
        assert counts.partition == (4, 4, 4, 4)
        assert expected_counts(SrgParams(9, 4, 1, 2)).partition == (2, 2, 2, 0)
        assert expected_counts(SrgParams(99, 14, 1, 2)).partition == (12, 12, 12, 60)

    def test_expected_counts_lambda_zero(self):
        """Verify lambda = 0 has no triangles and no anchor partition."""
        counts = expected_counts(SrgParams(10, 3, 0, 1))
        assert counts.triangles == 0
        assert counts.partition is None

    def test_expected_counts_divisibility(self):
        """Verify nk*lambda must be divisible by 6."""
        with pytest.raises(InfeasibleParamsError):
            expected_counts(SrgParams(7, 3, 1, 1))

    def test_partition_recovered_symbolically(self):
        """Verify |W| = n - 3 - 3(k-2) reduces to 4 at k = 6."""
        k = sympy.Symbol("k", positive=True)
        n = k * (k - 2) / 2 + k + 1
        w = sympy.factor(n - 3 - 3 * (k - 2))
        assert sympy.simplify(w - (k - 2) * (k - 4) / 2) == 0
        assert (k - 2).subs(k, 6) == 4 and w.subs(k, 6) == 4
        assert expected_counts(SRG19).partition == (4, 4, 4, int(w.subs(k, 6)))

    def test_anchor_triangle_count(self):
        """Verify 3(k*lambda/2) - 2 triangles meet the anchor."""
        assert anchor_triangle_count(SRG19) == 7
        assert anchor_triangle_count(SrgParams(9, 4, 1, 2)) == 4
        assert anchor_triangle_count(SrgParams(3, 2, 1, 2)) == 1
        with pytest.raises(InfeasibleParamsError):
            anchor_triangle_count(SrgParams(13, 6, 2, 3))

    def test_triangle_bookkeeping(self):
        """Verify 19 - 7 - 12 = 0 and Paley(9) leaves two triangles."""
        book = triangle_bookkeeping(SRG19)
        assert (book.total, book.through_anchor, book.w_apex, book.remaining) == (19, 7, 12, 0)
        book = triangle_bookkeeping(SrgParams(9, 4, 1, 2))
        assert (book.total, book.through_anchor, book.w_apex, book.remaining) == (6, 4, 0, 2)


def test_family_status():
    by_k = {v.params.k: v for v in enumerate_family(1, 2, 22)}
    assert family_status(by_k[4]) == "exists"
    assert family_status(by_k[6]) == "nonexistent"
    assert family_status(by_k[8]) == "excluded"
    assert family_status(by_k[14]) == "open"
    assert family_status(integrality_test(SrgParams(10, 3, 0, 1))) == "-"
