"""Spectral measures, moments, the H-series calculus, total
positivity, the peel-off, and the integrality falsifier."""

import random
from fractions import Fraction as F

import pytest

from infsym.characters import irreducible_class_function
from infsym.partitions import Partition, Permutation, partitions_of
from infsym.series import PowerSeries
from infsym.thoma import (AtomIndicator, Poly, ThomaMeasure, ThomaParams,
                          alt_falsifier, c_from_h, coherence_check,
                          edrei_peel, generalized_moment, h_from_moments,
                          h_from_params, is_totally_positive, m_lambda,
                          multiplicativity_check, sign_transform,
                          stirling_identity_brute, thoma_char_value)


def test_params_normalization():
    p = ThomaParams([F(1, 2)], [F(1, 4)])
    assert p.gamma == F(1, 4)
    with pytest.raises(ValueError):
        ThomaParams([F(1, 2)], [], F(1, 4))
    with pytest.raises(ValueError):
        ThomaParams([F(2, 3), F(2, 3)])


def test_cycle_values():
    p = ThomaParams([F(1, 2), F(1, 2)])
    assert p.cycle_value(2) == F(1, 2)
    assert p.cycle_value(3) == F(1, 4)
    q = ThomaParams([], [F(1)])  # the sign character
    assert q.cycle_value(2) == -1
    assert q.cycle_value(3) == 1
    assert thoma_char_value(q, Partition([3, 2])) == -1


def test_params_measure_round_trip():
    p = ThomaParams([F(1, 2), F(1, 4)], [F(1, 8)])
    mu = p.to_measure()
    assert mu.moment(1) == 1
    assert mu.to_params() == p
    # repeated parameters pile up at one atom
    p2 = ThomaParams([F(1, 3), F(1, 3)])
    mu2 = p2.to_measure()
    assert mu2.atoms[F(1, 3)] == F(2, 3)
    assert mu2.nu(F(1, 3)) == 2
    assert mu2.to_params() == p2


def test_moments_match_cycle_values():
    p = ThomaParams([F(1, 2)], [F(1, 3)])
    mu = p.to_measure()
    for k in range(2, 8):
        assert mu.moment(k) == p.cycle_value(k)


def test_measure_validation():
    with pytest.raises(ValueError):
        ThomaMeasure({F(1, 2): F(1, 4)})  # total mass != 1
    with pytest.raises(ValueError):
        ThomaMeasure({F(3, 2): F(1)})  # atom outside [-1,1]
    mu = ThomaMeasure({F(1, 5): F(3, 10)}, F(7, 10))
    assert not mu.is_thoma()
    assert mu.integrality_violations() == [F(1, 5)]


def test_measure_json_round_trip():
    mu = ThomaMeasure({F(1, 2): F(1, 2), F(-1, 4): F(1, 4)}, F(1, 4))
    assert ThomaMeasure.from_json(mu.to_json()) == mu


def test_generalized_moment_plain():
    # with no test functions this is the product of c_k over cycles
    p = ThomaParams([F(1, 2)], [F(1, 3)])
    mu = p.to_measure()
    sigma = Permutation.from_cycles((1, 2, 3), (4, 5))
    assert generalized_moment(mu, sigma) == \
        p.cycle_value(3) * p.cycle_value(2)


def test_generalized_moment_functions():
    mu = ThomaMeasure({F(1, 2): F(1, 2)}, F(1, 2))
    # indicator picks out the atom; the singleton orbit sees zero mass
    val = generalized_moment(mu, Permutation.identity(),
                             {1: AtomIndicator(F(1, 2))})
    assert val == F(1, 2)
    val2 = generalized_moment(mu, Permutation.identity(), {1: Poly([0, 1])})
    assert val2 == F(1, 4)  # integral of t


def test_h_series_closed_forms():
    assert h_from_params(ThomaParams([F(1)]), 5) == \
        PowerSeries.geometric(1, 5)
    assert h_from_params(ThomaParams(gamma=1), 5) == \
        PowerSeries.exp_linear(1, 5)
    assert h_from_params(ThomaParams([], [F(1)]), 5) == \
        PowerSeries.linear(1, 5)


def test_newton_round_trip():
    p = ThomaParams([F(2, 5)], [F(1, 5), F(1, 5)])
    h = h_from_params(p, 15)
    c = c_from_h(h)
    assert c[0] == 1
    assert h_from_moments(c, 15) == h
    mu = p.to_measure()
    assert c[:10] == mu.moment_sequence(10)


def test_sign_transform_swaps_alpha_beta():
    p = ThomaParams([F(1, 2)], [F(1, 3)], F(1, 6))
    swapped = ThomaParams([F(1, 3)], [F(1, 2)], F(1, 6))
    assert sign_transform(h_from_params(p, 12)) == \
        h_from_params(swapped, 12)


def test_m_lambda_basic():
    p = ThomaParams([F(1)])  # trivial character: m(lambda) = [lambda=(n)]
    mseq = list(h_from_params(p, 10).coeffs)
    assert m_lambda(mseq, Partition([3])) == 1
    assert m_lambda(mseq, Partition([2, 1])) == 0
    assert m_lambda(mseq, Partition([])) == 1


def test_m_lambda_equals_character_pairing():
    p = ThomaParams([F(1, 2)], [F(1, 4)])
    mseq = list(h_from_params(p, 10).coeffs)
    for n in range(1, 5):
        for lam in partitions_of(n):
            chi = irreducible_class_function(lam)
            pairing = sum(
                thoma_char_value(
                    p, Partition(tuple(k for k in rho.parts if k > 1)))
                * chi(rho) / rho.z()
                for rho in partitions_of(n))
            assert m_lambda(mseq, lam) == pairing, lam


def test_total_positivity():
    e = list(PowerSeries.exp_linear(1, 12).coeffs)
    ok, wit = is_totally_positive(e, 8, 3)
    assert ok and wit is None
    bad = [F(1), F(1), F(0), F(1)] + [F(0)] * 8
    ok, wit = is_totally_positive(bad, 6, 3)
    assert not ok
    assert wit.value < 0


def test_coherence_check():
    p = ThomaParams([F(1, 2), F(1, 3)])
    mseq = list(h_from_params(p, 14).coeffs)
    assert coherence_check(mseq, 5)
    rng = random.Random(7)
    arbitrary = [F(1), F(1)] + [F(rng.randrange(-9, 10), rng.randrange(1, 7))
                                for _ in range(12)]
    assert coherence_check(arbitrary, 5)


def test_multiplicativity():
    p = ThomaParams([F(1, 2)], [F(1, 4)])
    assert multiplicativity_check(p, 2, 2)
    assert multiplicativity_check(p, 2, 3)

    def not_multiplicative(rho):
        return F(1, 1 + sum(k for k in rho.parts if k > 1))

    assert not multiplicativity_check(not_multiplicative, 2, 2)


def test_edrei_peel_two_geometrics():
    h = h_from_params(ThomaParams([F(3, 5), F(2, 5)]), 21)
    res = edrei_peel(list(h.coeffs), 21)
    assert res.alpha == F(3, 5)
    assert res.exact and res.converged
    assert all(x == 1 for x in res.peeled)
    assert all(x == 0 for x in res.residual)


def test_edrei_peel_pure_geometric():
    h = PowerSeries.geometric(1, 12)
    res = edrei_peel(list(h.coeffs), 12)
    assert res.alpha == 1 and res.converged
    assert res.peeled is None


def test_edrei_peel_factorial_tail():
    h = PowerSeries.exp_linear(1, 20)
    res = edrei_peel(list(h.coeffs), 20)
    assert not res.converged
    assert isinstance(res.alpha, float)
    assert res.alpha < F(1, 10)  # ratios head to zero


def test_falsifier_pinned_value():
    closed, brute = alt_falsifier(F(1, 5), F(3, 2), 3)
    assert closed == brute == F(-1, 2000)


def test_falsifier_integer_nu_nonnegative():
    # with integral nu the falling product can't go negative
    for m in range(1, 5):
        closed, brute = alt_falsifier(F(1, 4), 3, m)
        assert closed == brute
        assert closed >= 0


def test_stirling_identity():
    for m in (2, 3, 4):
        for x in (F(1, 5), F(-1, 2), F(2)):
            total, rising = stirling_identity_brute(x, m)
            assert total == rising, (x, m)
