"""Finite symmetric group character theory, cross-checked three ways:
the induced-character count, the border-strip recursion, the signed
determinant of induced characters, and a brute-force coset count."""

from fractions import Fraction

import pytest

from infsym.characters import (character_table, eta_brute_force,
                               eta_character, eta_class_function,
                               frobenius_character, inner_product,
                               irreducible_class_function, mn_character,
                               normalized_cycle_char)
from infsym.partitions import Partition, partitions_of


def test_eta_small_values():
    # eta^(n) is the trivial character
    for rho in partitions_of(4):
        assert eta_character(Partition([4]), rho) == 1
    # eta^(1^n) is the regular character
    assert eta_character(Partition([1, 1, 1]), Partition([1, 1, 1])) == 6
    assert eta_character(Partition([1, 1, 1]), Partition([2, 1])) == 0
    assert eta_character(Partition([2, 1]), Partition([1, 1, 1])) == 3
    assert eta_character(Partition([2, 1]), Partition([2, 1])) == 1
    assert eta_character(Partition([2, 1]), Partition([3])) == 0


def test_eta_against_brute_force():
    for n in range(1, 6):
        for mu in partitions_of(n):
            for rho in partitions_of(n):
                assert eta_character(mu, rho) == eta_brute_force(mu, rho), \
                    (mu, rho)


def test_mn_known_table_s3():
    chi = {(3,): {(3,): 1, (2, 1): 1, (1, 1, 1): 1},
           (2, 1): {(3,): -1, (2, 1): 0, (1, 1, 1): 2},
           (1, 1, 1): {(3,): 1, (2, 1): -1, (1, 1, 1): 1}}
    for lam, row in chi.items():
        for rho, val in row.items():
            assert mn_character(Partition(lam), Partition(rho)) == val


def test_mn_equals_frobenius():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for rho in partitions_of(n):
                assert mn_character(lam, rho) == \
                    frobenius_character(lam, rho), (lam, rho)


def test_dimension_column():
    for n in range(1, 7):
        ones = Partition([1] * n)
        for lam in partitions_of(n):
            assert mn_character(lam, ones) == lam.dim_syt()


def test_orthonormality():
    for n in range(1, 6):
        table = character_table(n)
        shapes = list(table)
        for i, a in enumerate(shapes):
            for b in shapes[i:]:
                want = Fraction(1 if a == b else 0)
                assert inner_product(table[a], table[b]) == want


def test_eta_decomposition_multiplicities():
    # <eta^mu, chi^lambda> is the Kostka number; spot checks
    assert inner_product(eta_class_function(Partition([2, 1])),
                         irreducible_class_function(Partition([2, 1]))) == 1
    assert inner_product(eta_class_function(Partition([2, 1])),
                         irreducible_class_function(Partition([3]))) == 1
    assert inner_product(eta_class_function(Partition([2, 1])),
                         irreducible_class_function(
                             Partition([1, 1, 1]))) == 0


def test_branching_rule():
    for n in range(2, 6):
        for lam in partitions_of(n):
            for rho in partitions_of(n - 1):
                extended = rho.union(Partition([1]))
                lhs = mn_character(lam, extended)
                rhs = sum(mn_character(mu, rho)
                          for mu in lam.covers_down())
                assert lhs == rhs, (lam, rho)


def test_normalized_cycle_char():
    # chi^(2,1) on a 2-cycle is 0; on a 3-cycle is -1/2
    assert normalized_cycle_char(Partition([2, 1]), 2) == 0
    assert normalized_cycle_char(Partition([2, 1]), 3) == Fraction(-1, 2)
    # one-row shape: always 1
    assert normalized_cycle_char(Partition([6]), 4) == 1
    # consistency with the full recursion
    for lam in partitions_of(5):
        for k in range(2, 6):
            rho = Partition.from_unsorted([k] + [1] * (5 - k))
            assert normalized_cycle_char(lam, k) == \
                Fraction(mn_character(lam, rho), lam.dim_syt())


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        mn_character(Partition([2]), Partition([3]))
    with pytest.raises(ValueError):
        eta_character(Partition([2]), Partition([1]))
