import random
from fractions import Fraction

import pytest
from math import comb

from simplestfields.family import (
    alternating_binomial_sum,
    check_companion_at_cube_root,
    check_quadratic_remainder_scaling,
    check_recursions,
    check_transform_identity,
    companion_coeff,
    companion_poly,
    disc_quadratic,
    family_coeff,
    family_poly,
    family_poly_at,
    quadratic_remainder,
    specialize,
)
from simplestfields.poly import Poly, resultant


def test_coefficient_tables():
    assert family_coeff(1) == Poly([0, -1])  # -m
    assert family_coeff(7) == Poly([0, -1])  # 6-periodic
    assert companion_coeff(4) == 1
    assert companion_coeff(0) == 0
    assert family_coeff(0) == 1 and family_coeff(3) == -1


def test_family_displays():
    assert list(family_poly(3).coeffs) == [Poly([-1]), Poly([-3, -3]), Poly([0, -3]), Poly([1])]
    assert companion_poly(1) == Poly([-1])
    assert companion_poly(2) == Poly([-1, -2])
    assert companion_poly(3) == Poly([0, -3, -3])
    assert family_poly(0) == Poly([Poly([1])])
    assert companion_poly(0) == Poly()


def test_coefficient_closed_form():
    for n in range(26):
        f = family_poly(n)
        r = companion_poly(n)
        for i in range(n + 1):
            assert f[i] == comb(n, i) * family_coeff(n - i)
            assert r[i] == comb(n, i) * companion_coeff(n - i)


def test_specialize_examples():
    for t in (-5, 0, 1, 7):
        sp = specialize(3, t)
        assert sp.poly == Poly([-1, -(t + 3), -t, 1])
        assert sp.m_rule == "t/3"
    assert specialize(2, 1).poly == Poly([-2, -2, 1])
    assert specialize(4, 0).poly == Poly([0, -4, -6, 0, 1])
    with pytest.raises(ValueError):
        specialize(1, 1)


def test_specialize_always_integral():
    for n in range(2, 13):
        for t in range(-100, 101):
            sp = specialize(n, t)
            assert all(isinstance(c, int) for c in sp.poly.coeffs)


def test_disc_quadratic():
    assert disc_quadratic(4, 2) == 7
    assert disc_quadratic(6, 5) == 49
    assert disc_quadratic(3, 0) == 9


def test_recursions_and_reflection():
    report = check_recursions(25)
    assert report.ok, report.first_failure


def test_recursion_path_rebuilds_definition_path():
    # build both sequences from the seeds (1, 0) through the recursions and
    # compare against the closed-form binomial construction at every step
    x = Poly([Poly(), Poly.const(1)])
    m = Poly.const(Poly([0, 1]))
    msq = Poly.const(Poly([1, 1, 1]))
    f_cur = Poly([Poly([1])])
    r_cur = Poly()
    for n in range(26):
        assert f_cur == family_poly(n), n
        assert r_cur == Poly([Poly.const(c) for c in companion_poly(n).coeffs]), n
        f_cur, r_cur = (x - m) * f_cur + msq * r_cur, (x + m + 1) * r_cur - f_cur


def test_recursion_base_case():
    # degree-2 member from the recursion seeds by hand
    f1 = family_poly_at(1, Fraction(3))
    r1 = companion_poly(1)
    msq = Fraction(13)  # 9 + 3 + 1
    x = Poly([0, 1])
    f2 = (x - 3) * f1 + msq * r1
    assert f2 == family_poly_at(2, 3)


def test_transform_identity_grid():
    for n in (1, 3, 5):
        m_samples = [Fraction(k, 3) for k in range(-(n + 2), n + 3)]
        a_samples = [Fraction(k, 2) for k in range(1, n + 2)]
        rep = check_transform_identity(n, m_samples, a_samples)
        assert rep.ok, rep.first_failure


def test_transform_identity_n1_hand_case():
    # degree 1: (X + a + 1)(sigma(X) - m) = (a - m)(X - m) - (m^2 + m + 1)
    rep = check_transform_identity(1, [Fraction(2)], [Fraction(5)])
    assert rep.ok


def test_alternating_binomial_sum():
    assert alternating_binomial_sum(1, 1, 0, 0) == 1
    assert alternating_binomial_sum(13, 1, 0, 0) == 729
    assert alternating_binomial_sum(0, 7, 3, 2) == 7
    rng = random.Random(2)
    for _ in range(20):
        a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        n = rng.randint(1, 15)  # the scaling law starts at n = 1
        assert alternating_binomial_sum(n + 12, a, b, c) == 729 * alternating_binomial_sum(n, a, b, c)


def test_alternating_binomial_scaling_fails_at_zero():
    # boundary behavior: the 6-periodic alternating sum does not satisfy the
    # 3^6 law at n = 0 (1 -> 486, not 729); downstream uses all have n >= 1
    assert alternating_binomial_sum(12, 1, 0, 0) == 486
    assert alternating_binomial_sum(0, 1, 0, 0) == 1


def test_companion_at_cube_root():
    assert check_companion_at_cube_root(30).ok


def test_quadratic_remainder():
    assert quadratic_remainder(1) == Poly([-1])
    assert quadratic_remainder(13) == Poly([-729])
    assert quadratic_remainder(2) == Poly([-1, -2])
    assert quadratic_remainder(14) == 729 * Poly([-1, -2])
    assert quadratic_remainder(3) == Poly([3])
    assert all(check_quadratic_remainder_scaling(n) for n in range(1, 16))


def test_family_companion_coprime():
    # nonzero constant resultant means no common root over Q(m)
    for n in range(2, 13):
        m = Fraction(3, 7)
        assert resultant(companion_poly(n), family_poly_at(n, m)) != 0
