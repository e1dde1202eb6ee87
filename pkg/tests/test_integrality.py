import random
from fractions import Fraction

import pytest

from simplestfields.family import disc_quadratic, specialize
from simplestfields.numberfield import (
    ParameterNotCoveredError,
    char_poly,
    eisenstein_witness,
    field_elt,
    field_trace_powers,
    is_algebraic_integer,
    is_eisenstein,
    number_field,
    shifted_min_poly,
)
from simplestfields.numutil import p_adic_valuation
from simplestfields.orders import (
    candidate_primes,
    denominator_bound,
    integral_basis,
    order_discriminant,
    p_maximal_order,
    parameter_gate,
    period_length_bound,
    power_order,
)
from simplestfields.poly import Poly

from oracles import matrix_trace_powers, quadratic_maximal_fingerprint


def test_char_poly_examples():
    f = number_field(2, 1)  # X^2 - 2X - 2
    beta = field_elt(f, [0, 1])
    assert char_poly(beta) == f.poly
    one = field_elt(f, [1, 0])
    assert char_poly(one) == Poly([1, -2, 1])  # (Y - 1)^2
    half_beta = field_elt(f, [0, 1], 2)
    assert char_poly(half_beta) == Poly([Fraction(-1, 2), -1, 1])
    assert not is_algebraic_integer(half_beta)


def test_char_poly_degree_three():
    f = number_field(3, 1)
    e = field_elt(f, [1, 2, 1], 3)
    cp = char_poly(e)
    assert cp.degree == 3 and cp.lc == 1
    # the defining polynomial annihilates beta, so char_poly(beta) = f
    assert char_poly(field_elt(f, [0, 1, 0])) == f.poly


def test_is_algebraic_integer_examples():
    f3 = number_field(2, 3)  # X^2 - 6X - 4, disc 52, field Q(sqrt13)
    assert is_algebraic_integer(field_elt(f3, [0, 1]))
    assert is_algebraic_integer(field_elt(f3, [-2, 1], 2))  # (beta-2)/2 = (1+sqrt13)/2
    assert char_poly(field_elt(f3, [-2, 1], 2)) == Poly([-3, -1, 1])
    assert not is_algebraic_integer(field_elt(f3, [1, 1], 2))  # (1+beta)/2


def test_integral_elements_form_a_ring_on_witnesses():
    f = number_field(2, 3)
    a = field_elt(f, [-2, 1], 2)
    b = field_elt(f, [0, 1])
    # a + b and a * b as raw coordinate arithmetic
    s = field_elt(f, [a.num[0] * b.den + b.num[0] * a.den, a.num[1] * b.den + b.num[1] * a.den], a.den * b.den)
    assert is_algebraic_integer(s)
    # product: (beta-2)/2 * beta = (beta^2 - 2 beta)/2, beta^2 = 6 beta + 4
    prod = field_elt(f, [4, 4], 2)
    assert is_algebraic_integer(prod)


def test_eisenstein_witness_examples():
    assert eisenstein_witness(4, 2) == 7
    assert eisenstein_witness(6, 5) is None  # 49 = 7^2
    assert eisenstein_witness(3, 0) is None  # 9 has no non-3 prime
    assert eisenstein_witness(3, 1) == 13


def test_shifted_poly_is_eisenstein():
    for n, t in [(2, 3), (4, 2), (5, 3), (3, 1), (6, 1), (9, 2), (12, 1)]:
        p = eisenstein_witness(n, t)
        assert p is not None
        shifted = shifted_min_poly(n, t)
        assert shifted.lc == 1
        assert is_eisenstein(shifted, p)


def test_trace_powers_against_companion_matrix_oracle():
    for n, t in [(2, 1), (3, 2), (4, 7), (6, 2)]:
        f = number_field(n, t)
        got = list(field_trace_powers(f, 2 * n))
        want = matrix_trace_powers(list(f.poly.coeffs), 2 * n)
        assert got == want


def test_trace_power_examples():
    f = number_field(2, 1)
    p = field_trace_powers(f, 2)
    assert p[0] == 2 and p[1] == 2 and p[2] == 8
    # Tr(beta) = n * m for the family
    for n, t in [(4, 5), (5, -3), (6, 4), (9, 2)]:
        f = number_field(n, t)
        m = Fraction(t, 3) if n % 3 == 0 else Fraction(t)
        assert field_trace_powers(f, 1)[1] == n * m


def test_p_maximal_order_examples():
    f = number_field(3, 1)
    for strategy in ("enumerate", "radical"):
        o = p_maximal_order(f, 3, strategy)
        assert o.fingerprint == power_order(f).fingerprint
    f = number_field(2, 3)
    for strategy in ("enumerate", "radical"):
        o = p_maximal_order(f, 2, strategy)
        assert o.den == 2
        assert o.basis == ((2, 0), (0, 1))
        assert o.index == 2
    f = number_field(2, 1)
    for strategy in ("enumerate", "radical"):
        assert p_maximal_order(f, 2, strategy).index == 1
    with pytest.raises(ValueError):
        p_maximal_order(f, 2, "guess")


def test_integral_basis_small_fields():
    o = integral_basis(number_field(3, 1))
    assert o.den == 1 and o.index == 1
    o = integral_basis(number_field(2, 3))
    assert (o.den, o.basis) == (2, ((2, 0), (0, 1)))
    assert order_discriminant(o) == 13
    o = integral_basis(number_field(4, 7))  # 57 = 3 * 19
    assert denominator_bound(4) % o.index == 0
    assert p_adic_valuation(o.index, 19) == 0 if o.index > 1 else True


def test_integral_basis_matches_quadratic_oracle():
    for t in range(-40, 41):
        ok, _ = parameter_gate(2, t)
        if not ok:
            continue
        o = integral_basis(number_field(2, t))
        assert o.fingerprint == quadratic_maximal_fingerprint(t), t


def test_integral_basis_gate():
    with pytest.raises(ParameterNotCoveredError, match="not covered"):
        integral_basis(number_field(6, 5))
    with pytest.raises(ParameterNotCoveredError):
        integral_basis(number_field(2, 1))  # quadratic value 3: no witness prime


def test_order_discriminant_examples():
    f = number_field(2, 1)
    assert order_discriminant(power_order(f)) == 12
    assert power_order(f).index == 1
    f9 = number_field(9, 1)
    o = integral_basis(f9)
    assert order_discriminant(o) * o.index**2 == f9.disc


def test_field_elt_normalization():
    f = number_field(2, 1)
    e = field_elt(f, [2, 4], 6)
    assert e.num == (1, 2) and e.den == 3
    e = field_elt(f, [3, -3], -3)
    assert e.num == (-1, 1) and e.den == 1
    with pytest.raises(ValueError):
        field_elt(f, [1, 0], 0)
    with pytest.raises(ValueError):
        field_elt(f, [1, 0, 0])


def test_candidate_primes():
    assert candidate_primes(2) == [2, 3]
    assert candidate_primes(3) == [3]
    assert candidate_primes(6) == [2, 3]
    assert candidate_primes(10) == [2, 3, 5]
    assert candidate_primes(12) == [2, 3]


def test_denominator_bound_examples():
    assert denominator_bound(2) == 2
    assert denominator_bound(3) == 3
    assert denominator_bound(4) == 144


def test_period_length_bound_examples():
    assert period_length_bound(2) == 36
    assert period_length_bound(4) == 3**16 * 2**16


def test_outside_primes_never_enlarge():
    """Justification of the candidate prime set: a prime dividing the parameter
    quadratic exactly once (and different from 3 and the primes of n) never
    divides the index, so saturating at it returns the power order."""
    for n, t in [(2, 4), (3, 1), (4, 7), (5, 2), (6, 2), (8, 4)]:
        field = number_field(n, t)
        q = disc_quadratic(n, t)
        from simplestfields.numutil import factorize

        for p, e in factorize(q).items():
            if p in candidate_primes(n):
                continue
            assert e == 1
            strategies = ["radical"]
            if p**n <= 5000:  # keep the projective sweep small
                strategies.append("enumerate")
            for strategy in strategies:
                o = p_maximal_order(field, p, strategy)
                assert o.index == 1, (n, t, p, strategy)


def test_integrality_closed_under_ring_ops():
    """On sampled certified integers: sums and products stay integral."""
    rng = random.Random(77)
    for n, t in [(3, 2), (4, 7), (6, 1)]:
        field = number_field(n, t)
        o = integral_basis(field)
        rows = [list(r) for r in o.basis]
        from simplestfields._kernels import zx_mulmod, zx_divexact

        for _ in range(12):
            a = rows[rng.randrange(n)]
            b = rows[rng.randrange(n)]
            s = field_elt(field, [x + y for x, y in zip(a, b)], o.den)
            assert is_algebraic_integer(s)
            prod_num = zx_divexact(zx_mulmod(a, b, list(field.poly.coeffs)), 1)
            prod = field_elt(field, prod_num, o.den * o.den)
            assert is_algebraic_integer(prod)


def test_denominator_corollary_exponent_form():
    """The true content of the universal-denominator statement: C_n times any
    algebraic integer lies in Z[beta], i.e. the order denominator (the
    exponent of O/Z[beta]) divides C_n."""
    for n, t_bound in [(2, 20), (3, 20), (4, 20), (5, 20), (6, 15), (8, 8)]:
        for t in range(-t_bound, t_bound + 1):
            ok, _ = parameter_gate(n, t)
            if not ok:
                continue
            o = integral_basis(number_field(n, t))
            assert denominator_bound(n) % o.den == 0, (n, t, o.den)


def test_index_exceeds_naive_branch_bound_counterexample():
    """Pinned counterexample: the index itself (unlike the denominator) can
    escape the 3-part of the branch bound when 3 divides the parameter
    quadratic, because the discriminant carries (n-1) copies of its
    3-content.  Certified by both strategies and the multiplication-matrix
    characteristic polynomial route."""
    f = number_field(5, -29)
    assert disc_quadratic(5, -29) == 813  # = 3 * 271, squarefree
    for strategy in ("enumerate", "radical"):
        o = integral_basis(f, strategy=strategy)
        assert o.index == 81 and o.den == 9
        for row in o.basis:
            assert is_algebraic_integer(field_elt(f, list(row), o.den))
    branch_bound = 3 ** ((25 - 15 + 4) // 2) * 5**5
    assert branch_bound % (81 * 81) != 0  # the naive index reading fails
    assert denominator_bound(5) % 9 == 0  # the denominator reading holds


def test_strategy_agreement_sample():
    rng = random.Random(8)
    cases = [(n, rng.randint(-20, 20)) for n in (2, 3, 4, 5, 6) for _ in range(4)]
    checked = 0
    for n, t in cases:
        ok, _ = parameter_gate(n, t)
        if not ok:
            continue
        f = number_field(n, t)
        a = integral_basis(f, strategy="enumerate")
        b = integral_basis(f, strategy="radical")
        assert a.fingerprint == b.fingerprint, (n, t)
        checked += 1
    assert checked >= 10
