"""Construction and structural checks of the generalized simplest polynomial family.

The degree-n family polynomial and its companion are binomial-weighted sums
over two 6-periodic coefficient tables; the symbolic versions carry
polynomials in the parameter m as coefficients.  The check_* functions
verify the recursion, derivative, reflection, transformation and evaluation
identities exactly (no floating point anywhere).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cyclo import CycloRing, embed_root, sqrt_minus_three
from .poly import Poly

# 6-periodic coefficient tables; entries of the first are polynomials in m.
_FAMILY_TABLE = (
    Poly([1]),  # i = 0 mod 6
    Poly([0, -1]),  # -m
    Poly([-1, -1]),  # -m - 1
    Poly([-1]),
    Poly([0, 1]),  # m
    Poly([1, 1]),  # m + 1
)
_COMPANION_TABLE = (0, -1, -1, 0, 1, 1)


def family_coeff(i: int) -> Poly:
    """Coefficient table value for the family polynomial (a polynomial in m)."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    return _FAMILY_TABLE[i % 6]


def companion_coeff(i: int) -> int:
    """Coefficient table value for the companion polynomial."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    return _COMPANION_TABLE[i % 6]


def family_poly(n: int) -> Poly:
    """Degree-n family polynomial, coefficients = polynomials in the parameter m."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return Poly([comb(n, i) * family_coeff(n - i) for i in range(n + 1)])


def companion_poly(n: int) -> Poly:
    """Degree-(n-1) companion polynomial with integer coefficients."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return Poly([comb(n, i) * companion_coeff(n - i) for i in range(n + 1)])


def family_poly_at(n: int, m) -> Poly:
    """Family polynomial with the parameter specialized to a rational number."""
    mval = Fraction(m)
    return Poly([c(mval) for c in family_poly(n).coeffs])


def parameter_value(n: int, t: int) -> Fraction:
    """The parameter substitution rule: m = t, or t/3 when 3 divides n."""
    return Fraction(t, 3) if n % 3 == 0 else Fraction(t)


def disc_quadratic(n: int, t: int) -> int:
    """The quadratic in t carried by the discriminant: t^2+t+1, or t^2+3t+9 when 3 | n."""
    return t * t + 3 * t + 9 if n % 3 == 0 else t * t + t + 1


@dataclass(frozen=True)
class SpecializedPoly:
    """Integer-coefficient member of the family at an integer parameter."""

    n: int
    t: int
    poly: Poly
    m_rule: str  # "t" or "t/3"


def specialize(n: int, t: int) -> SpecializedPoly:
    """Member of the family at integer parameter t (integer coefficients, checked)."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    p = family_poly_at(n, parameter_value(n, t))
    coeffs = []
    for c in p.coeffs:
        f = Fraction(c)
        if f.denominator != 1:
            raise AssertionError(f"non-integer coefficient {f} at n={n}, t={t}")
        coeffs.append(f.numerator)
    rule = "t/3" if n % 3 == 0 else "t"
    return SpecializedPoly(n, t, Poly(coeffs), rule)


def discriminant_formula(n: int, m) -> Fraction:
    """Closed form of the family discriminant at a rational parameter."""
    mval = Fraction(m)
    return 3 ** ((n - 1) * (n - 2) // 2) * n**n * (mval * mval + mval + 1) ** (n - 1)


def discriminant_formula_t(n: int, t: int) -> int:
    """Closed form of the specialized discriminant at an integer parameter."""
    if n % 3 == 0:
        # the 3-exponent (n-1)(n-6)/2 is negative for n = 3 and cancels into n^n
        e = (n - 1) * (n - 6) // 2
        value = Fraction(3) ** e * n**n * (t * t + 3 * t + 9) ** (n - 1)
        assert value.denominator == 1
        return value.numerator
    return 3 ** ((n - 1) * (n - 2) // 2) * n**n * (t * t + t + 1) ** (n - 1)


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    checks: int
    first_failure: str | None = None


def check_recursions(n_max: int) -> CheckReport:
    """Verify the two recursions, the derivative rule and the reflection identity
    as exact polynomial identities in both X and m, for every n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    x = Poly([Poly(), Poly.const(1)])  # X over the ring of m-polynomials
    m = Poly.const(Poly([0, 1]))
    msq = Poly.const(Poly([1, 1, 1]))  # m^2 + m + 1
    checks = 0
    f_cur, r_cur = family_poly(0), companion_poly(0)
    for n in range(n_max + 1):
        f_next, r_next = family_poly(n + 1), companion_poly(n + 1)
        r_embedded = Poly([Poly.const(c) for c in r_cur.coeffs])
        r_next_embedded = Poly([Poly.const(c) for c in r_next.coeffs])
        if (x - m) * f_cur + msq * r_embedded != f_next:
            return CheckReport(False, checks, f"family recursion fails at n={n}")
        checks += 1
        if (x + m + 1) * r_embedded - f_cur != r_next_embedded:
            return CheckReport(False, checks, f"companion recursion fails at n={n}")
        checks += 1
        if f_next.deriv() != (n + 1) * f_cur:
            return CheckReport(False, checks, f"derivative rule fails at n={n}")
        checks += 1
        if n >= 1:
            reflected = _substitute_neg(r_cur)
            if (-1) ** (n - 1) * reflected != r_cur:
                return CheckReport(False, checks, f"reflection identity fails at n={n}")
            checks += 1
        f_cur, r_cur = f_next, r_next
    return CheckReport(True, checks)


def _substitute_neg(p: Poly) -> Poly:
    """Compose p with X -> -X - 1."""
    acc = Poly()
    lin = Poly([-1, -1])
    for coeff in reversed(p.coeffs):
        acc = acc * lin + Poly.const(coeff)
    return acc


def check_transform_identity(n: int, m_samples, alpha_samples) -> CheckReport:
    """Exact verification of the Moebius variable-transformation identity.

    Both sides are compared as polynomials in X at every (m, alpha) sample
    pair; with more than n distinct alpha values and more than 2 distinct m
    values the grid equality proves the polynomial identity, since the two
    sides have degree <= n in alpha and <= 2 in m.
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    checks = 0
    r = companion_poly(n)
    for m in m_samples:
        mval = Fraction(m)
        f = family_poly_at(n, mval)
        msq = mval * mval + mval + 1
        for a in alpha_samples:
            aval = Fraction(a)
            # lhs expanded through the binomial form, no denominators involved:
            # sum_i binom(n,i) g(n-i)(m) (alpha X - 1)^i (X + alpha + 1)^(n-i)
            lin1 = Poly([-1, aval])
            lin2 = Poly([aval + 1, 1])
            lhs = Poly()
            for i in range(n + 1):
                g = family_coeff(n - i)(mval)
                if g:
                    lhs = lhs + comb(n, i) * g * lin1**i * lin2 ** (n - i)
            rhs = f(aval) * f - msq * r(aval) * r
            if lhs != rhs:
                return CheckReport(False, checks, f"transform identity fails at n={n}, m={mval}, alpha={aval}")
            checks += 1
    return CheckReport(True, checks)


def alternating_binomial_sum(n: int, a, b, c):
    """Binomial sum against the 6-periodic alternating pattern (a, b, c, -a, -b, -c)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    pattern = (a, b, c)
    total = 0
    for i in range(n + 1):
        r = i % 6
        v = pattern[r] if r < 3 else -pattern[r - 3]
        total = total + comb(n, i) * v
    return total


def check_companion_at_cube_root(n_max: int) -> CheckReport:
    """Evaluate the companion polynomial at a primitive cube root of unity and
    compare with the closed power formula, for every n <= n_max."""
    ring = CycloRing(6)
    omega = embed_root(ring, 3)
    s = sqrt_minus_three(ring)
    checks = 0
    for n in range(1, n_max + 1):
        value = companion_poly(n)(omega)
        expected = -((-s) ** (n - 1))
        if not (value == expected):
            return CheckReport(False, checks, f"cube-root evaluation fails at n={n}")
        checks += 1
    return CheckReport(True, checks)


def quadratic_remainder(n: int) -> Poly:
    """Remainder of the companion polynomial modulo X^2 + X + 1."""
    return companion_poly(n) % Poly([1, 1, 1])


def check_quadratic_remainder_scaling(n: int) -> bool:
    """Verify remainder(n + 12) = 729 * remainder(n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return quadratic_remainder(n + 12) == 729 * quadratic_remainder(n)
