"""Orders, p-maximal saturation and integral bases.

An order is stored as a denominator D and an n x n lower-triangular HNF
matrix H: row i divided by D is the i-th basis element over the power basis
of beta.  Two independent saturation strategies are provided and serve as
each other's oracle:

  * "enumerate": sweep projective candidate vectors v over F_p and test
    (v . basis)/p for integrality via the characteristic polynomial,
    enlarging until a full sweep finds nothing;
  * "radical": kernel of the q-power (Frobenius) map gives the p-radical,
    whose multiplier ring is computed by exact linear algebra; iterate
    until stable.

The candidate prime set for the full integral basis is {3} union the primes
dividing n: under the squarefree gate every other prime divides the
polynomial discriminant at most once and is excluded by its Eisenstein
witness, so it cannot divide the index.
"""

from dataclasses import dataclass
from itertools import product as iter_product
from math import gcd, lcm

from ._kernels import solve_lower_coords, vec_reduce_mod_rows, zx_divexact, zx_mulmod
from .family import disc_quadratic
from .linalg import hnf_lattice, left_kernel_mod_p
from .numberfield import (
    NumberField,
    ParameterNotCoveredError,
    field_elt,
    field_trace_powers,
    is_algebraic_integer,
)
from .numutil import factorize, largest_square_root_divisor, p_adic_valuation, squarefree, three_free_part

STRATEGIES = ("enumerate", "radical")
GATES = ("strict", "relaxed")


@dataclass(frozen=True)
class Order:
    """Ring of rank n containing Z[beta], canonically represented."""

    field: NumberField
    den: int
    basis: tuple[tuple[int, ...], ...]  # lower-triangular HNF rows

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def det(self) -> int:
        d = 1
        for i in range(self.n):
            d *= self.basis[i][i]
        return d

    @property
    def index(self) -> int:
        """Index of Z[beta] in this order."""
        q, r = divmod(self.den ** self.n, self.det)
        if r:
            raise AssertionError("non-integral order index")
        return q

    @property
    def fingerprint(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        return (self.den, self.basis)


def make_order(field: NumberField, den: int, rows) -> Order:
    """Canonicalize a generating set over a common denominator into an Order."""
    n = field.n
    basis = hnf_lattice([list(r) for r in rows], n)
    if len(basis) != n:
        raise ValueError("generating set does not span a full lattice")
    g = den
    for row in basis:
        for x in row:
            if x:
                g = gcd(g, x)
    basis = [[x // g for x in row] for row in basis]
    den //= g
    if basis[0] != [den] + [0] * (n - 1):
        raise AssertionError("order does not contain 1 with minimal denominator")
    return Order(field, den, tuple(tuple(r) for r in basis))


def power_order(field: NumberField) -> Order:
    """Z[beta] itself."""
    n = field.n
    return Order(field, 1, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def order_discriminant(o: Order) -> int:
    """Field-side discriminant of the order: disc(f) / index^2, exact."""
    idx = o.index
    q, r = divmod(o.field.disc, idx * idx)
    if r:
        raise AssertionError("index square does not divide the polynomial discriminant")
    return q


def _order_mul(u, v, f, den):
    """Product of two order elements given as numerator vectors over den."""
    return zx_divexact(zx_mulmod(u, v, f), den)


def _order_pow(w, e: int, f, den, basis, p: int):
    """w^e as an order element numerator, reduced mod p * lattice after each step."""
    result = None
    base = list(w)
    k = e
    while k:
        if k & 1:
            result = base if result is None else _order_mul(result, base, f, den)
            result = vec_reduce_mod_rows(result, basis, p)
        k >>= 1
        if k:
            base = _order_mul(base, base, f, den)
            base = vec_reduce_mod_rows(base, basis, p)
    return result


def _frobenius_power(n: int, p: int) -> int:
    q = p
    while q < n:
        q *= p
    return q


def _radical_basis(field: NumberField, order: Order, p: int):
    """HNF basis of den * rad(p * order), or None when the radical is p * order."""
    n = field.n
    f = list(field.poly.coeffs)
    den, basis = order.den, [list(r) for r in order.basis]
    q = _frobenius_power(n, p)
    frob = []
    for i in range(n):
        w = _order_pow(basis[i], q, f, den, basis, p)
        coords = solve_lower_coords(basis, w)
        frob.append([c % p for c in coords])
    kernel = left_kernel_mod_p(frob, p)
    if not kernel:
        return None
    rows = [[sum(y[i] * basis[i][j] for i in range(n)) for j in range(n)] for y in kernel]
    rows += [[p * x for x in row] for row in basis]
    return hnf_lattice(rows, n)


def _radical_round(field: NumberField, order: Order, p: int) -> Order | None:
    """One multiplier-ring step; None when the order is already p-maximal."""
    n = field.n
    f = list(field.poly.coeffs)
    den, basis = order.den, [list(r) for r in order.basis]
    rad = _radical_basis(field, order, p)
    if rad is None:
        return None
    # y in order with y * radical <= p * radical, as a kernel mod p
    t_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            w = _order_mul(basis[i], rad[j], f, den)
            coords = solve_lower_coords(rad, w)
            row.extend(c % p for c in coords)
        t_rows.append(row)
    kernel = left_kernel_mod_p(t_rows, p)
    if not kernel:
        return None
    rows = [[sum(y[i] * basis[i][j] for i in range(n)) for j in range(n)] for y in kernel]
    rows += [[p * x for x in row] for row in basis]
    enlarged = make_order(field, p * den, rows)
    if enlarged.fingerprint == order.fingerprint:
        return None
    return enlarged


def _projective_vectors(n: int, p: int):
    """All vectors over F_p with first nonzero coordinate equal to 1."""
    for lead in range(n):
        for tail in iter_product(range(p), repeat=n - 1 - lead):
            yield (0,) * lead + (1,) + tail


def _enumerate_round(field: NumberField, order: Order, p: int, traces) -> Order | None:
    """One full sweep; returns the enlarged order at the first integral candidate."""
    n = field.n
    den, basis = order.den, order.basis
    pd = p * den
    for v in _projective_vectors(n, p):
        w = [sum(v[i] * basis[i][j] for i in range(n)) for j in range(n)]
        # trace filter: Tr(x * beta^j) must be integral for every j
        ok = True
        for j in range(n):
            s = sum(w[k] * traces[k + j] for k in range(n))
            if s % pd:
                ok = False
                break
        if not ok:
            continue
        if is_algebraic_integer(field_elt(field, w, pd)):
            rows = [w] + [[p * x for x in row] for row in basis]
            return make_order(field, pd, rows)
    return None


def p_maximal_order(field: NumberField, p: int, strategy: str = "radical") -> Order:
    """The smallest p-maximal order containing Z[beta]."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    order = power_order(field)
    if p_adic_valuation(field.disc, p) < 2:
        return order  # index^2 divides the discriminant, so p cannot divide it
    traces = field_trace_powers(field, 2 * field.n - 2) if strategy == "enumerate" else None
    while True:
        if strategy == "radical":
            nxt = _radical_round(field, order, p)
        else:
            nxt = _enumerate_round(field, order, p, traces)
        if nxt is None:
            return order
        order = nxt


def candidate_primes(n: int) -> list[int]:
    """{3} union the primes dividing n: the only primes that can divide the index
    under the squarefree gate."""
    return sorted({3} | set(factorize(n)))


def parameter_gate(n: int, t: int, gate: str = "strict") -> tuple[bool, str]:
    """Check the squarefree hypothesis on the parameter quadratic plus the
    existence of an Eisenstein witness prime.  Returns (ok, reason)."""
    if gate not in GATES:
        raise ValueError(f"unknown gate {gate!r}")
    q = disc_quadratic(n, t)
    tested = q if gate == "strict" else three_free_part(q)
    if abs(tested) > 1 and not squarefree(tested):
        fac = factorize(tested)
        p = next(p for p, e in fac.items() if e > 1)
        return False, f"not squarefree: {p}^2 divides {tested}"
    if not any(p != 3 and e == 1 for p, e in factorize(q).items()):
        return False, f"no Eisenstein witness prime: {q} has no simple prime factor other than 3"
    return True, "ok"


def integral_basis(field: NumberField, strategy: str = "radical", gate: str = "strict") -> Order:
    """Maximal order of the field, certified under the stated hypotheses.

    Raises ParameterNotCoveredError when the squarefree gate fails or no
    Eisenstein witness exists (the parameter is then outside the certified
    domain, regardless of actual irreducibility).
    """
    ok, reason = parameter_gate(field.n, field.t, gate)
    if not ok or field.witness is None:
        raise ParameterNotCoveredError(f"parameter not covered by paper hypotheses: {reason}")
    n = field.n
    orders = [p_maximal_order(field, p, strategy) for p in candidate_primes(n)]
    den = 1
    for o in orders:
        den = lcm(den, o.den)
    rows = []
    for o in orders:
        s = den // o.den
        rows += [[s * x for x in row] for row in o.basis]
    return make_order(field, den, rows)


def denominator_bound(n: int) -> int:
    """Universal denominator bound: the greatest C with C^2 dividing the
    branch value 3^e * n^n.

    C bounds the denominator of every algebraic integer over the power basis
    (the exponent of O/Z[beta]); the index itself can exceed it in 3-power
    when 3 divides the parameter quadratic, since the discriminant carries
    n-1 copies of that quadratic.
    """
    if n < 2:
        raise ValueError("degree must be at least 2")
    if n % 3 == 0:
        e = (n * n - 7 * n + 12) // 2
    else:
        e = (n * n - 3 * n + 4) // 2
    return largest_square_root_divisor(3**e * n**n)


def period_length_bound(n: int) -> int:
    """Greatest n0 whose square divides (3^(n^2/2) * n^n)^n, read through
    fourth-power divisibility so all exponents stay integral."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    out = 1
    for p in candidate_primes(n):
        # fourth-power content of (3^(n^2) * n^(2n))^n = 3^(n^3) * n^(2n^2)
        v4 = 2 * n * n * p_adic_valuation(n, p)
        if p == 3:
            v4 += n * n * n
        out *= p ** (v4 // 4)
    return out
