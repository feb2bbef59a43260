"""Gauss-Manin connection of the odd genus-2 family.

Sections omega_i = x^(i-1) dx/y (i = 1..4) trivialize the first de Rham
cohomology bundle away from the discriminant.  Differentiating under the
integral sign gives d/dt_m [omega_i] = -1/2 [x^(i-1+5-m) dx/y^3], and two
reductions rewrite that class in the basis again:

  * y^3 -> y: write P = A f + B f' (Bezout against the fiber polynomial);
    then [P dx/y^3] = [(A + 2B') dx/y] modulo exact forms,
  * degree drop: d(x^m y) = (m x^(m-1) f + x^m f'/2) dx/y kills one monomial
    of degree m+4 at a time until only 1, x, x^2, x^3 remain.

The connection matrix in direction t_m acts on the row side:
nabla_m omega_i = sum_j M[i][j] omega_j.
"""

from __future__ import annotations

from functools import lru_cache

from .families import discriminant_numerator, odd_family
from .matrix import RFMatrix
from .mpoly import VarTable
from .rationals import rat
from .ratfunc import RatFunc
from .rings import cup_matrix
from .upoly import UPoly, bezout_solve

DIRECTIONS = (2, 3, 4, 5)


@lru_cache(maxsize=None)
def _monomial_reductions() -> tuple[UPoly, ...]:
    """x^j dx/y^3 -> equivalent numerator over y, for j = 0..6."""
    discriminant_numerator()  # registers the denominator factor up front
    fam = odd_family()
    f = fam.f_upoly()
    fp = f.derivative()
    ring = fam.coeff_ring
    x = UPoly.gen(ring, "x")
    targets = [x ** j for j in range(7)]
    out = []
    for a, b in bezout_solve(f, fp, targets):
        out.append(a + 2 * b.derivative())
    return tuple(out)


def reduce_odd_power(p: UPoly) -> UPoly:
    """Numerator P of P dx/y^3 -> numerator of the equivalent class over y."""
    reds = _monomial_reductions()
    if p.degree() >= len(reds):
        raise ValueError("reduction table only covers degree <= 6")
    fam = odd_family()
    out = UPoly.zero(fam.coeff_ring, "x")
    for j, c in enumerate(p.coeffs):
        if not c.is_zero():
            out = out + c * reds[j]
    return out


def reduce_to_basis(p: UPoly) -> list[RatFunc]:
    """Coordinates of [P dx/y] in the basis x^j dx/y, j = 0..3."""
    fam = odd_family()
    f = fam.f_upoly()
    fp = f.derivative()
    ring = fam.coeff_ring
    x = UPoly.gen(ring, "x")
    while p.degree() >= 4:
        m = p.degree() - 4
        # d(x^m y) produces (m x^(m-1) f + x^m f'/2) dx/y, an exact class
        rel = m * (x ** (m - 1) * f) + rat(1, 2) * (x ** m * fp)
        scale = p.lc() / rel.lc()
        p = p - scale * rel
        if p.degree() == m + 4:
            raise AssertionError("degree reduction failed to progress")
    return [p.coeff(j) for j in range(4)]


@lru_cache(maxsize=None)
def connection_matrix(m: int) -> RFMatrix:
    """4x4 matrix of nabla_(t_m) in the row-action convention."""
    if m not in DIRECTIONS:
        raise ValueError("direction index must be 2..5")
    fam = odd_family()
    ring = fam.coeff_ring
    x = UPoly.gen(ring, "x")
    rows = []
    for i in range(1, 5):
        target = x ** (i - 1 + 5 - m) * rat(-1, 2)
        rows.append(reduce_to_basis(reduce_odd_power(target)))
    return RFMatrix(ring, rows)


@lru_cache(maxsize=None)
def connection_inverse(m: int) -> RFMatrix:
    return connection_matrix(m).inverse()


def curvature(m: int, n: int) -> RFMatrix:
    """d_m B_n - d_n B_m + B_n B_m - B_m B_n; zero iff the connection is flat."""
    bm = connection_matrix(m)
    bn = connection_matrix(n)
    return (bn.derivative(f"t{m}") - bm.derivative(f"t{n}")
            + bn @ bm - bm @ bn)


def cup_derivative_residual(m: int) -> RFMatrix:
    """d Omega/dt_m - (B_m Omega + Omega B_m^tr) for the cup matrix Omega."""
    ring = odd_family().coeff_ring
    omega = cup_matrix(ring)
    bm = connection_matrix(m)
    return omega.derivative(f"t{m}") - (bm @ omega + omega @ bm.transpose())


def pole_order_is_one(m: int) -> bool:
    """Entries of B_m lie in (1/Delta) Q[t]."""
    disc = discriminant_numerator()
    for _, _, v in connection_matrix(m).entries():
        den = v.den
        if den.is_constant():
            continue
        if disc.try_div(den) is None:
            return False
    return True


def basis_conjugation(ring: VarTable) -> RFMatrix:
    """Change of basis between the internal ordering and the published one.

    Both use x^(i-1) dx/y ascending in i, so this is the identity; it is kept
    explicit so the comparison pipeline states its convention in code.
    """
    return RFMatrix.identity(ring, 4)
