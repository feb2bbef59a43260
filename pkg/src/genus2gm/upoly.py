"""Dense univariate polynomials over a rational-function coefficient field.

The coefficient field is RatFunc over some variable table; the univariate
indeterminate is just a label and never lives in that table.  This is the
workhorse for Euclidean algebra in x over Q(t2,...,t5): extended gcd, Bezout
decompositions against a squarefree polynomial and its derivative, and
Sylvester resultants (computed fraction-free when the coefficients are
polynomials, which is the only case the callers need).
"""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar, Union

from .mpoly import MPoly, VarTable
from .ratfunc import RatFunc, RFLike

T = TypeVar("T")


class UPoly:
    __slots__ = ("ring", "var", "coeffs")

    def __init__(self, ring: VarTable, var: str, coeffs: Sequence[RatFunc]):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring = ring
        self.var = var
        self.coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: VarTable, var: str) -> "UPoly":
        return cls(ring, var, ())

    @classmethod
    def const(cls, ring: VarTable, var: str, value: RFLike) -> "UPoly":
        return cls(ring, var, (_rf(ring, value),))

    @classmethod
    def gen(cls, ring: VarTable, var: str) -> "UPoly":
        return cls(ring, var, (RatFunc.const(ring, 0), RatFunc.const(ring, 1)))

    @classmethod
    def from_coeffs(cls, ring: VarTable, var: str,
                    ascending: Sequence[RFLike]) -> "UPoly":
        return cls(ring, var, [_rf(ring, c) for c in ascending])

    @classmethod
    def from_mpoly(cls, poly: MPoly, var: str, coeff_ring: VarTable) -> "UPoly":
        """Split a multivariate polynomial along var; the rest must embed in
        coeff_ring."""
        buckets = poly.coeffs_in(var)
        if not buckets:
            return cls.zero(coeff_ring, var)
        top = max(buckets)
        coeffs = [RatFunc.const(coeff_ring, 0)] * (top + 1)
        for e, c in buckets.items():
            coeffs[e] = RatFunc.from_poly(c.map_ring(coeff_ring))
        return cls(coeff_ring, var, coeffs)

    # -- queries -----------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> RatFunc:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> RatFunc:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RatFunc.const(self.ring, 0)

    def is_polynomial_coeffs(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return (self.var == other.var and self.ring == other.ring
                and self.coeffs == other.coeffs)

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "UPoly") -> None:
        if self.var != other.var or self.ring != other.ring:
            raise ValueError("mixed univariate rings")

    def __add__(self, other: "UPoly") -> "UPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(self.ring, self.var, out)

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __neg__(self) -> "UPoly":
        return UPoly(self.ring, self.var, [-c for c in self.coeffs])

    def __mul__(self, other: Union["UPoly", RFLike]) -> "UPoly":
        if not isinstance(other, UPoly):
            s = _rf(self.ring, other)
            return UPoly(self.ring, self.var, [c * s for c in self.coeffs])
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UPoly.zero(self.ring, self.var)
        zero = RatFunc.const(self.ring, 0)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return UPoly(self.ring, self.var, out)

    def __rmul__(self, other: RFLike) -> "UPoly":
        return self * other

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UPoly.const(self.ring, self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def divmod_poly(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        zero = RatFunc.const(self.ring, 0)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly.zero(self.ring, self.var), self
        quo = [zero] * (dq + 1)
        inv_lc = RatFunc.const(self.ring, 1) / other.lc()
        for k in range(dq, -1, -1):
            top = rem[k + other.degree()]
            if top.is_zero():
                continue
            q = top * inv_lc
            quo[k] = q
            for j, c in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * c
        return (UPoly(self.ring, self.var, quo),
                UPoly(self.ring, self.var, rem[:other.degree()]))

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod_poly(other)[1]

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod_poly(other)[0]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod_poly(other)
        if not r.is_zero():
            raise ValueError("inexact univariate division")
        return q

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self * (RatFunc.const(self.ring, 1) / self.lc())

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "UPoly":
        return UPoly(self.ring, self.var,
                     [c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, value: RFLike) -> RatFunc:
        v = _rf(self.ring, value)
        out = RatFunc.const(self.ring, 0)
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def eval_with(self, value: T, lift: Callable[[RatFunc], T]) -> T:
        """Horner evaluation in any ring: lift maps coefficients into it."""
        out = lift(RatFunc.const(self.ring, 0))
        for c in reversed(self.coeffs):
            out = out * value + lift(c)
        return out

    def to_mpoly(self, big_ring: VarTable) -> MPoly:
        """Reassemble into a polynomial ring containing var."""
        x = MPoly.var(big_ring, self.var)
        out = MPoly.zero(big_ring)
        for c in reversed(self.coeffs):
            out = out * x + c.as_poly().map_ring(big_ring)
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*{self.var}")
            else:
                parts.append(f"({c})*{self.var}^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UPoly({self})"


def _rf(ring: VarTable, value: RFLike) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, MPoly):
        return RatFunc.from_poly(value)
    return RatFunc.const(ring, value)


def gcd_monic(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd by the Euclidean algorithm over the coefficient field."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """(g, u, v) with u*a + v*b = g and g monic (or zero)."""
    ring, var = a.ring, a.var
    one = UPoly.const(ring, var, 1)
    zero = UPoly.zero(ring, var)
    r0, r1 = a, b
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero():
        q, r = r0.divmod_poly(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    scale = RatFunc.const(ring, 1) / r0.lc()
    return r0 * scale, u0 * scale, v0 * scale


def bezout_solve(f: UPoly, g: UPoly,
                 targets: Sequence[UPoly]) -> list[tuple[UPoly, UPoly]]:
    """For each target P solve A*f + B*g = P with deg A < deg g, deg B < deg f.

    All targets share one fraction-free solve of the Sylvester system, so the
    per-target cost is a polynomial matrix-vector product.  Requires f, g
    coprime with polynomial coefficients and deg P < deg f + deg g.
    """
    if not (f.is_polynomial_coeffs() and g.is_polynomial_coeffs()):
        raise ValueError("bezout_solve needs polynomial coefficients")
    ring = f.ring
    m, n = f.degree(), g.degree()
    size = m + n
    zero = MPoly.zero(ring)
    fc = [c.as_poly() for c in f.coeffs]
    gc = [c.as_poly() for c in g.coeffs]
    rows = []
    for e in range(size):
        row = [zero] * size
        for i in range(n):
            if 0 <= e - i <= m:
                row[i] = fc[e - i]
        for i in range(m):
            if 0 <= e - i <= n:
                row[n + i] = gc[e - i]
        rows.append(row)
    rhs = []
    for e in range(size):
        rhs_row = []
        for p in targets:
            if p.degree() >= size:
                raise ValueError("target degree too large for Bezout solve")
            c = p.coeff(e)
            if not c.is_polynomial():
                raise ValueError("bezout_solve needs polynomial targets")
            rhs_row.append(c.as_poly())
        rhs.append(rhs_row)
    sols = solve_fraction_free(rows, rhs)
    out = []
    for t in range(len(targets)):
        a = UPoly(ring, f.var, [sols[i][t] for i in range(n)])
        b = UPoly(ring, f.var, [sols[n + i][t] for i in range(m)])
        out.append((a, b))
    return out


def bezout_decompose(target: UPoly, f: UPoly, g: UPoly) -> tuple[UPoly, UPoly]:
    """(A, B) with A*f + B*g = target; needs gcd(f, g) = 1."""
    return bezout_solve(f, g, [target])[0]


def resultant(a: UPoly, b: UPoly) -> MPoly:
    """Sylvester resultant; requires polynomial coefficients."""
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if not (a.is_polynomial_coeffs() and b.is_polynomial_coeffs()):
        raise ValueError("resultant needs polynomial coefficients")
    ring = a.ring
    m, n = a.degree(), b.degree()
    size = m + n
    if size == 0:
        return MPoly.const(ring, 1)
    ac = [c.as_poly() for c in a.coeffs]
    bc = [c.as_poly() for c in b.coeffs]
    zero = MPoly.zero(ring)
    rows: list[list[MPoly]] = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(ac)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(bc)):
            row[i + j] = c
        rows.append(row)
    return det_bareiss(rows)


def solve_fraction_free(rows: list[list[MPoly]],
                        rhs: list[list[MPoly]]) -> list[list["RatFunc"]]:
    """Solve M Z = R by fraction-free Gauss-Jordan elimination.

    All intermediate entries stay polynomial (the one-step divisions are
    exact; exact_div raises if that ever failed), so the coefficient blow-up
    of field elimination never happens.  Returns the n x r solution matrix.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if len(rhs) != n:
        raise ValueError("right-hand side height mismatch")
    ring = rows[0][0].ring
    width = n + len(rhs[0])
    m = [list(rows[i]) + list(rhs[i]) for i in range(n)]
    prev = MPoly.const(ring, 1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
        pk = m[k][k]
        for i in range(n):
            if i == k:
                continue
            mik = m[i][k]
            # columns < k are zero in rows i and k except the diagonal (i, i),
            # which must keep pace with the global scaling
            cols = list(range(k + 1, width))
            if i < k:
                cols.append(i)
            if mik.is_zero():
                for j in cols:
                    if not m[i][j].is_zero():
                        m[i][j] = (pk * m[i][j]).exact_div(prev)
            else:
                for j in cols:
                    m[i][j] = (pk * m[i][j] - mik * m[k][j]).exact_div(prev)
                m[i][k] = MPoly.zero(ring)
        prev = pk
    return [[RatFunc(m[i][n + j], m[i][i])
             for j in range(width - n)] for i in range(n)]


def det_bareiss(rows: list[list[MPoly]]) -> MPoly:
    """Fraction-free determinant of a square polynomial matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    m = [list(r) for r in rows]
    sign = 1
    prev = MPoly.const(ring, 1)
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if pivot is None:
            return MPoly.zero(ring)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = MPoly.zero(ring)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
