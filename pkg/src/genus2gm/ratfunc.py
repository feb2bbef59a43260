"""Canonical-form rational functions (quotients of MPoly).

Invariants of every constructed value:

  * gcd(num, den) is a unit,
  * den is integer-primitive (content 1) with positive graded-lex leading
    coefficient.

The representative is therefore unique and equality is structural.  The
reduction first strips shared monomials and any irreducible factors the
variable table has registered (a denominator that factors completely over the
registered set never reaches the general PRS gcd; that keeps the vector-field
and Resnikoff pipelines, whose denominators are monomials times powers of
det S1, far away from the expensive path).
"""

from __future__ import annotations

from typing import Mapping, Optional, Union

from .gcd import poly_gcd
from .mpoly import MPoly, Scalar, VarTable
from .rationals import ONE, Rat, is_rat, rat

RFLike = Union["RatFunc", MPoly, int, Rat]


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: Optional[MPoly] = None, *,
                 _normalized: bool = False):
        if den is None:
            den = MPoly.const(num.ring, 1)
        if num.ring != den.ring:
            raise ValueError("numerator and denominator over different tables")
        if _normalized:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = num
            self.den = MPoly.const(num.ring, 1)
            return
        num, den = _cancel(num, den)
        c = den.content()
        if den.leading_coeff() < 0:
            c = -c
        if c != 1:
            inv = ONE / c
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_poly(cls, p: MPoly) -> "RatFunc":
        return cls(p, MPoly.const(p.ring, 1), _normalized=True)

    @classmethod
    def const(cls, ring: VarTable, value: Scalar) -> "RatFunc":
        return cls.from_poly(MPoly.const(ring, value))

    @classmethod
    def var(cls, ring: VarTable, name: str) -> "RatFunc":
        return cls.from_poly(MPoly.var(ring, name))

    @classmethod
    def parse(cls, ring: VarTable, text: str) -> "RatFunc":
        from .parsing import parse_ratfunc

        return parse_ratfunc(ring, text)

    # -- queries -----------------------------------------------------------

    @property
    def ring(self) -> VarTable:
        return self.num.ring

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> MPoly:
        if not self.den.is_constant():
            raise ValueError("not a polynomial")
        return self.num / self.den.constant_value()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Rat:
        return self.num.constant_value() / self.den.constant_value()

    def weighted_degree(self) -> int:
        """Weighted degree of a weighted-homogeneous quotient."""
        if self.is_zero():
            return -1
        if not (self.num.is_weighted_homogeneous() and self.den.is_weighted_homogeneous()):
            raise ValueError("not weighted-homogeneous")
        return self.num.weighted_degree() - self.den.weighted_degree()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, MPoly) or is_rat(other):
            return self == _coerce(self.ring, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: RFLike):
        if not _coercible(other):
            return NotImplemented
        other = _coerce(self.ring, other)
        if self.den.terms == other.den.terms:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: RFLike):
        if not _coercible(other):
            return NotImplemented
        other = _coerce(self.ring, other)
        if self.den.terms == other.den.terms:
            return RatFunc(self.num - other.num, self.den)
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __rsub__(self, other: RFLike):
        if not _coercible(other):
            return NotImplemented
        return _coerce(self.ring, other) - self

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _normalized=True)

    def __mul__(self, other: RFLike):
        if not _coercible(other):
            return NotImplemented
        other = _coerce(self.ring, other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RFLike):
        if not _coercible(other):
            return NotImplemented
        other = _coerce(self.ring, other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: RFLike):
        if not _coercible(other):
            return NotImplemented
        return _coerce(self.ring, other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n == 0:
            return RatFunc.const(self.ring, 1)
        if n < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("negative power of zero")
            base = RatFunc(self.den, self.num)
            n = -n
        else:
            base = self
        return RatFunc(base.num ** n, base.den ** n)

    # -- calculus and substitution ----------------------------------------

    def derivative(self, name: str) -> "RatFunc":
        dn = self.num.derivative(name)
        if self.den.is_constant():
            return RatFunc(dn, self.den, _normalized=True)
        dd = self.den.derivative(name)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    def subs_var(self, name: str, value: Union["RatFunc", MPoly, Scalar]) -> "RatFunc":
        if isinstance(value, RatFunc):
            if value.is_polynomial():
                value = value.as_poly()
            else:
                # substitute p/q into num and den separately over a common power
                dn = self.num.degree_in(name)
                dd = self.den.degree_in(name)
                top = max(dn, dd, 0)
                num = _subs_fraction(self.num, name, value.num, value.den, top)
                den = _subs_fraction(self.den, name, value.num, value.den, top)
                return RatFunc(num, den)
        return RatFunc(self.num.subs_var(name, value),
                       self.den.subs_var(name, value))

    def eval(self, point: Mapping[str, Scalar]) -> Rat:
        den = self.den.eval(point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval(point) / den

    def map_ring(self, ring: VarTable) -> "RatFunc":
        if ring == self.ring:
            return self
        return RatFunc(self.num.map_ring(ring), self.den.map_ring(ring),
                       _normalized=True)

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        s = str(self)
        if len(s) > 120:
            s = s[:117] + "..."
        return f"RatFunc({s})"


def _coercible(value: object) -> bool:
    return isinstance(value, (RatFunc, MPoly)) or is_rat(value)


def _coerce(ring: VarTable, value: RFLike) -> RatFunc:
    if isinstance(value, RatFunc):
        if value.ring != ring:
            raise ValueError("mixed variable tables")
        return value
    if isinstance(value, MPoly):
        if value.ring != ring:
            raise ValueError("mixed variable tables")
        return RatFunc.from_poly(value)
    if is_rat(value):
        return RatFunc.const(ring, value)
    raise TypeError(f"cannot coerce {type(value).__name__} to RatFunc")


def _cancel(num: MPoly, den: MPoly) -> tuple[MPoly, MPoly]:
    """Remove the full common factor of num and den."""
    ring = num.ring
    mono_n = num.min_exponents()
    mono_d = den.min_exponents()
    if mono_n and mono_d:
        common = ring.pack([min(x, y) for x, y in
                            zip(ring.unpack(mono_n), ring.unpack(mono_d))])
        if common:
            num = num.shift_down(common)
            den = den.shift_down(common)
    if den.is_constant() or num.is_constant():
        return num, den
    for factor in ring.known_factors:
        while True:
            dq = den.try_div(factor)
            if dq is None:
                break
            nq = num.try_div(factor)
            if nq is None:
                break
            num, den = nq, dq
            if den.is_constant() or num.is_constant():
                return num, den
    if len(den.terms) == 1 or len(num.terms) == 1:
        # residual monomials share nothing after the min-exponent strip
        return num, den
    # a denominator that factors completely over the registered irreducibles
    # is already coprime to num: the general gcd would find nothing
    core = den
    for factor in ring.known_factors:
        while len(core.terms) > 1:
            q = core.try_div(factor)
            if q is None:
                break
            core = q
    if len(core.terms) == 1:
        return num, den
    g = poly_gcd(num, den)
    if not g.is_constant():
        num = num.exact_div(g)
        den = den.exact_div(g)
    return num, den


def _subs_fraction(p: MPoly, name: str, vnum: MPoly, vden: MPoly, top: int) -> MPoly:
    """p with name := vnum/vden, scaled by vden^top to stay polynomial."""
    buckets = p.coeffs_in(name)
    out = MPoly.zero(p.ring)
    for e, c in buckets.items():
        out = out + c * vnum ** e * vden ** (top - e)
    return out
