"""The two genus-2 hyperelliptic families with a marked point at infinity.

Odd model  y^2 = x^5 + t2 x^3 + t3 x^2 + t4 x + t5   (Weierstrass point at oo)
Even model y^2 = x^6 + t2 x^4 + t3 x^3 + t4 x^2 + t5 x + t6

Both are weighted-homogeneous with deg x = 2, deg t_k = 2k, deg y = 5 (odd)
or 6 (even).  The odd family is the primary object; the even one only feeds
the residue calculus at infinity and classical invariant theory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .mpoly import MPoly, VarTable
from .rationals import Rat, rat
from .rings import curve_ring, sextic_curve_ring, sextic_t_ring, t_ring
from .upoly import UPoly, resultant


@dataclass(frozen=True)
class HyperellipticFamily:
    kind: str                      # "odd" (quintic) or "even" (sextic)
    ring: VarTable = field(repr=False)        # Q[x, t...]
    coeff_ring: VarTable = field(repr=False)  # Q[t...]
    f: MPoly = field(repr=False)   # defining polynomial in x

    @property
    def degree(self) -> int:
        return self.f.degree_in("x")

    @property
    def t_names(self) -> tuple[str, ...]:
        return self.coeff_ring.names

    def f_upoly(self) -> UPoly:
        return UPoly.from_mpoly(self.f, "x", self.coeff_ring)

    def f_prime(self) -> MPoly:
        return self.f.derivative("x")

    def curve_equation_holds(self, x: Rat, y: Rat,
                             t_values: dict[str, Rat]) -> bool:
        point = dict(t_values)
        point["x"] = x
        return y * y == self.f.eval(point)


@lru_cache(maxsize=None)
def odd_family() -> HyperellipticFamily:
    ring = curve_ring()
    x = MPoly.var(ring, "x")
    t = {n: MPoly.var(ring, n) for n in ("t2", "t3", "t4", "t5")}
    f = x ** 5 + t["t2"] * x ** 3 + t["t3"] * x ** 2 + t["t4"] * x + t["t5"]
    return HyperellipticFamily("odd", ring, t_ring(), f)


@lru_cache(maxsize=None)
def even_family() -> HyperellipticFamily:
    ring = sextic_curve_ring()
    x = MPoly.var(ring, "x")
    t = {n: MPoly.var(ring, n) for n in ("t2", "t3", "t4", "t5", "t6")}
    f = (x ** 6 + t["t2"] * x ** 4 + t["t3"] * x ** 3 + t["t4"] * x ** 2
         + t["t5"] * x + t["t6"])
    return HyperellipticFamily("even", ring, sextic_t_ring(), f)


@lru_cache(maxsize=None)
def discriminant_numerator() -> MPoly:
    """res_x(f, f') of the odd family: 5^5 times the discriminant.

    The result is irreducible, so it is registered on every ring that can
    carry it in a denominator; canonicalization then strips it by trial
    division instead of running a general gcd.
    """
    fam = odd_family()
    fu = fam.f_upoly()
    res = resultant(fu, fu.derivative())
    from .rings import sigma_ring, ts_ring
    for ring in (fam.coeff_ring, fam.ring, ts_ring(), sigma_ring()):
        ring.register_factor(res.map_ring(ring))
    return res


def discriminant() -> MPoly:
    """The discriminant Delta = res_x(f, f') / 5^5 of the odd family."""
    return discriminant_numerator() * rat(1, 5 ** 5)
