"""Arbitrary-precision rational scalars.

gmpy2.mpq is the working type when available (it is much faster than
fractions.Fraction on the coefficient-heavy paths); Fraction is the drop-in
fallback.  Both keep values reduced with a positive denominator, which is the
canonical form everything downstream assumes.
"""

from __future__ import annotations

import math
from typing import Union

try:
    from gmpy2 import mpq as Rat  # type: ignore[import-untyped]

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat  # type: ignore[assignment]

    _HAVE_GMPY2 = False

RatLike = Union[int, str, "Rat"]

ZERO = Rat(0)
ONE = Rat(1)


def rat(num: RatLike, den: int = 1) -> Rat:
    """Build a rational from ints, decimal strings or 'p/q' strings."""
    if den != 1:
        return Rat(num, den)
    if isinstance(num, str):
        s = num.strip()
        if "/" in s:
            p, q = s.split("/")
            return Rat(int(p), int(q))
        return Rat(int(s))
    return Rat(num)


def is_rat(value: object) -> bool:
    return isinstance(value, type(ONE)) or isinstance(value, int)


def num_den(q: Rat) -> tuple[int, int]:
    """Numerator and denominator as plain Python ints."""
    return int(q.numerator), int(q.denominator)


def rat_gcd(a: Rat, b: Rat) -> Rat:
    """Positive generator of the fractional ideal (a, b).

    gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2); this is the content
    convention used for making polynomials primitive.
    """
    an, ad = num_den(a)
    bn, bd = num_den(b)
    num = math.gcd(an, bn)
    den = (ad * bd) // math.gcd(ad, bd)
    return Rat(num, den)


def rat_str(q: Rat) -> str:
    n, d = num_den(q)
    return str(n) if d == 1 else f"{n}/{d}"
