"""Laurent series in one local parameter with rational-function coefficients.

A series carries an explicit precision: ``prec = p`` means coefficients at
exponents below p are known exactly and everything from p on is unknown
(O(u^p)).  ``prec = None`` marks an exact Laurent polynomial.  Asking for data
beyond the tracked precision raises TruncationError instead of silently
returning zeros; expansion routines pick a working precision and the callers
assert their answers fit inside it.
"""

from __future__ import annotations

from typing import Mapping, Optional, Union

from .mpoly import MPoly, VarTable
from .rationals import Rat, is_rat, rat
from .ratfunc import RatFunc, RFLike

import gmpy2


class TruncationError(Exception):
    """A computation needed series coefficients beyond the tracked precision."""


def _rf(ring: VarTable, value: RFLike) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, MPoly):
        return RatFunc.from_poly(value)
    return RatFunc.const(ring, value)


def rat_sqrt(q: Rat) -> Rat:
    """Exact square root of a perfect-square rational."""
    if q < 0:
        raise ValueError("negative rational has no rational square root")
    num, den = int(q.numerator), int(q.denominator)
    rn = gmpy2.isqrt(num)
    rd = gmpy2.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"{q} is not a perfect square")
    return rat(int(rn), int(rd))


class LaurentSeries:
    __slots__ = ("ring", "var", "coeffs", "prec")

    def __init__(self, ring: VarTable, var: str,
                 coeffs: Mapping[int, RatFunc], prec: Optional[int]):
        kept = {}
        for e, c in coeffs.items():
            if prec is not None and e >= prec:
                continue
            if not c.is_zero():
                kept[e] = c
        self.ring = ring
        self.var = var
        self.coeffs = kept
        self.prec = prec

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: VarTable, var: str,
             prec: Optional[int] = None) -> "LaurentSeries":
        return cls(ring, var, {}, prec)

    @classmethod
    def const(cls, ring: VarTable, var: str, value: RFLike,
              prec: Optional[int] = None) -> "LaurentSeries":
        return cls(ring, var, {0: _rf(ring, value)}, prec)

    @classmethod
    def gen_power(cls, ring: VarTable, var: str, k: int,
                  prec: Optional[int] = None) -> "LaurentSeries":
        return cls(ring, var, {k: RatFunc.const(ring, 1)}, prec)

    @classmethod
    def from_terms(cls, ring: VarTable, var: str,
                   terms: Mapping[int, RFLike],
                   prec: Optional[int] = None) -> "LaurentSeries":
        return cls(ring, var, {e: _rf(ring, c) for e, c in terms.items()}, prec)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    def exact(self) -> bool:
        return self.prec is None

    def valuation(self) -> int:
        """Exponent of the lowest nonzero term (must be visible)."""
        if not self.coeffs:
            raise ValueError("valuation of a (known-)zero series")
        return min(self.coeffs)

    def coeff(self, k: int) -> RatFunc:
        if self.prec is not None and k >= self.prec:
            raise TruncationError(
                f"coefficient at {self.var}^{k} beyond O({self.var}^{self.prec})")
        return self.coeffs.get(k, RatFunc.const(self.ring, 0))

    def residue(self) -> RatFunc:
        return self.coeff(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.ring != other.ring or self.var != other.var:
            return False
        if self.prec != other.prec:
            return False
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[e] == other.coeffs[e] for e in self.coeffs)

    __hash__ = None  # type: ignore[assignment]

    # -- precision helpers ---------------------------------------------------

    def truncate(self, prec: int) -> "LaurentSeries":
        if self.prec is not None and self.prec < prec:
            raise TruncationError(
                f"cannot extend precision {self.prec} to {prec}")
        return LaurentSeries(self.ring, self.var, self.coeffs, prec)

    def _floor(self) -> Optional[int]:
        """Lowest exponent that could carry a nonzero term."""
        if self.coeffs:
            return min(self.coeffs)
        return self.prec  # unknown tail starts here; None means exact zero

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "LaurentSeries") -> None:
        if self.var != other.var or self.ring != other.ring:
            raise ValueError("mixed series rings")

    def __add__(self, other: Union["LaurentSeries", RFLike]) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.const(self.ring, self.var, other)
        self._check(other)
        prec = _min_prec(self.prec, other.prec)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return LaurentSeries(self.ring, self.var, out, prec)

    __radd__ = __add__

    def __sub__(self, other: Union["LaurentSeries", RFLike]) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.const(self.ring, self.var, other)
        return self + (-other)

    def __rsub__(self, other: RFLike) -> "LaurentSeries":
        return LaurentSeries.const(self.ring, self.var, other) - self

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.ring, self.var,
                             {e: -c for e, c in self.coeffs.items()}, self.prec)

    def __mul__(self, other: Union["LaurentSeries", RFLike]) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            s = _rf(self.ring, other)
            return LaurentSeries(self.ring, self.var,
                                 {e: c * s for e, c in self.coeffs.items()},
                                 self.prec)
        self._check(other)
        fa, fb = self._floor(), other._floor()
        if fa is None or fb is None:
            return LaurentSeries.zero(self.ring, self.var)
        prec: Optional[int] = None
        if self.prec is not None:
            prec = self.prec + fb
        if other.prec is not None:
            p2 = other.prec + fa
            prec = p2 if prec is None else min(prec, p2)
        out: dict[int, RatFunc] = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = ea + eb
                if prec is not None and e >= prec:
                    continue
                cur = out.get(e)
                prod = ca * cb
                out[e] = prod if cur is None else cur + prod
        return LaurentSeries(self.ring, self.var, out, prec)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            return self.inverse() ** (-n)
        out = LaurentSeries.const(self.ring, self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __truediv__(self, other: Union["LaurentSeries", RFLike]) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            s = _rf(self.ring, other)
            inv = RatFunc.const(self.ring, 1) / s
            return self * inv
        return self * other.inverse()

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by var^k."""
        prec = None if self.prec is None else self.prec + k
        return LaurentSeries(self.ring, self.var,
                             {e + k: c for e, c in self.coeffs.items()}, prec)

    def inverse(self) -> "LaurentSeries":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of a (known-)zero series")
        v = self.valuation()
        lead = self.coeffs[v]
        # relative precision of the input bounds the output
        if self.prec is None:
            if len(self.coeffs) == 1:
                inv = RatFunc.const(self.ring, 1) / lead
                return LaurentSeries(self.ring, self.var, {-v: inv}, None)
            raise TruncationError(
                "inverse of a multi-term exact series needs a truncation")
        rel = self.prec - v
        inv_lead = RatFunc.const(self.ring, 1) / lead
        tail = ((self.shift(-v) * inv_lead) - 1).truncate(rel)  # valuation >= 1
        one = LaurentSeries.const(self.ring, self.var, 1, rel)
        acc = one
        if not tail.is_zero():
            for _ in range(rel - 1):
                acc = (one - tail * acc).truncate(rel)
        return (acc * inv_lead).shift(-v).truncate(self.prec - 2 * v)

    def sqrt(self) -> "LaurentSeries":
        """Square root with rational leading coefficient; even valuation."""
        if not self.coeffs:
            raise ValueError("square root of a (known-)zero series")
        v = self.valuation()
        if v % 2:
            raise ValueError("odd valuation has no Laurent square root")
        lead = self.coeffs[v]
        if not lead.is_constant():
            raise ValueError("leading coefficient must be a rational constant")
        root = rat_sqrt(lead.constant_value())
        if self.prec is None:
            if len(self.coeffs) == 1:
                return LaurentSeries(self.ring, self.var,
                                     {v // 2: RatFunc.const(self.ring, root)},
                                     None)
            raise TruncationError("sqrt of an exact series needs a truncation")
        rel = self.prec - v
        tail = (self.shift(-v) / lead) - 1  # (1 + tail), val(tail) >= 1
        # binomial series for (1 + tail)^(1/2)
        acc = LaurentSeries.const(self.ring, self.var, 1, rel)
        term = LaurentSeries.const(self.ring, self.var, 1, rel)
        binom = rat(1)
        for j in range(1, rel):
            binom = binom * (rat(1, 2) - (j - 1)) / j
            term = term * tail
            if term.is_zero():
                break
            acc = acc + term * binom
        return (acc * root).shift(v // 2).truncate(self.prec - v // 2)

    # -- calculus ------------------------------------------------------------

    def derivative(self) -> "LaurentSeries":
        prec = None if self.prec is None else self.prec - 1
        return LaurentSeries(self.ring, self.var,
                             {e - 1: c * e for e, c in self.coeffs.items()
                              if e != 0}, prec)

    def integrate(self) -> "LaurentSeries":
        """Term-by-term antiderivative; rejects a nonzero residue."""
        if self.prec is None or self.prec > -1:
            if not self.coeff(-1).is_zero():
                raise ValueError("residue obstruction: cannot integrate")
        prec = None if self.prec is None else self.prec + 1
        return LaurentSeries(self.ring, self.var,
                             {e + 1: c / (e + 1) for e, c in self.coeffs.items()
                              if e != -1}, prec)

    def principal_part(self) -> "LaurentSeries":
        """Terms of negative exponent, as an exact series."""
        if self.prec is not None and self.prec < 0:
            raise TruncationError("principal part not fully known")
        return LaurentSeries(self.ring, self.var,
                             {e: c for e, c in self.coeffs.items() if e < 0},
                             None)

    def regular_part(self) -> "LaurentSeries":
        return LaurentSeries(self.ring, self.var,
                             {e: c for e, c in self.coeffs.items() if e >= 0},
                             self.prec)

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e in sorted(self.coeffs):
                c = self.coeffs[e]
                cs = str(c)
                if e == 0:
                    parts.append(cs)
                else:
                    power = self.var if e == 1 else f"{self.var}^{e}"
                    if cs == "1":
                        parts.append(power)
                    elif cs == "-1":
                        parts.append(f"-{power}")
                    else:
                        if "+" in cs or "/" in cs or cs.count("-") > int(cs.startswith("-")):
                            cs = f"({cs})"
                        parts.append(f"{cs}*{power}")
            body = " + ".join(parts).replace("+ -", "- ")
        if self.prec is None:
            return body
        return f"{body} + O({self.var}^{self.prec})"

    def __repr__(self) -> str:
        s = str(self)
        if len(s) > 140:
            s = s[:137] + "..."
        return f"LaurentSeries({s})"


def _min_prec(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)
