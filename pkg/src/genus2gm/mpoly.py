"""Sparse exact multivariate polynomials over the rationals.

A polynomial is a dict from packed exponent vectors to nonzero rational
coefficients.  Exponents are packed into a single Python int, 16 bits per
variable with the total degree in the topmost field, so that

  * packed ints compare exactly in graded lexicographic order (the canonical
    term order everywhere in this package: total degree first, then lex with
    the first table variable most significant), and
  * monomial multiplication is integer addition.

Weights enter degree bookkeeping only (weighted_degree, homogeneity checks),
never the term order.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .rationals import ONE, Rat, ZERO, is_rat, rat, rat_gcd, rat_str

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
GUARD_BIT = 1 << (FIELD_BITS - 1)
MAX_EXPONENT = GUARD_BIT - 1

Scalar = Union[int, Rat]


class VarTable:
    """Ordered variable names with integer weights.

    Weights only feed the weighted-degree bookkeeping (they may be zero or
    negative); the monomial order is always graded lexicographic in the plain
    total degree.  Two tables are interchangeable when their names and weights
    agree; the optional list of registered irreducible factors (used by
    rational-function normalization as a gcd shortcut) is deliberately
    excluded from equality.
    """

    __slots__ = ("names", "weights", "_index", "_nvars", "_deg_shift", "_guard",
                 "known_factors")

    def __init__(self, names: Sequence[str], weights: Optional[Sequence[int]] = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise ValueError("weights length mismatch")
        self.names = names
        self.weights = weights
        self._index = {n: i for i, n in enumerate(names)}
        self._nvars = len(names)
        self._deg_shift = FIELD_BITS * len(names)
        guard = 0
        for i in range(len(names) + 1):
            guard |= GUARD_BIT << (FIELD_BITS * i)
        self._guard = guard
        self.known_factors: list["MPoly"] = []

    @property
    def nvars(self) -> int:
        return self._nvars

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, VarTable)
                and self.names == other.names and self.weights == other.weights)

    def __hash__(self) -> int:
        return hash((self.names, self.weights))

    def __repr__(self) -> str:
        return f"VarTable({list(self.names)!r}, weights={list(self.weights)!r})"

    def register_factor(self, poly: "MPoly") -> None:
        """Register an irreducible polynomial used to shortcut gcd reduction.

        Soundness of the shortcut requires irreducibility; that is the
        caller's responsibility and is why registration is explicit.
        """
        if poly.ring != self:
            raise ValueError("factor belongs to a different ring")
        if poly.is_zero() or poly.degree() == 0:
            raise ValueError("factor must be nonconstant")
        prim = poly.primitive_part()
        if any(f.terms == prim.terms for f in self.known_factors):
            return
        self.known_factors.append(prim)

    # -- packed monomial helpers ------------------------------------------

    def pack(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self._nvars:
            raise ValueError("exponent vector length mismatch")
        packed = 0
        total = 0
        shift = self._deg_shift
        for e in exponents:
            e = int(e)
            if e < 0 or e > MAX_EXPONENT:
                raise ValueError(f"exponent {e} out of packing range")
            shift -= FIELD_BITS
            packed |= e << shift
            total += e
        if total > MAX_EXPONENT:
            raise ValueError("total degree out of packing range")
        return packed | (total << self._deg_shift)

    def unpack(self, packed: int) -> tuple[int, ...]:
        out = []
        shift = self._deg_shift
        for _ in range(self._nvars):
            shift -= FIELD_BITS
            out.append((packed >> shift) & FIELD_MASK)
        return tuple(out)

    def mono_degree(self, packed: int) -> int:
        return packed >> self._deg_shift

    def mono_weighted_degree(self, packed: int) -> int:
        exps = self.unpack(packed)
        return sum(e * w for e, w in zip(exps, self.weights))

    def mono_quotient(self, a: int, b: int) -> Optional[int]:
        """Packed a/b when b divides a, else None.

        Guard-bit subtraction: fields hold values below GUARD_BIT, so no
        borrow crosses a field boundary and divisibility is a mask test.
        """
        t = (a | self._guard) - b
        if t & self._guard == self._guard:
            return t ^ self._guard
        return None

    def var_monomial(self, name: str) -> int:
        exps = [0] * self._nvars
        exps[self._index[name]] = 1
        return self.pack(exps)


class MPoly:
    """Immutable-by-convention sparse polynomial over a VarTable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: VarTable, terms: dict[int, Rat]):
        self.ring = ring
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: VarTable) -> "MPoly":
        return cls(ring, {})

    @classmethod
    def const(cls, ring: VarTable, value: Scalar) -> "MPoly":
        value = rat(value) if isinstance(value, (int, str)) else value
        if value == 0:
            return cls(ring, {})
        return cls(ring, {0: value})

    @classmethod
    def var(cls, ring: VarTable, name: str) -> "MPoly":
        return cls(ring, {ring.var_monomial(name): ONE})

    @classmethod
    def monomial(cls, ring: VarTable, exponents: Sequence[int],
                 coeff: Scalar = 1) -> "MPoly":
        coeff = rat(coeff) if isinstance(coeff, (int, str)) else coeff
        if coeff == 0:
            return cls(ring, {})
        return cls(ring, {ring.pack(exponents): coeff})

    @classmethod
    def from_terms(cls, ring: VarTable,
                   items: Iterable[tuple[Sequence[int], Scalar]]) -> "MPoly":
        terms: dict[int, Rat] = {}
        for exps, coeff in items:
            coeff = rat(coeff) if isinstance(coeff, (int, str)) else coeff
            key = ring.pack(exps)
            acc = terms.get(key, ZERO) + coeff
            if acc == 0:
                terms.pop(key, None)
            else:
                terms[key] = acc
        return cls(ring, terms)

    @classmethod
    def parse(cls, ring: VarTable, text: str) -> "MPoly":
        from .parsing import parse_poly

        return parse_poly(ring, text)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> Rat:
        if not self.terms:
            return ZERO
        if len(self.terms) == 1 and 0 in self.terms:
            return self.terms[0]
        raise ValueError("polynomial is not constant")

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return self.ring.mono_degree(max(self.terms))

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        idx = self.ring.index(name)
        shift = self.ring._deg_shift - FIELD_BITS * (idx + 1)
        return max((k >> shift) & FIELD_MASK for k in self.terms)

    def weighted_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.mono_weighted_degree(k) for k in self.terms)

    def is_weighted_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degrees = {self.ring.mono_weighted_degree(k) for k in self.terms}
        return len(degrees) == 1

    def leading(self) -> tuple[int, Rat]:
        """(packed monomial, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms)
        return key, self.terms[key]

    def leading_coeff(self) -> Rat:
        return self.leading()[1]

    def variables(self) -> tuple[str, ...]:
        """Names that actually occur with positive exponent."""
        seen = [False] * self.ring.nvars
        for key in self.terms:
            for i, e in enumerate(self.ring.unpack(key)):
                if e:
                    seen[i] = True
        return tuple(n for n, s in zip(self.ring.names, seen) if s)

    def iter_terms(self) -> Iterator[tuple[tuple[int, ...], Rat]]:
        """Terms in descending graded-lex order."""
        for key in sorted(self.terms, reverse=True):
            yield self.ring.unpack(key), self.terms[key]

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        if is_rat(other):
            return self.terms == MPoly.const(self.ring, other).terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: Union["MPoly", Scalar]) -> "MPoly":
        other = self._coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key, ZERO) + coeff
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other: Union["MPoly", Scalar]) -> "MPoly":
        other = self._coerce(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key, ZERO) - coeff
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
        return MPoly(self.ring, out)

    def __rsub__(self, other: Scalar) -> "MPoly":
        return self._coerce(other) - self

    def __neg__(self) -> "MPoly":
        return MPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other: Union["MPoly", Scalar]) -> "MPoly":
        if not isinstance(other, MPoly):
            if is_rat(other):
                c = rat(other) if isinstance(other, int) else other
                if c == 0:
                    return MPoly(self.ring, {})
                return MPoly(self.ring, {k: v * c for k, v in self.terms.items()})
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MPoly(self.ring, {})
        if len(a) < len(b):
            a, b = b, a
        # single-term shortcut (scaling by a monomial is common)
        if len(b) == 1:
            (kb, cb), = b.items()
            if kb == 0:
                return MPoly(self.ring, {k: v * cb for k, v in a.items()})
            return MPoly(self.ring, {k + kb: v * cb for k, v in a.items()})
        out: dict[int, Rat] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                key = ka + kb
                acc = get(key)
                if acc is None:
                    out[key] = ca * cb
                else:
                    acc = acc + ca * cb
                    if acc == 0:
                        del out[key]
                    else:
                        out[key] = acc
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "MPoly":
        if isinstance(other, MPoly):
            if other.is_constant():
                other = other.constant_value()
            else:
                raise TypeError("use RatFunc for division by nonconstant polynomials")
        c = rat(other) if isinstance(other, int) else other
        if c == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        inv = ONE / c
        return MPoly(self.ring, {k: v * inv for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def _coerce(self, other: Union["MPoly", Scalar]) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise ValueError("mixed variable tables")
            return other
        if is_rat(other):
            return MPoly.const(self.ring, other)
        raise TypeError(f"cannot coerce {type(other).__name__} to MPoly")

    # -- calculus and substitution ----------------------------------------

    def derivative(self, name: str) -> "MPoly":
        idx = self.ring.index(name)
        shift = self.ring._deg_shift - FIELD_BITS * (idx + 1)
        step = (1 << shift) | (1 << self.ring._deg_shift)
        out: dict[int, Rat] = {}
        for key, coeff in self.terms.items():
            e = (key >> shift) & FIELD_MASK
            if e:
                out[key - step] = coeff * e
        return MPoly(self.ring, out)

    def coeffs_in(self, name: str) -> dict[int, "MPoly"]:
        """Split into {exponent of name: cofactor polynomial}."""
        idx = self.ring.index(name)
        shift = self.ring._deg_shift - FIELD_BITS * (idx + 1)
        buckets: dict[int, dict[int, Rat]] = {}
        deg_shift = self.ring._deg_shift
        for key, coeff in self.terms.items():
            e = (key >> shift) & FIELD_MASK
            stripped = key - ((e << shift) | (e << deg_shift))
            buckets.setdefault(e, {})[stripped] = coeff
        return {e: MPoly(self.ring, t) for e, t in buckets.items()}

    def subs_var(self, name: str, value: Union["MPoly", Scalar]) -> "MPoly":
        """Substitute a polynomial or scalar for one variable (Horner)."""
        if self.degree_in(name) <= 0:
            return self
        if not isinstance(value, MPoly):
            value = MPoly.const(self.ring, value)
        buckets = self.coeffs_in(name)
        exps = sorted(buckets, reverse=True)
        acc = buckets[exps[0]]
        prev = exps[0]
        for e in exps[1:]:
            acc = acc * value ** (prev - e) + buckets[e]
            prev = e
        if prev:
            acc = acc * value ** prev
        return acc

    def eval(self, point: Mapping[str, Scalar]) -> Rat:
        """Exact value at a full rational point."""
        powers: dict[int, list[Rat]] = {}
        vals = []
        for i, name in enumerate(self.ring.names):
            if name in point:
                v = point[name]
                vals.append(rat(v) if isinstance(v, int) else v)
            else:
                vals.append(None)
        total = ZERO
        for key, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(self.ring.unpack(key)):
                if not e:
                    continue
                if vals[i] is None:
                    raise ValueError(f"no value for variable {self.ring.names[i]}")
                cache = powers.setdefault(i, [ONE])
                while len(cache) <= e:
                    cache.append(cache[-1] * vals[i])
                term = term * cache[e]
            total += term
        return total

    def map_ring(self, ring: VarTable) -> "MPoly":
        """Re-express in another table containing all used variables."""
        if ring == self.ring:
            return self
        positions = []
        for name in self.ring.names:
            positions.append(ring.index(name) if name in ring else None)
        out: dict[int, Rat] = {}
        for key, coeff in self.terms.items():
            exps = [0] * ring.nvars
            for i, e in enumerate(self.ring.unpack(key)):
                if e:
                    if positions[i] is None:
                        raise ValueError(
                            f"variable {self.ring.names[i]} missing from target table")
                    exps[positions[i]] = e
            out[ring.pack(exps)] = coeff
        return MPoly(ring, out)

    # -- content, primitive part, division --------------------------------

    def content(self) -> Rat:
        """Positive rational content; 0 for the zero polynomial."""
        c = ZERO
        for coeff in self.terms.values():
            c = rat_gcd(c, coeff) if c else abs(coeff)
            if c == 1:
                break
        return c

    def primitive_part(self) -> "MPoly":
        """self / content, sign-normalized to positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coeff() < 0:
            c = -c
        inv = ONE / c
        return MPoly(self.ring, {k: v * inv for k, v in self.terms.items()})

    def min_exponents(self) -> int:
        """Packed gcd of all monomials (per-variable minimum exponents)."""
        it = iter(self.terms)
        try:
            first = next(it)
        except StopIteration:
            return 0
        mins = list(self.ring.unpack(first))
        for key in it:
            if not any(mins):
                break
            for i, e in enumerate(self.ring.unpack(key)):
                if e < mins[i]:
                    mins[i] = e
        return self.ring.pack(mins)

    def shift_down(self, packed: int) -> "MPoly":
        """Divide by a packed monomial known to divide every term."""
        if packed == 0:
            return self
        out = {}
        quot = self.ring.mono_quotient
        for key, coeff in self.terms.items():
            q = quot(key, packed)
            if q is None:
                raise ValueError("monomial does not divide all terms")
            out[q] = coeff
        return MPoly(self.ring, out)

    def try_div(self, divisor: "MPoly") -> Optional["MPoly"]:
        """Exact quotient self/divisor, or None when division fails.

        Standard leading-term division under graded-lex; on exact inputs the
        loop runs len(quotient) rounds.  A lazy max-heap tracks the leading
        monomial of the shrinking remainder.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not self.terms:
            return self
        if divisor.is_constant():
            return self / divisor.constant_value()
        if len(divisor.terms) == 1:
            (kb, cb), = divisor.terms.items()
            out = {}
            quot = self.ring.mono_quotient
            inv = ONE / cb
            for key, coeff in self.terms.items():
                q = quot(key, kb)
                if q is None:
                    return None
                out[q] = coeff * inv
            return MPoly(self.ring, out)
        lead_b, lc_b = divisor.leading()
        inv_lc = ONE / lc_b
        rem = dict(self.terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quotient: dict[int, Rat] = {}
        quot = self.ring.mono_quotient
        b_items = [(k, c) for k, c in divisor.terms.items() if k != lead_b]
        while heap:
            key = -heap[0]
            coeff = rem.get(key)
            if coeff is None:
                heapq.heappop(heap)
                continue
            qmono = quot(key, lead_b)
            if qmono is None:
                return None
            qc = coeff * inv_lc
            quotient[qmono] = quotient.get(qmono, ZERO) + qc
            del rem[key]
            heapq.heappop(heap)
            for kb, cb in b_items:
                kk = kb + qmono
                acc = rem.get(kk)
                if acc is None:
                    rem[kk] = -cb * qc
                    heapq.heappush(heap, -kk)
                else:
                    acc = acc - cb * qc
                    if acc == 0:
                        del rem[kk]
                    else:
                        rem[kk] = acc
        if rem:
            return None
        return MPoly(self.ring, {k: v for k, v in quotient.items() if v != 0})

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        q = self.try_div(divisor)
        if q is None:
            raise ValueError("inexact polynomial division")
        return q

    def divides(self, other: "MPoly") -> bool:
        return other.try_div(self) is not None

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.iter_terms():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            body = "*".join(factors)
            if not factors:
                body = rat_str(mag)
            elif mag != 1:
                body = f"{rat_str(mag)}*{body}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        s = str(self)
        if len(s) > 120:
            s = s[:117] + "..."
        return f"MPoly({s})"
