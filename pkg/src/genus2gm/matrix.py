"""Small dense matrices over the rational-function field.

Shapes here are tiny (2x2 up to 10x10), so the implementation favours
clarity: plain row tuples, Gauss-Jordan inversion over the field, and
determinants that clear denominators once and then run the fraction-free
Bareiss elimination from upoly.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence, Union

from .mpoly import MPoly, Scalar, VarTable
from .ratfunc import RatFunc, RFLike
from .rationals import Rat
from .upoly import det_bareiss, solve_fraction_free


class RFMatrix:
    __slots__ = ("ring", "rows")

    def __init__(self, ring: VarTable, rows: Sequence[Sequence[RatFunc]]):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, ring: VarTable,
                  rows: Sequence[Sequence[RFLike]]) -> "RFMatrix":
        return cls(ring, [[_rf(ring, v) for v in row] for row in rows])

    @classmethod
    def from_strs(cls, ring: VarTable,
                  rows: Sequence[Sequence[str]]) -> "RFMatrix":
        return cls(ring, [[RatFunc.parse(ring, s) for s in row] for row in rows])

    @classmethod
    def identity(cls, ring: VarTable, n: int) -> "RFMatrix":
        one = RatFunc.const(ring, 1)
        zero = RatFunc.const(ring, 0)
        return cls(ring, [[one if i == j else zero for j in range(n)]
                          for i in range(n)])

    @classmethod
    def zero(cls, ring: VarTable, nrows: int, ncols: int) -> "RFMatrix":
        z = RatFunc.const(ring, 0)
        return cls(ring, [[z] * ncols for _ in range(nrows)])

    # -- queries -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, key: tuple[int, int]) -> RatFunc:
        i, j = key
        return self.rows[i][j]

    def row(self, i: int) -> tuple[RatFunc, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[RatFunc, ...]:
        return tuple(r[j] for r in self.rows)

    def is_zero(self) -> bool:
        return all(v.is_zero() for r in self.rows for v in r)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RFMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "RFMatrix", same_shape: bool = True) -> None:
        if self.ring != other.ring:
            raise ValueError("mixed variable tables")
        if same_shape and self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RFMatrix") -> "RFMatrix":
        self._check(other)
        return RFMatrix(self.ring,
                        [[a + b for a, b in zip(ra, rb)]
                         for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "RFMatrix") -> "RFMatrix":
        self._check(other)
        return RFMatrix(self.ring,
                        [[a - b for a, b in zip(ra, rb)]
                         for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> "RFMatrix":
        return RFMatrix(self.ring, [[-v for v in r] for r in self.rows])

    def scale(self, s: RFLike) -> "RFMatrix":
        s = _rf(self.ring, s)
        return RFMatrix(self.ring, [[v * s for v in r] for r in self.rows])

    def __mul__(self, other: Union["RFMatrix", RFLike]) -> "RFMatrix":
        if isinstance(other, RFMatrix):
            return self.__matmul__(other)
        return self.scale(other)

    def __rmul__(self, other: RFLike) -> "RFMatrix":
        return self.scale(other)

    def __matmul__(self, other: "RFMatrix") -> "RFMatrix":
        self._check(other, same_shape=False)
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = RatFunc.const(self.ring, 0)
        cols = [other.col(j) for j in range(m)]
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return RFMatrix(self.ring, out)

    def transpose(self) -> "RFMatrix":
        n, m = self.shape
        return RFMatrix(self.ring,
                        [[self.rows[i][j] for i in range(n)] for j in range(m)])

    def trace(self) -> RatFunc:
        n, m = self.shape
        if n != m:
            raise ValueError("trace of a non-square matrix")
        out = RatFunc.const(self.ring, 0)
        for i in range(n):
            out = out + self.rows[i][i]
        return out

    def commutator(self, other: "RFMatrix") -> "RFMatrix":
        return self @ other - other @ self

    # -- linear algebra ----------------------------------------------------

    def det(self) -> RatFunc:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return RatFunc.const(self.ring, 1)
        if n == 1:
            return self.rows[0][0]
        if n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        # clear denominators row by row, then go fraction-free
        one = MPoly.const(self.ring, 1)
        cleared: list[list[MPoly]] = []
        scale = RatFunc.const(self.ring, 1)
        for row in self.rows:
            row_den = one
            for v in row:
                if not v.den.is_constant() or v.den.constant_value() != 1:
                    row_den = row_den * v.den
            cleared.append([(v * RatFunc.from_poly(row_den)).as_poly()
                            for v in row])
            scale = scale * RatFunc.from_poly(row_den)
        return RatFunc.from_poly(det_bareiss(cleared)) / scale

    def _cleared(self) -> tuple[list[list[MPoly]], MPoly]:
        """(polynomial matrix, scalar P) with self = matrix / P entrywise."""
        distinct: list[MPoly] = []
        for _, _, v in self.entries():
            if v.den.is_constant():
                continue
            if not any(v.den.terms == d.terms for d in distinct):
                distinct.append(v.den)
        p = MPoly.const(self.ring, 1)
        for d in distinct:
            p = p * d
        pf = RatFunc.from_poly(p)
        rows = [[(v * pf).as_poly() for v in row] for row in self.rows]
        return rows, p

    def inverse(self) -> "RFMatrix":
        """Inverse via fraction-free elimination on the cleared matrix."""
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        rows, p = self._cleared()
        one = MPoly.const(self.ring, 1)
        zero = MPoly.zero(self.ring)
        rhs = [[one if i == j else zero for j in range(n)] for i in range(n)]
        sols = solve_fraction_free(rows, rhs)
        pf = RatFunc.from_poly(p)
        return RFMatrix(self.ring, [[v * pf for v in row] for row in sols])

    def left_kernel(self) -> list[tuple[RatFunc, ...]]:
        """Basis of row vectors v with v * self = 0."""
        return self.transpose().right_kernel()

    def right_kernel(self) -> list[tuple[RatFunc, ...]]:
        """Basis of column vectors v (as tuples) with self * v = 0."""
        n, m = self.shape
        one = RatFunc.const(self.ring, 1)
        zero = RatFunc.const(self.ring, 0)
        work = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(m):
            pivot = next((i for i in range(r, n) if not work[i][c].is_zero()),
                         None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            inv = one / work[r][c]
            work[r] = [v * inv for v in work[r]]
            for i in range(n):
                if i == r or work[i][c].is_zero():
                    continue
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
            if r == n:
                break
        free = [c for c in range(m) if c not in pivots]
        basis = []
        for fc in free:
            vec = [zero] * m
            vec[fc] = one
            for pr, pc in enumerate(pivots):
                vec[pc] = -work[pr][fc]
            basis.append(tuple(vec))
        return basis

    # -- mapping helpers ----------------------------------------------------

    def map(self, fn: Callable[[RatFunc], RatFunc]) -> "RFMatrix":
        return RFMatrix(self.ring, [[fn(v) for v in r] for r in self.rows])

    def derivative(self, name: str) -> "RFMatrix":
        return self.map(lambda v: v.derivative(name))

    def subs_var(self, name: str, value: Union[RatFunc, MPoly, Scalar]) -> "RFMatrix":
        return self.map(lambda v: v.subs_var(name, value))

    def map_ring(self, ring: VarTable) -> "RFMatrix":
        return RFMatrix(ring, [[v.map_ring(ring) for v in r] for r in self.rows])

    def eval(self, point: Mapping[str, Scalar]) -> list[list[Rat]]:
        return [[v.eval(point) for v in r] for r in self.rows]

    def entries(self) -> Iterable[tuple[int, int, RatFunc]]:
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                yield i, j, v

    def __str__(self) -> str:
        return "[" + ",\n ".join(
            "[" + ", ".join(str(v) for v in row) + "]" for row in self.rows
        ) + "]"

    def __repr__(self) -> str:
        n, m = self.shape
        return f"RFMatrix({n}x{m} over {', '.join(self.ring.names)})"


def _rf(ring: VarTable, value: RFLike) -> RatFunc:
    if isinstance(value, RatFunc):
        if value.ring != ring:
            raise ValueError("mixed variable tables")
        return value
    if isinstance(value, MPoly):
        if value.ring != ring:
            raise ValueError("mixed variable tables")
        return RatFunc.from_poly(value)
    return RatFunc.const(ring, value)
