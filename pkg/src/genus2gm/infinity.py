"""Local analysis at infinity and the cup product.

Both families carry the coordinate function t = x^2/y near infinity, so the
branch data comes from solving x^4 = t^2 f(x) as a Laurent series in t (one
branch x ~ t^-2 for the odd family, two branches x ~ +-t^-1 for the even
one), with y recovered as x^2/t.

The odd-family basis forms x^i dx/y (i = 0..3) are second kind; for i = 2, 3
a meromorphic function P_i(t) with dP_i cancelling the principal part makes
the Cech representative holomorphic, and the pairing is

  <omega_i, omega_j> = Res_t( P_j omega_i - P_i omega_j + P_i dP_j ).
"""

from __future__ import annotations

from functools import lru_cache

from .families import even_family, odd_family
from .matrix import RFMatrix
from .mpoly import VarTable
from .rationals import rat
from .ratfunc import RatFunc
from .series import LaurentSeries, TruncationError
from .upoly import UPoly

TVAR = "t"


@lru_cache(maxsize=None)
def branch_expansion(kind: str, branch: int = 1,
                     prec: int = 18) -> tuple[LaurentSeries, LaurentSeries]:
    """(x(t), y(t)) on a branch at infinity; branch picks the sign for the
    even family (the odd family has a single branch)."""
    fam = odd_family() if kind == "odd" else even_family()
    ring = fam.coeff_ring
    fu = fam.f_upoly()
    # x^4 - t^2 f(x) = 0 with t^2 folded into the coefficients
    t2s = LaurentSeries.gen_power(ring, TVAR, 2)
    x4 = UPoly.from_coeffs(ring, "x", [0, 0, 0, 0, 1])

    def lift(c: RatFunc) -> LaurentSeries:
        return LaurentSeries.const(ring, TVAR, c, None)

    lead = -2 if kind == "odd" else -1
    if kind == "odd" and branch != 1:
        raise ValueError("the odd family has one point at infinity")
    x0 = LaurentSeries.from_terms(ring, TVAR, {lead: branch}, prec)

    def g_eval(x: LaurentSeries) -> LaurentSeries:
        return x4.eval_with(x, lift) - t2s * fu.eval_with(x, lift)

    gp = x4.derivative()
    x = x0
    for _ in range(24):
        val = g_eval(x)
        if val.is_zero():
            break
        dval = gp.eval_with(x, lift) - t2s * fu.derivative().eval_with(x, lift)
        x = (x - val / dval).truncate(prec)
    else:
        raise TruncationError("branch expansion did not converge")
    y = x * x * LaurentSeries.gen_power(ring, TVAR, -1)
    return x, y


def form_series(kind: str, i: int, branch: int = 1,
                prec: int = 18) -> LaurentSeries:
    """Laurent expansion of x^i dx/y divided by dt."""
    x, y = branch_expansion(kind, branch, prec)
    return x ** i * x.derivative() / y


@lru_cache(maxsize=None)
def holomorphic_corrections(prec: int = 18) -> dict[int, LaurentSeries]:
    """P_i(t) with x^i dx/y + dP_i holomorphic at infinity (odd family)."""
    out: dict[int, LaurentSeries] = {}
    ring = odd_family().coeff_ring
    zero = LaurentSeries.zero(ring, TVAR)
    for i in range(4):
        pp = form_series("odd", i, 1, prec).principal_part()
        if pp.is_zero():
            out[i] = zero
            continue
        if not pp.residue().is_zero():
            raise ValueError(f"x^{i} dx/y has a residue at infinity")
        out[i] = -pp.integrate()
    return out


@lru_cache(maxsize=None)
def cup_pairing(prec: int = 18) -> RFMatrix:
    """The 4x4 intersection matrix <x^i dx/y, x^j dx/y> of the odd family."""
    ring = odd_family().coeff_ring
    p = holomorphic_corrections(prec)
    w = [form_series("odd", i, 1, prec) for i in range(4)]
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            expr = p[j] * w[i] - p[i] * w[j] + p[i] * p[j].derivative()
            row.append(expr.residue())
        rows.append(row)
    return RFMatrix(ring, rows)


def even_residue(i: int, branch: int = 1, prec: int = 18) -> RatFunc:
    """Residue of x^i dx/y at one point at infinity of the even family."""
    return form_series("even", i, branch, prec).residue()


def even_corrected_basis_residues(branch: int = 1,
                                  prec: int = 18) -> list[RatFunc]:
    """Residues of the corrected even-family basis; all must vanish.

    The basis is dx/y, x dx/y, x^3 dx/y and (t2/2) x^2 dx/y + x^4 dx/y.
    """
    ring = even_family().coeff_ring
    t2 = RatFunc.var(ring, "t2")
    half = rat(1, 2)
    w = {i: form_series("even", i, branch, prec) for i in range(5)}
    corrected = w[2] * (half * t2) + w[4]
    return [w[0].residue(), w[1].residue(), w[3].residue(),
            corrected.residue()]


@lru_cache(maxsize=None)
def sqrt_window_ring() -> VarTable:
    """t-coefficients plus three undetermined expansion coefficients."""
    return VarTable(("t2", "t3", "t4", "t5", "am1", "a0", "a1"),
                    (4, 6, 8, 10, 1, 1, 1))


def symbolic_sqrt_window() -> list[RatFunc]:
    """Coefficients of t^-5..t^-2 of y = sqrt(f(x)) for the generic ansatz
    x = t^-2 + am1 t^-1 + a0 + a1 t + O(t^2)."""
    ring = sqrt_window_ring()
    x = LaurentSeries.from_terms(
        ring, TVAR,
        {-2: 1, -1: RatFunc.var(ring, "am1"), 0: RatFunc.var(ring, "a0"),
         1: RatFunc.var(ring, "a1")},
        prec=2)
    fam = odd_family()
    f_here = UPoly.from_mpoly(fam.f.map_ring(
        VarTable(("x",) + ring.names, (2,) + ring.weights)), "x", ring)

    def lift(c: RatFunc) -> LaurentSeries:
        return LaurentSeries.const(ring, TVAR, c, None)

    y = f_here.eval_with(x, lift).sqrt()
    if y.prec is None or y.prec < -1:
        raise TruncationError("square-root window too short")
    return [y.coeff(k) for k in range(-5, -1)]
