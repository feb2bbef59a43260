"""Standard variable tables and fixed matrices used across the library.

Weight conventions (all under the C*-action that scales x with weight 2):

  * curve coefficients t_k carry weight 2k,
  * frame entries s_i1 carry weight 3 and s_i2 weight 1, so that
    det S1 = s11 s22 - s12 s21 has weight 4,
  * the auxiliary scalars sigma2/sigma4/sigma6 carry weights -2/-4/-6.

Ring constructors are cached so that factors registered on them (det S1 on
the frame ring, the discriminant on the coefficient ring) are visible to
every caller.
"""

from __future__ import annotations

from functools import lru_cache

from .matrix import RFMatrix
from .mpoly import MPoly, VarTable
from .ratfunc import RatFunc
from .rationals import rat

T_NAMES = ("t2", "t3", "t4", "t5")
T_WEIGHTS = (4, 6, 8, 10)
S_NAMES = ("s11", "s12", "s21", "s22", "s31", "s32", "s41", "s42")
S_WEIGHTS = (3, 1, 3, 1, 3, 1, 3, 1)
SIGMA_NAMES = ("sigma2", "sigma4", "sigma6")
SIGMA_WEIGHTS = (-2, -4, -6)


@lru_cache(maxsize=None)
def t_ring() -> VarTable:
    """Coefficient ring of the odd family: Q[t2, t3, t4, t5]."""
    return VarTable(T_NAMES, T_WEIGHTS)


@lru_cache(maxsize=None)
def curve_ring() -> VarTable:
    """Q[x, t2, t3, t4, t5] with x of weight 2."""
    return VarTable(("x",) + T_NAMES, (2,) + T_WEIGHTS)


@lru_cache(maxsize=None)
def sextic_t_ring() -> VarTable:
    """Coefficient ring of the even family: Q[t2, ..., t6]."""
    return VarTable(T_NAMES + ("t6",), T_WEIGHTS + (12,))


@lru_cache(maxsize=None)
def sextic_curve_ring() -> VarTable:
    return VarTable(("x",) + T_NAMES + ("t6",), (2,) + T_WEIGHTS + (12,))


@lru_cache(maxsize=None)
def ts_ring() -> VarTable:
    """Q[t2..t5, s11..s42]: moduli of curves with a frame on cohomology."""
    ring = VarTable(T_NAMES + S_NAMES, T_WEIGHTS + S_WEIGHTS)
    ring.register_factor(frame_det(ring).num)
    # linear in t2, hence irreducible; tangency quotients divide by it
    ring.register_factor(frame_relation(ring))
    return ring


@lru_cache(maxsize=None)
def sigma_ring() -> VarTable:
    """Q[t2..t5, sigma2, sigma4, sigma6] for scalar-weight bookkeeping."""
    return VarTable(T_NAMES + SIGMA_NAMES, T_WEIGHTS + SIGMA_WEIGHTS)


@lru_cache(maxsize=None)
def binary_form_ring() -> VarTable:
    """Q[X, Y, t2..t5] for classical invariant theory of binary sextics."""
    return VarTable(("X", "Y") + T_NAMES, (0, 2) + T_WEIGHTS)


def frame_det(ring: VarTable) -> RatFunc:
    """det S1 = s11 s22 - s12 s21."""
    s11 = MPoly.var(ring, "s11")
    s12 = MPoly.var(ring, "s12")
    s21 = MPoly.var(ring, "s21")
    s22 = MPoly.var(ring, "s22")
    return RatFunc.from_poly(s11 * s22 - s12 * s21)


def frame_relation(ring: VarTable) -> MPoly:
    """The hypersurface cutting the frame moduli out of 12-space:

    s42 s21 - s41 s22 + s32 s11 - s31 s12 - t2/4.
    """
    v = {n: MPoly.var(ring, n) for n in
         ("t2", "s11", "s12", "s21", "s22", "s31", "s32", "s41", "s42")}
    return (v["s42"] * v["s21"] - v["s41"] * v["s22"]
            + v["s32"] * v["s11"] - v["s31"] * v["s12"]
            - rat(1, 4) * v["t2"])


def symplectic_form(ring: VarTable) -> RFMatrix:
    """The reference symplectic structure [[0, I2], [-I2, 0]]."""
    return RFMatrix.from_rows(ring, [[0, 0, 1, 0],
                                     [0, 0, 0, 1],
                                     [-1, 0, 0, 0],
                                     [0, -1, 0, 0]])


def cup_matrix(ring: VarTable) -> RFMatrix:
    """Cup-product matrix of the odd-family basis x^(i-1) dx/y."""
    t2 = RatFunc.var(ring, "t2")
    ft = rat(4, 3)
    return RFMatrix.from_rows(ring, [
        [0, 0, 0, ft],
        [0, 0, 4, 0],
        [0, -4, 0, ft * t2],
        [-ft, 0, -ft * t2, 0],
    ])


def cup_block2(ring: VarTable) -> RFMatrix:
    """Upper-right 2x2 block of the cup matrix."""
    return RFMatrix.from_rows(ring, [[0, rat(4, 3)], [4, 0]])


def cup_block3(ring: VarTable) -> RFMatrix:
    """Lower-left 2x2 block: minus the transpose of the upper-right one."""
    return RFMatrix.from_rows(ring, [[0, -4], [rat(-4, 3), 0]])


def cup_block4(ring: VarTable) -> RFMatrix:
    """Lower-right 2x2 block, linear in t2."""
    t2 = RatFunc.var(ring, "t2")
    ft = rat(4, 3)
    return RFMatrix.from_rows(ring, [[0, ft * t2], [-ft * t2, 0]])


def base_frame(ring: VarTable) -> RFMatrix:
    """A concrete frame satisfying both frame constraints."""
    t2 = RatFunc.var(ring, "t2")
    q = rat(1, 4)
    return RFMatrix.from_rows(ring, [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, q * t2, 0, rat(3, 4)],
        [0, 0, q, 0],
    ])


def structure_c(ring: VarTable, k: int) -> RFMatrix:
    """The three symmetric 2x2 structure matrices indexing the vector fields."""
    if k == 1:
        rows = [[1, 0], [0, 0]]
    elif k == 2:
        rows = [[0, 0], [0, 1]]
    elif k == 3:
        rows = [[0, 1], [1, 0]]
    else:
        raise ValueError("k must be 1, 2 or 3")
    return RFMatrix.from_rows(ring, rows)


def frame_blocks(ring: VarTable) -> tuple[RFMatrix, RFMatrix, RFMatrix]:
    """(S1, S3, S4) with S4 = S1^-tr B2^-tr forced by the first constraint."""
    s = {n: RatFunc.var(ring, n) for n in S_NAMES}
    s1 = RFMatrix(ring, [[s["s11"], s["s12"]], [s["s21"], s["s22"]]])
    s3 = RFMatrix(ring, [[s["s31"], s["s32"]], [s["s41"], s["s42"]]])
    b2_inv_tr = cup_block2(ring).inverse().transpose()
    s4 = s1.inverse().transpose() @ b2_inv_tr
    return s1, s3, s4


def frame_matrix(ring: VarTable) -> RFMatrix:
    """The full 4x4 lower-block-triangular frame [[S1, 0], [S3, S4]]."""
    s1, s3, s4 = frame_blocks(ring)
    z = RatFunc.const(ring, 0)
    rows = [
        [s1[0, 0], s1[0, 1], z, z],
        [s1[1, 0], s1[1, 1], z, z],
        [s3[0, 0], s3[0, 1], s4[0, 0], s4[0, 1]],
        [s3[1, 0], s3[1, 1], s4[1, 0], s4[1, 1]],
    ]
    return RFMatrix(ring, rows)


def block(m: RFMatrix, i: int, j: int) -> RFMatrix:
    """2x2 block (i, j) of a 4x4 matrix, blocks indexed from 1."""
    r0, c0 = 2 * (i - 1), 2 * (j - 1)
    return RFMatrix(m.ring, [[m[r0, c0], m[r0, c0 + 1]],
                             [m[r0 + 1, c0], m[r0 + 1, c0 + 1]]])


def assemble_blocks(ring: VarTable, b11: RFMatrix, b12: RFMatrix,
                    b21: RFMatrix, b22: RFMatrix) -> RFMatrix:
    rows = []
    for i in range(2):
        rows.append(list(b11.rows[i]) + list(b12.rows[i]))
    for i in range(2):
        rows.append(list(b21.rows[i]) + list(b22.rows[i]))
    return RFMatrix(ring, rows)
