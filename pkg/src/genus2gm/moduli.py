"""Frame moduli: constraints, group actions, and the coordinate-ring catalog.

A frame expresses a symplectic cohomology basis alpha in terms of the
geometric basis omega via a lower-block-triangular matrix S = [[S1, 0],
[S3, S4]].  Constancy of the pairing forces Phi = S Omega S^tr: the
off-diagonal block pins S4 = S1^-tr Omega2^-tr, and the remaining skew block
collapses to the single scalar relation

    s42 s21 - s41 s22 + s32 s11 - s31 s12 = t2 / 4,

so t2 can be eliminated.  The resulting ten-dimensional space embeds into
affine space through 153 weight-zero fractions in t, the frame entries and
delta = det S1; this module enumerates that catalog and implements the two
group actions on it: the torus rescaling (weight bookkeeping) and the
symplectic parabolic [[k, k'], [0, k^-tr]] acting by S -> g^tr S, under
which det S1 scales by det k.

The period realization takes a 4x4 matrix x of integrals of omega over
symplectic cycles, subject to X^tr Phi^-1 X = Omega (six bilinear
relations), and produces such a frame explicitly; everything here is checked
symbolically on a rational parametrization of that constraint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .matrix import RFMatrix
from .mpoly import MPoly, VarTable
from .rationals import Rat, rat
from .ratfunc import RatFunc
from .rings import (S_NAMES, T_NAMES, T_WEIGHTS, assemble_blocks, base_frame,
                    block, cup_block2, cup_block3, cup_block4, cup_matrix,
                    frame_blocks, frame_det, frame_matrix, frame_relation,
                    symplectic_form, ts_ring)

# -- frame constraints ---------------------------------------------------


def unit_block_residual(ring: VarTable) -> RFMatrix:
    """S1 Omega2 S4^tr - I; zero by the choice of S4."""
    s1, _, s4 = frame_blocks(ring)
    return s1 @ cup_block2(ring) @ s4.transpose() - RFMatrix.identity(ring, 2)


def skew_block_residual(ring: VarTable) -> RFMatrix:
    """S4 Omega3 S3^tr + S3 Omega2 S4^tr + S4 Omega4 S4^tr.

    Antisymmetric; its upper entry is a unit multiple of the frame relation
    divided by det S1, so it vanishes exactly on the moduli space.
    """
    _, s3, s4 = frame_blocks(ring)
    return (s4 @ cup_block3(ring) @ s3.transpose()
            + s3 @ cup_block2(ring) @ s4.transpose()
            + s4 @ cup_block4(ring) @ s4.transpose())


def gram_residual(ring: VarTable) -> RFMatrix:
    """S Omega S^tr - Phi for the generic frame."""
    s = frame_matrix(ring)
    return s @ cup_matrix(ring) @ s.transpose() - symplectic_form(ring)


def substitute_frame_relation(poly: MPoly) -> MPoly:
    """Eliminate t2 using the frame relation (reduction modulo it)."""
    ring = poly.ring
    v = {n: MPoly.var(ring, n) for n in
         ("s11", "s12", "s21", "s22", "s31", "s32", "s41", "s42")}
    t2_value = (v["s42"] * v["s21"] - v["s41"] * v["s22"]
                + v["s32"] * v["s11"] - v["s31"] * v["s12"]) * 4
    return poly.subs_var("t2", t2_value)


def equal_mod_frame_relation(a: RatFunc, b: RatFunc) -> bool:
    """Equality of rational functions on the frame moduli space.

    Cross-multiplies, so both denominators must stay invertible there
    (powers of t5, delta and the discriminant all do).
    """
    diff = a.num * b.den - b.num * a.den
    return substitute_frame_relation(diff).is_zero()


def random_frame_point(rng: random.Random) -> dict[str, Rat]:
    """A random rational point on the frame moduli space.

    Draws the free coordinates and eliminates t2 through the frame
    relation; retries until t5 and delta are invertible so that every
    function in the coordinate-ring catalog is defined at the point.
    """
    free = ("s11", "s12", "s21", "s22", "s31", "s32", "s41", "s42",
            "t3", "t4", "t5")
    while True:
        point = {n: rat(rng.randint(-9, 9), rng.randint(1, 4)) for n in free}
        delta = (point["s11"] * point["s22"] - point["s12"] * point["s21"])
        if not point["t5"] or not delta:
            continue
        point["t2"] = 4 * (point["s42"] * point["s21"]
                           - point["s41"] * point["s22"]
                           + point["s32"] * point["s11"]
                           - point["s31"] * point["s12"])
        return point


# -- coordinate-ring catalog ----------------------------------------------

_S_INDEX = {name: i for i, name in enumerate(S_NAMES)}


def _s_name(i: int, j: int) -> str:
    return f"s{i}{j}"


@dataclass(frozen=True)
class CatalogEntry:
    """One generator of the coordinate ring: a monomial in t and the frame
    entries divided by a power of delta = det S1."""

    name: str
    t_exponents: tuple[int, int, int, int]
    s_exponents: tuple[int, int, int, int, int, int, int, int]
    delta_power: int
    redundant: bool = False

    def numerator(self, ring: VarTable) -> MPoly:
        mono = MPoly.const(ring, 1)
        for n, e in zip(T_NAMES, self.t_exponents):
            if e:
                mono = mono * MPoly.var(ring, n) ** e
        for n, e in zip(S_NAMES, self.s_exponents):
            if e:
                mono = mono * MPoly.var(ring, n) ** e
        return mono

    def value(self, ring: VarTable) -> RatFunc:
        num = RatFunc.from_poly(self.numerator(ring))
        return num / frame_det(ring) ** self.delta_power

    def weight(self) -> int:
        t_part = sum(w * e for w, e in zip(T_WEIGHTS, self.t_exponents))
        s_part = sum((3 if n.endswith("1") else 1) * e
                     for n, e in zip(S_NAMES, self.s_exponents))
        return t_part + s_part - 4 * self.delta_power


def _s_exps(pairs: dict[str, int]) -> tuple[int, ...]:
    exps = [0] * 8
    for name, e in pairs.items():
        exps[_S_INDEX[name]] += e
    return tuple(exps)


def _compositions4() -> list[tuple[int, int, int, int]]:
    return [(i1, i2, i3, i4)
            for i1 in range(5) for i2 in range(5) for i3 in range(5)
            for i4 in range(5) if i1 + i2 + i3 + i4 == 4]


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    """All 155 named generators; exactly two are marked redundant (one is a
    constant shift of another and one is determined by the frame relation),
    leaving the 153 independent ones."""
    out: list[CatalogEntry] = []
    t_monos = {
        "T4": ((1, 0, 0, 0), 1),
        "T8": ((0, 0, 1, 0), 2),
        "T12": ((0, 2, 0, 0), 3),
        "T16": ((0, 1, 0, 1), 4),
        "T20": ((0, 0, 0, 2), 5),
    }
    zero8 = (0,) * 8
    for name, (texp, dpow) in t_monos.items():
        out.append(CatalogEntry(name, texp, zero8, dpow,
                                redundant=(name == "T4")))
    zero4 = (0, 0, 0, 0)
    for i1 in range(1, 5):
        for i2 in range(1, 5):
            exps = _s_exps({_s_name(i1, 1): 1, _s_name(i2, 2): 1})
            out.append(CatalogEntry(f"Q{i1}{i2}", zero4, exps, 1,
                                    redundant=(i1 == 1 and i2 == 2)))
    for comp in _compositions4():
        exps = _s_exps({_s_name(r, 2): e
                        for r, e in zip(range(1, 5), comp) if e})
        out.append(CatalogEntry("Q" + "".join(map(str, comp)),
                                zero4, exps, 1))
    for comp in _compositions4():
        exps = _s_exps({_s_name(r, 1): e
                        for r, e in zip(range(1, 5), comp) if e})
        out.append(CatalogEntry("P" + "".join(map(str, comp)),
                                zero4, exps, 3))
    scale_data = [("3", (0, 1, 0, 0), 1), ("5", (0, 0, 0, 1), 2)]
    for tag, texp, extra in scale_data:
        for i1 in range(1, 5):
            for i2 in range(1, 5):
                exps = _s_exps({_s_name(i1, 2): 1})
                exps = tuple(a + b for a, b in zip(
                    exps, _s_exps({_s_name(i2, 2): 1})))
                out.append(CatalogEntry(f"U{tag}{i1}{i2}", texp, exps,
                                        1 + extra))
    for tag, texp, extra in scale_data:
        for i1 in range(1, 5):
            for i2 in range(1, 5):
                exps = _s_exps({_s_name(i1, 1): 1})
                exps = tuple(a + b for a, b in zip(
                    exps, _s_exps({_s_name(i2, 1): 1})))
                out.append(CatalogEntry(f"V{tag}{i1}{i2}", texp, exps,
                                        2 + extra))
    return tuple(out)


def catalog_entry(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(name)


def redundancy_residuals(ring: VarTable) -> dict[str, RatFunc]:
    """The two dependencies inside the catalog, as exact residuals.

    'shift': Q12 - Q21 - 1 vanishes identically; 'relation': T4 minus
    4(Q24 - Q42 + Q13 - Q31) vanishes modulo the frame relation, so the
    residual returned here is reduced by it first.
    """
    q = {n: catalog_entry(n).value(ring)
         for n in ("Q12", "Q21", "Q24", "Q42", "Q13", "Q31")}
    shift = q["Q12"] - q["Q21"] - 1
    t4 = catalog_entry("T4").value(ring)
    combo = (q["Q24"] - q["Q42"] + q["Q13"] - q["Q31"]) * 4
    diff = t4.num * combo.den - combo.num * t4.den
    relation = RatFunc(substitute_frame_relation(diff),
                       t4.den * combo.den)
    return {"shift": shift, "relation": relation}


# -- parabolic group -------------------------------------------------------


@dataclass(frozen=True)
class Parabolic:
    """Element [[k, k'], [0, k^-tr]] of the symplectic parabolic group."""

    k: RFMatrix
    kprime: RFMatrix

    @property
    def ring(self) -> VarTable:
        return self.k.ring

    def matrix(self) -> RFMatrix:
        kinvtr = self.k.inverse().transpose()
        return assemble_blocks(self.ring, self.k, self.kprime,
                               RFMatrix.zero(self.ring, 2, 2), kinvtr)

    def is_member(self) -> bool:
        """k k'^tr must be symmetric."""
        m = self.k @ self.kprime.transpose()
        return m == m.transpose()

    def symplectic_residual(self) -> RFMatrix:
        g = self.matrix()
        phi = symplectic_form(self.ring)
        return g.transpose() @ phi @ g - phi

    def act(self, frame: RFMatrix) -> RFMatrix:
        """Base change of the symplectic basis: S -> g^tr S."""
        return self.matrix().transpose() @ frame


@lru_cache(maxsize=None)
def parabolic_ring() -> VarTable:
    """Frame variables plus a generic group element: k entries and the three
    entries of a symmetric matrix m with k' = m k^-tr."""
    extra = ("k11", "k12", "k21", "k22", "m11", "m12", "m22")
    return VarTable(T_NAMES + S_NAMES + extra,
                    T_WEIGHTS + tuple(3 if n.endswith("1") else 1
                                      for n in S_NAMES) + (0,) * 7)


def generic_parabolic(ring: VarTable) -> Parabolic:
    v = {n: RatFunc.var(ring, n) for n in
         ("k11", "k12", "k21", "k22", "m11", "m12", "m22")}
    k = RFMatrix(ring, [[v["k11"], v["k12"]], [v["k21"], v["k22"]]])
    m = RFMatrix(ring, [[v["m11"], v["m12"]], [v["m12"], v["m22"]]])
    return Parabolic(k, m @ k.inverse().transpose())


def det_scaling_residual(ring: VarTable) -> RatFunc:
    """det S1(g^tr S) - det(k) det S1(S) for generic g and S."""
    g = generic_parabolic(ring)
    moved = g.act(frame_matrix(ring))
    new_delta = block(moved, 1, 1).det()
    return new_delta - g.k.det() * frame_det(ring)


# -- period realization ----------------------------------------------------

X_NAMES = tuple(f"x{i}{j}" for i in range(1, 5) for j in range(1, 5))


@lru_cache(maxsize=None)
def period_ring() -> VarTable:
    """t-variables together with a full 4x4 matrix of abelian integrals."""
    ring = VarTable(T_NAMES + X_NAMES, T_WEIGHTS + (0,) * 16)
    d = (MPoly.var(ring, "x31") * MPoly.var(ring, "x42")
         - MPoly.var(ring, "x32") * MPoly.var(ring, "x41"))
    ring.register_factor(d)
    return ring


def period_matrix(ring: VarTable) -> RFMatrix:
    return RFMatrix(ring, [[RatFunc.var(ring, f"x{i}{j}")
                            for j in range(1, 5)] for i in range(1, 5)])


def period_gram_residual(ring: VarTable) -> RFMatrix:
    """X^tr Phi^-tr X - Omega; its six upper entries are the relations
    cutting out the honest period matrices.

    This sign convention is the one under which the frame factorization
    X S0^tr = [[tau, -I], [I, 0]] g holds, with g the period parabolic.
    """
    x = period_matrix(ring)
    phi_invtr = symplectic_form(ring).inverse().transpose()
    return x.transpose() @ phi_invtr @ x - cup_matrix(ring)


def normalized_period_ratio(ring: VarTable) -> RFMatrix:
    """tau = P1 P2^-1 from the two 2x2 blocks of holomorphic periods."""
    x = period_matrix(ring)
    p1 = RFMatrix(ring, [[x[0, 0], x[0, 1]], [x[1, 0], x[1, 1]]])
    p2 = RFMatrix(ring, [[x[2, 0], x[2, 1]], [x[3, 0], x[3, 1]]])
    return p1 @ p2.inverse()


def period_parabolic(ring: VarTable) -> Parabolic:
    """The group element carrying the reference frame to the period point.

    Its k block is the lower holomorphic period block and k' consists of the
    last two columns of the lower rows of X S0^tr.
    """
    x = period_matrix(ring)
    shifted = x @ base_frame(ring).transpose()
    k = RFMatrix(ring, [[x[2, 0], x[2, 1]], [x[3, 0], x[3, 1]]])
    kprime = RFMatrix(ring, [[shifted[2, 2], shifted[2, 3]],
                             [shifted[3, 2], shifted[3, 3]]])
    return Parabolic(k, kprime)


def period_image_frame(ring: VarTable) -> RFMatrix:
    """g^-tr S0: the frame presenting the period point in the moduli space."""
    g = period_parabolic(ring).matrix()
    return g.inverse().transpose() @ base_frame(ring)


def factorization_residual(ring: VarTable) -> RFMatrix:
    """X S0^tr - [[tau, -I], [I, 0]] g; vanishes modulo the six relations."""
    x = period_matrix(ring)
    tau = normalized_period_ratio(ring)
    one = RFMatrix.identity(ring, 2)
    left = assemble_blocks(ring, tau, -one, one, RFMatrix.zero(ring, 2, 2))
    return x @ base_frame(ring).transpose() - left @ period_parabolic(ring).matrix()


@lru_cache(maxsize=None)
def period_point() -> dict[str, RatFunc]:
    """Rational parametrization of the period relations.

    Solves the six relations sequentially: x12 from the bilinear relation
    among holomorphic periods, then the two linear pairs (x13, x23) and
    (x14, x24), and finally t2 from the last relation.  Values are rational
    functions in the remaining free x variables.
    """
    ring = period_ring()
    x = {n: RatFunc.var(ring, n) for n in X_NAMES}
    x12 = (x["x11"] * x["x32"] - x["x22"] * x["x41"]
           + x["x21"] * x["x42"]) / x["x31"]
    d = x["x31"] * x["x42"] - x["x41"] * x["x32"]

    def solve_pair(rhs1: RatFunc, rhs2: RatFunc) -> tuple[RatFunc, RatFunc]:
        # [[x31, x41], [x32, x42]] (u, v)^tr = (rhs1, rhs2)^tr
        u = (rhs1 * x["x42"] - rhs2 * x["x41"]) / d
        v = (x["x31"] * rhs2 - x["x32"] * rhs1) / d
        return u, v

    x13, x23 = solve_pair(
        x["x11"] * x["x33"] + x["x21"] * x["x43"],
        x12 * x["x33"] + x["x22"] * x["x43"] - 4)
    x14, x24 = solve_pair(
        x["x11"] * x["x34"] + x["x21"] * x["x44"] - RatFunc.const(ring, rat(4, 3)),
        x12 * x["x34"] + x["x22"] * x["x44"])
    t2 = (x13 * x["x34"] - x14 * x["x33"]
          + x23 * x["x44"] - x24 * x["x43"]) * rat(3, 4)
    return {"x12": x12, "x13": x13, "x23": x23,
            "x14": x14, "x24": x24, "t2": t2}


def at_period_point(value: RatFunc) -> RatFunc:
    """Substitute the solved coordinates of the rational parametrization."""
    out = value
    for name, sub in period_point().items():
        out = out.subs_var(name, sub)
    return out


def matrix_at_period_point(m: RFMatrix) -> RFMatrix:
    return m.map(at_period_point)


def modular_pullback_residuals(ring: VarTable) -> list[RatFunc]:
    """T-generators evaluated on the period frame minus their closed forms.

    On the image frame det S1 = 1/(x31 x42 - x32 x41), so each T-generator
    becomes its t-monomial times that determinant's power.
    """
    frame = period_image_frame(ring)
    delta = block(frame, 1, 1).det()
    d = (RatFunc.var(ring, "x31") * RatFunc.var(ring, "x42")
         - RatFunc.var(ring, "x32") * RatFunc.var(ring, "x41"))
    t = {n: RatFunc.var(ring, n) for n in T_NAMES}
    monos = [t["t2"], t["t4"], t["t3"] ** 2, t["t3"] * t["t5"],
             t["t5"] ** 2]
    out = []
    for i, mono in enumerate(monos, start=1):
        out.append(mono / delta ** i - mono * d ** i)
    return out
