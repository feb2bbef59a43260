"""Driver: verify vector_fields against the printed golden data."""

import time

from genus2gm.matrix import RFMatrix
from genus2gm.rationals import rat
from genus2gm.ratfunc import RatFunc
from genus2gm.rings import frame_det, sigma_ring, t_ring, ts_ring
from genus2gm import vector_fields as vf

T0 = time.time()


def clock(label):
    print(f"[{time.time() - T0:7.2f}s] {label}", flush=True)


SR = sigma_ring()
TR = t_ring()
TS = ts_ring()

# -- printed direction coefficients (sigma level) ---------------------------
PRINTED_R = {
    2: """((24*t2^2*t4+450*t3*t5)*sigma2
          + (-180*t2^2*t5+36*t2*t3*t4+600*t4*t5)*sigma4
          + (-40*t2*t3*t5+16*t2*t4^2+250*t5^2)*sigma6) / (75*t5)""",
    3: """((-180*t2^2*t5+36*t2*t3*t4+600*t4*t5)*sigma2
          + (-390*t2*t3*t5+54*t3^2*t4+750*t5^2)*sigma4
          + (-20*t2*t4*t5-60*t3^2*t5+24*t3*t4^2)*sigma6) / (75*t5)""",
    4: """((-120*t2*t3*t5+48*t2*t4^2+750*t5^2)*sigma2
          + (-60*t2*t4*t5-180*t3^2*t5+72*t3*t4^2)*sigma4
          + (150*t2*t5^2-110*t3*t4*t5+32*t4^3)*sigma6) / (75*t5)""",
    5: "0",
}

clock("solving sigma-level direction coefficients")
coeffs = vf.direction_coefficients_sigma()
for m in vf.DIRECTIONS:
    want = RatFunc.parse(SR, PRINTED_R[m])
    print(f"  R_{m} matches printed: {(coeffs[m] - want).is_zero()}")

clock("gamma kernels")
res = vf.gamma_kernel_residuals(TR)
print("  right kernel (Euler):", all(v.is_zero() for v in res["right"]))
print("  left kernel (3,0,0,-1):", all(v.is_zero() for v in res["left"]))

# -- printed weight-component matrices ---------------------------------------
E2_ROWS = [
    ["-6*t2*t4/(25*t5)", "-1", "0", "0"],
    ["4/5*t2", "-2*t2*t4/(25*t5)", "1", "0"],
    ["0", "8/5*t2", "2*t2*t4/(25*t5)", "3"],
    ["-t4", "-2*t3", "-3/5*t2", "6*t2*t4/(25*t5)"],
]
E4_ROWS = [
    ["4/5*t2-9*t3*t4/(25*t5)", "0", "1", "0"],
    ["6/5*t3", "8/5*t2-3*t3*t4/(25*t5)", "0", "3"],
    ["-t4", "2/5*t3", "-(3/5*t2-3*t3*t4/(25*t5))", "0"],
    ["-2*t5", "-3*t4", "-2/5*t3", "-(9/5*t2-9*t3*t4/(25*t5))"],
]
E6_ROWS = [
    ["2/5*t3-4*t4^2/(25*t5)", "1/3*t2", "0", "1"],
    ["1/5*t4", "2/15*t3-4*t4^2/(75*t5)", "0", "0"],
    ["-2/3*t5", "1/15*t4", "-(2/15*t3-4*t4^2/(75*t5))", "0"],
    ["0", "-4/3*t5", "-1/15*t4", "-(2/5*t3-4*t4^2/(25*t5))"],
]

clock("weight components")
for j, rows in ((2, E2_ROWS), (4, E4_ROWS), (6, E6_ROWS)):
    got = vf.weight_component(j)
    want = RFMatrix.from_strs(TR, rows)
    print(f"  E_-{j} matches printed: {(got - want).is_zero()}")

# -- printed scalar coefficients ---------------------------------------------
clock("scalar coefficients")
s = {n: RatFunc.var(TS, n) for n in ("s11", "s12", "s21", "s22")}
d2 = frame_det(TS) ** 2
q = rat(1, 4)
PRINTED_SCALARS = {
    1: {"sigma4": -q * s["s21"] * s["s22"] / d2,
        "sigma6": rat(3, 4) * s["s22"] ** 2 / d2,
        "sigma2": q * s["s21"] ** 2 / d2},
    2: {"sigma4": -q * s["s11"] * s["s12"] / d2,
        "sigma6": rat(3, 4) * s["s12"] ** 2 / d2,
        "sigma2": q * s["s11"] ** 2 / d2},
    3: {"sigma4": q * (s["s12"] * s["s21"] + s["s11"] * s["s22"]) / d2,
        "sigma6": -rat(3, 2) * s["s12"] * s["s22"] / d2,
        "sigma2": -rat(1, 2) * s["s11"] * s["s21"] / d2},
}
for k in vf.FIELD_INDICES:
    got = vf.scalar_coefficients(k, TS)
    ok = all((got[n] - PRINTED_SCALARS[k][n]).is_zero() for n in got)
    shape = vf.j_shape_residual(k, TS).is_zero()
    print(f"  k={k}: scalars match printed: {ok}; J shape (3x rule): {shape}")

# -- assembled fields: defining equation --------------------------------------
for k in vf.FIELD_INDICES:
    clock(f"defining residual k={k}")
    raw = vf.defining_residual(k)
    exact_blocks = all(raw[i, j].is_zero() for i in range(4) for j in range(4)
                       if not (i >= 2 and j >= 2))
    print(f"  first three blocks exact: {exact_blocks}; "
          f"full residual on locus: {vf.vanishes_on_frame_locus(raw)}")

# -- tangency ------------------------------------------------------------------
clock("relation tangency")
PRINTED_DF = {
    1: """(2*t2*t4*s21^2+15*t2*t5*s21*s22-3*t3*t4*s21*s22
           -10*t3*t5*s22^2+4*t4^2*s22^2)
          / (25*t5*(s11*s22-s12*s21)^2)""",
    2: """(2*t2*t4*s11^2+15*t2*t5*s11*s12-3*t3*t4*s11*s12
           -10*t3*t5*s12^2+4*t4^2*s12^2)
          / (25*t5*(s11*s22-s12*s21)^2)""",
    3: """(-4*t2*t4*s11*s21-15*t2*t5*s11*s22-15*t2*t5*s12*s21
           +3*t3*t4*s11*s22+3*t3*t4*s12*s21+20*t3*t5*s12*s22
           -8*t4^2*s12*s22)
          / (25*t5*(s11*s22-s12*s21)^2)""",
}
for k in vf.FIELD_INDICES:
    got = vf.relation_tangency_factor(k)
    want = RatFunc.parse(TS, PRINTED_DF[k])
    print(f"  dF(R_{k})/F matches printed: {(got - want).is_zero()}")

clock("discriminant tangency")
want_dd = RatFunc.parse(SR, """16*t2*t4/(5*t5)*sigma2
    - (60*t2*t5-24*t3*t4)/(5*t5)*sigma4
    - (60*t3*t5-32*t4^2)/(15*t5)*sigma6""")
got_dd = vf.discriminant_logderivative_sigma()
print("  sigma-level dDelta/Delta matches printed:",
      (got_dd - want_dd).is_zero())
for k in vf.FIELD_INDICES:
    got = vf.discriminant_logderivative(k)
    want = vf.specialise_sigma(want_dd, k, TS)
    print(f"  k={k} specialisation agrees: {(got - want).is_zero()}")

# -- JH transport identities ---------------------------------------------------
for kc in vf.FIELD_INDICES:
    clock(f"JH identities kc={kc}")
    for k in vf.FIELD_INDICES:
        a = vf.vanishes_on_frame_locus(vf.jh_first_residual(kc, k))
        b = vf.jh_second_residual(kc, k).is_zero()
        print(f"  (kc={kc}, k={k}): J rule on locus {a}, H rule exact {b}")

clock("done")
