"""Driver: verify igusa generators against printed reference polynomials."""

import time

from genus2gm import igusa
from genus2gm.families import discriminant_numerator
from genus2gm.mpoly import MPoly
from genus2gm.parsing import parse_poly
from genus2gm.rationals import rat
from genus2gm.rings import t_ring

T0 = time.time()
TR = t_ring()

PRINTED = {
    "A": "-3*t2^2-20*t4",
    "B": "-3*t2*t3^2+9*t2^2*t4-20*t4^2+75*t3*t5",
    "C": """12*t2^3*t3^2+18*t3^4-36*t2^4*t4-13*t2*t3^2*t4-88*t2^2*t4^2
            +160*t4^3-165*t2^2*t3*t5-800*t3*t4*t5-1125*t2*t5^2""",
    "E": """729*t2^10*t5^2-486*t2^9*t3*t4*t5+108*t2^8*t3^3*t5+81*t2^8*t3^2*t4^2
        -18225*t2^8*t4*t5^2-36*t2^7*t3^4*t4
        +12150*t2^7*t3^2*t5^2+10800*t2^7*t3*t4^2*t5+4*t2^6*t3^6
        -9720*t2^6*t3^3*t4*t5-1800*t2^6*t3^2*t4^3
        +135000*t2^6*t4^2*t5^2+1584*t2^5*t3^5*t5+2015*t2^5*t3^4*t4^2
        -175500*t2^5*t3^2*t4*t5^2-60000*t2^5*t3*t4^3*t5
        +928125*t2^5*t5^4-623*t2^4*t3^6*t4+60000*t2^4*t3^4*t5^2
        +92500*t2^4*t3^3*t4^2*t5+10000*t2^4*t3^2*t4^4
        -1012500*t2^4*t3*t4*t5^3-250000*t2^4*t4^3*t5^2+59*t2^3*t3^8
        -45050*t2^3*t3^5*t4*t5-17500*t2^3*t3^4*t4^3
        +225000*t2^3*t3^3*t5^3+850000*t2^3*t3^2*t4^2*t5^2
        -2812500*t2^3*t4*t5^4+5700*t2^2*t3^7*t5+10825*t2^2*t3^6*t4^2
        -478125*t2^2*t3^4*t4*t5^2-50000*t2^2*t3^3*t4^3*t5
        +1875000*t2^2*t3^2*t5^4+1250000*t2^2*t3*t4^2*t5^3
        -2610*t2*t3^8*t4+93750*t2*t3^6*t5^2+32500*t2*t3^5*t4^2*t5
        -1187500*t2*t3^3*t4*t5^3+216*t3^10
        -9000*t3^7*t4*t5+625*t3^6*t4^3+175000*t3^5*t5^3
        +15625*t3^4*t4^2*t5^2-390625*t3^2*t4*t5^4-9765625*t5^6""",
}

print(f"[{time.time()-T0:6.2f}s] computing transvectant chain", flush=True)
gens = igusa.generators()
print(f"[{time.time()-T0:6.2f}s] done; term counts:",
      {n: len(g.terms) for n, g in gens.items()})

for name, gen in gens.items():
    hom = gen.is_weighted_homogeneous()
    wt = gen.weighted_degree()
    print(f"  {name}: homogeneous={hom}, weight={wt} "
          f"(expected {igusa.GENERATOR_WEIGHTS[name]})")

targets = {n: parse_poly(TR, s) for n, s in PRINTED.items()}
targets["D"] = discriminant_numerator()

print("re-solving the triangular map from scratch:")
bad = False
for name in igusa.GENERATOR_NAMES:
    solved = igusa.express_in_chain(targets[name],
                                    igusa.GENERATOR_WEIGHTS[name])
    pinned = dict(igusa.REFERENCE_IN_CHAIN[name])
    match = solved == pinned
    bad = bad or not match
    print(f"  {name}: solve matches pinned map: {match}  ({solved})")

ref = igusa.reference_generators()
for name in igusa.GENERATOR_NAMES:
    same = (ref[name] - targets[name]).is_zero()
    bad = bad or not same
    print(f"  reference {name} == printed/resultant target: {same}")

print(f"  D/discriminant ratio: {igusa.discriminant_ratio()}")
bad = bad or igusa.discriminant_ratio() != 1

point = {"t2": rat(1), "t3": rat(2), "t4": rat(-1), "t5": rat(3)}
vals = igusa.evaluate_generators(point)
ok = True
for name in igusa.GENERATOR_NAMES:
    at_point = targets[name]
    for var, val in point.items():
        at_point = at_point.subs_var(var, MPoly.const(TR, val))
    ok = ok and (vals[name] == at_point.constant_value())
print("  evaluation cross-check:", ok)
bad = bad or not ok

print(f"[{time.time()-T0:6.2f}s] all done; FAIL={bad}")
raise SystemExit(1 if bad else 0)
