"""Driver: verify the five weighted-derivative identities symbolically."""

import time

from genus2gm.resnikoff import (HATTED_NAMES, hatted_forms, identity_status,
                                is_cusp_form, is_cusp_type, residual_at_point)

T0 = time.time()
bad = []

for name in HATTED_NAMES:
    for seed in (1, 2):
        value = residual_at_point(name, seed)
        if value:
            bad.append((name, f"point seed {seed}: residual {value}"))
    print(f"[{time.time()-T0:6.1f}s] {name}: point pre-checks done", flush=True)

for name in HATTED_NAMES:
    try:
        status = identity_status(name)
    except ArithmeticError as exc:
        bad.append((name, str(exc)))
        status = "FAILS"
    print(f"[{time.time()-T0:6.1f}s] {name}: identity {status}", flush=True)

cusp = {name: is_cusp_form(name) for name in HATTED_NAMES}
want_cusp = {"E2": False, "E4": False, "E6": False, "chi10": True, "chi12": True}
if cusp != want_cusp:
    bad.append(("cusp", f"{cusp}"))
print(f"[{time.time()-T0:6.1f}s] cusp proxy: {cusp}", flush=True)

rhs_cusp = {name: is_cusp_type(name) for name in HATTED_NAMES}
want_rhs = {"E2": False, "E4": True, "E6": True, "chi10": True, "chi12": True}
if rhs_cusp != want_rhs:
    bad.append(("rhs-cusp", f"{rhs_cusp}"))
print(f"[{time.time()-T0:6.1f}s] rhs cusp factors: {rhs_cusp}", flush=True)

print(f"[{time.time()-T0:6.1f}s] problems: {bad if bad else 'none'}")
raise SystemExit(1 if bad else 0)
