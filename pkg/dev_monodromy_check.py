"""Driver: verify the monodromy generators, relations, and index data."""

import time

from genus2gm.monodromy import (COSET_WORDS, GENERATOR_NAMES, VANISHING_CYCLES,
                                act_on_quadratic, arf_invariant, closure_mod2,
                                coset_representatives, distinguished_odd_form,
                                generators, identity_matrix, in_marked_subgroup,
                                in_theta_group, intersection, mat_inv, mat_mul,
                                mat_neg, odd_refinements, quadratic_refinements,
                                reduce_mod2, subgroup_index,
                                symplectic_group_mod2, is_symplectic, word)

T0 = time.time()
bad = []


def check(label, ok):
    if not ok:
        bad.append(label)
    print(f"  {'ok ' if ok else 'BAD'} {label}", flush=True)


PRINTED_A = ((1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1))
PRINTED_E = ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 0), (1, 1, 0, 1))

gens = generators()
check("generator A equals printed transvection matrix", gens["A"] == PRINTED_A)
check("generator E equals printed extra matrix", gens["E"] == PRINTED_E)
check("all five generators symplectic", all(is_symplectic(gens[n]) for n in GENERATOR_NAMES))

chain_ok = True
for i in range(1, 5):
    for j in range(1, 5):
        want = 1 if j == i + 1 else (-1 if j == i - 1 else 0)
        if intersection(VANISHING_CYCLES[i], VANISHING_CYCLES[j]) != want:
            chain_ok = False
check("vanishing cycles intersect along the A4 chain", chain_ok)

# braid relations hold exactly for the integer matrices
letters = list(GENERATOR_NAMES)
braid_ok = True
for i in range(4):
    x, y = letters[i], letters[i + 1]
    if word(x + y + x) != word(y + x + y):
        braid_ok = False
for i in range(5):
    for j in range(i + 2, 5):
        x, y = letters[i], letters[j]
        if word(x + y) != word(y + x):
            braid_ok = False
check("braid relations (adjacent and commuting)", braid_ok)

check("E^2 = (ABC)^4", word("E^2") == word("(ABC)^4"))
check("(ABCD)^5 = -I", word("(ABCD)^5") == mat_neg(identity_matrix()))
check("(ABCDE)^6 = I", word("(ABCDE)^6") == identity_matrix())

s = word("ABCDE^2DCBA")
check("central word squares to identity", mat_mul(s, s) == identity_matrix())
check("central word commutes with generators",
      all(mat_mul(s, gens[n]) == mat_mul(gens[n], s) for n in GENERATOR_NAMES))
print(f"  note: central word equals -I: {s == mat_neg(identity_matrix())}")

# the four conjugation identities certifying level-2 generators
pairs = [
    ("ED^2E^-1", "(ABCD)^5(AB)^3D^-2(ABC)^-4"),
    ("EDC^2D^-1E^-1", "(CD)^3(ABCD)^-5(AB)^-3(DA)^2"),
    ("EDCBA^2B^-1C^-1D^-1E^-1", "(DCB)^4"),
]
for lhs_text, rhs_text in pairs:
    check(f"{lhs_text} = {rhs_text}", word(lhs_text) == word(rhs_text))
lhs = mat_inv(word("EDCBA^2B^-1C^-1D^-1E^-1"))
rhs = mat_mul(word("EDCB^2C^-1D^-1E^-1"), word("A^2(CD)^3(ABCD)^5"))
check("(EDCBA^2B^-1C^-1D^-1E^-1)^-1 = EDCB^2C^-1D^-1E^-1 A^2(CD)^3(ABCD)^5",
      lhs == rhs)

conjugates = ("ED^2E^-1", "EDC^2D^-1E^-1", "EDCB^2C^-1D^-1E^-1",
              "EDCBA^2B^-1C^-1D^-1E^-1")
check("conjugated squares lie in the level-2 group",
      all(reduce_mod2(word(w)) == identity_matrix() for w in conjugates))
check("conjugated squares lie in the marked subgroup",
      all(in_marked_subgroup(word(w)) for w in conjugates))

full = symplectic_group_mod2()
check("mod-2 symplectic group has order 720", len(full) == 720)
im5 = closure_mod2(tuple(gens[n] for n in GENERATOR_NAMES))
check("five generators surject mod 2", len(im5) == 720)
im4 = closure_mod2(tuple(gens[n] for n in "ABCD"))
check("four generators give an order-120 image mod 2", len(im4) == 120)

# Coxeter relations mod 2 make the image a full symmetric-group quotient
cox_ok = all(word(x + x, mod=2) == identity_matrix() for x in "ABCD")
for i in range(4):
    for j in range(4):
        if i == j:
            continue
        x, y = "ABCD"[i], "ABCD"[j]
        order = 3 if abs(i - j) == 1 else 2
        m = word(x + y, mod=2)
        p = identity_matrix()
        for _ in range(order):
            p = mat_mul(p, m, 2)
        if p != identity_matrix():
            cox_ok = False
check("mod-2 image satisfies the S5 Coxeter relations", cox_ok)
print(f"[{time.time()-T0:6.1f}s] group sizes done", flush=True)

quads = quadratic_refinements()
check("sixteen quadratic refinements", len(quads) == 16)
odd = odd_refinements()
check("six odd refinements", len(odd) == 6)
check("ten even refinements", len(quads) - len(odd) == 10)

q0 = next(q for q in quads if arf_invariant(q) == 0
          and all(q[1 << k] == 0 for k in range(4)))
arf_preserved = all(
    arf_invariant(act_on_quadratic(m, q)) == arf_invariant(q)
    for m in (gens[n] for n in GENERATOR_NAMES) for q in quads)
check("generator action preserves the Arf invariant", arf_preserved)

qd = distinguished_odd_form()  # raises unless the fixed odd form is unique
check("exactly one odd form is fixed by the four transvections", qd in odd)
check("index of the marked subgroup is 6", subgroup_index() == 6)
check("E moves the distinguished form",
      act_on_quadratic(gens["E"], qd) != qd)
check("E is outside the marked subgroup", not in_marked_subgroup(gens["E"]))
reps = coset_representatives()
check("the six coset words separate the cosets", len(reps) == 6)
check("coset words are the stated ones", tuple(reps) == COSET_WORDS)

# theta group: predicate equals the mod-2 stabiliser of the even base form
base_even = tuple(
    (((i >> 0) & 1) * ((i >> 2) & 1) + ((i >> 1) & 1) * ((i >> 3) & 1)) % 2
    for i in range(16))
theta_stab = [m for m in full if act_on_quadratic(m, base_even) == base_even]
pred_stab = [m for m in full if in_theta_group(m)]
check("theta predicate equals the stabiliser of the even base form",
      set(theta_stab) == set(pred_stab))
check("theta stabiliser has order 72 (index 10)", len(theta_stab) == 72)
orbit_even = {act_on_quadratic(m, base_even) for m in full}
check("even-form orbit has size 10", len(orbit_even) == 10)
orbit_odd = {act_on_quadratic(m, qd) for m in full}
check("odd-form orbit has size 6", len(orbit_odd) == 6)

check("generator A is outside the theta group", not in_theta_group(gens["A"]))

# an element of the theta group outside the marked subgroup, lifted exactly
witness = None
for m in sorted(pred_stab):
    if act_on_quadratic(m, qd) != qd:
        witness = m
        break
check("mod-2 witness that the theta group is not contained", witness is not None)

# breadth-first search over generator words to lift the witness to Sp(4,Z)
frontier = {identity_matrix(): ""}
seen = {identity_matrix()}
lift_word = None
while lift_word is None:
    nxt = {}
    for m, w in frontier.items():
        for n in GENERATOR_NAMES:
            p = mat_mul(m, reduce_mod2(gens[n]), 2)
            if p in seen:
                continue
            seen.add(p)
            nxt[p] = w + n
            if p == witness:
                lift_word = w + n
                break
        if lift_word:
            break
    frontier = nxt
lift = word(lift_word)
check(f"integer lift {lift_word!r} lies in the theta group", in_theta_group(lift))
check("integer lift lies outside the marked subgroup",
      not in_marked_subgroup(lift))

print(f"[{time.time()-T0:6.1f}s] problems: {bad if bad else 'none'}")
raise SystemExit(1 if bad else 0)
