"""Monodromy of the odd family as explicit integer symplectic matrices.

The smooth fibres are genus-2 curves; a loop around each of the four
critical values acts on H_1 of the fibre by a symplectic transvection in
the corresponding vanishing cycle.  Intersections of consecutive cycles
follow the A_4 chain, and the combinations e1 = d1, e2 = d3,
e3 = d2 + d4, e4 = d4 form a symplectic basis.  Everything here is exact
integer linear algebra in that basis, rows holding images.

The fifth transvection, in the cycle d1 + d3, is what the marked point at
infinity freezes out; together the five generate the full integral
symplectic group, while the four alone generate an index-6 subgroup.  The
index is certified mod 2: a symplectic F_2 matrix group permutes the six
odd quadratic forms attached to the intersection pairing, the four-
generator image is the stabiliser of one of them, and coset
representatives are separated by where they move it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

Mat = tuple[tuple[int, ...], ...]
Vec = tuple[int, ...]

GENERATOR_NAMES = ("A", "B", "C", "D", "E")

# intersection pairing of the symplectic basis, <e_i, e_j> in rows
INTERSECTION_FORM: Mat = ((0, 0, 1, 0),
                          (0, 0, 0, 1),
                          (-1, 0, 0, 0),
                          (0, -1, 0, 0))

# vanishing cycles of the A_4 chain in the symplectic basis
VANISHING_CYCLES: dict[int, Vec] = {
    1: (1, 0, 0, 0),
    2: (0, 0, 1, -1),
    3: (0, 1, 0, 0),
    4: (0, 0, 0, 1),
}


def identity_matrix(n: int = 4) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat, mod: int | None = None) -> Mat:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            v = sum(a[i][k] * b[k][j] for k in range(m))
            row.append(v % mod if mod else v)
        out.append(tuple(row))
    return tuple(out)


def mat_pow(a: Mat, e: int, mod: int | None = None) -> Mat:
    if e < 0:
        return mat_pow(mat_inv(a), -e, mod)
    out = identity_matrix(len(a))
    for _ in range(e):
        out = mat_mul(out, a, mod)
    return out


def mat_neg(a: Mat) -> Mat:
    return tuple(tuple(-v for v in row) for row in a)


def mat_transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_inv(a: Mat) -> Mat:
    """Inverse of a symplectic matrix: conjugate the transpose by the form."""
    phi = INTERSECTION_FORM
    out = mat_neg(mat_mul(mat_mul(phi, mat_transpose(a)), phi))
    if mat_mul(a, out) != identity_matrix(len(a)):
        raise ArithmeticError("matrix is not symplectic")
    return out


def word(text: str, mod: int | None = None) -> Mat:
    """Evaluate a product like "ABC" or "(ABCD)^5 (AB)^-3" left to right.

    Tokens: generator letters, parenthesised groups, `^` with an integer
    exponent (negative allowed), whitespace ignored.
    """
    gens = generators()

    def parse(chars: list[str]) -> Mat:
        out = identity_matrix(4)
        while chars:
            c = chars.pop(0)
            if c == " ":
                continue
            if c == ")":
                break
            if c == "(":
                factor = parse(chars)
            elif c in gens:
                factor = gens[c]
            else:
                raise ValueError(f"unexpected {c!r}")
            if chars and chars[0] == "^":
                chars.pop(0)
                sign = 1
                if chars and chars[0] == "-":
                    chars.pop(0)
                    sign = -1
                digits = ""
                while chars and chars[0].isdigit():
                    digits += chars.pop(0)
                factor = mat_pow(factor, sign * int(digits))
            out = mat_mul(out, factor)
        return out

    result = parse(list(text))
    if mod:
        result = tuple(tuple(v % mod for v in row) for row in result)
    return result


def intersection(u: Vec, v: Vec) -> int:
    phi = INTERSECTION_FORM
    return sum(u[i] * phi[i][j] * v[j] for i in range(4) for j in range(4))


def transvection(cycle: Vec) -> Mat:
    """Monodromy about a nodal degeneration: x -> x - <x, c> c, in rows."""
    rows = []
    for i in range(4):
        e = tuple(int(i == j) for j in range(4))
        pair = intersection(e, cycle)
        rows.append(tuple(e[j] - pair * cycle[j] for j in range(4)))
    return tuple(rows)


@lru_cache(maxsize=None)
def generators() -> dict[str, Mat]:
    """Transvections of the four chain cycles plus the frozen fifth one."""
    out = {}
    for name, i in zip("ABCD", (1, 2, 3, 4)):
        out[name] = transvection(VANISHING_CYCLES[i])
    d1, d3 = VANISHING_CYCLES[1], VANISHING_CYCLES[3]
    out["E"] = transvection(tuple(a + b for a, b in zip(d1, d3)))
    return out


def is_symplectic(m: Mat, mod: int | None = None) -> bool:
    phi = INTERSECTION_FORM
    lhs = mat_mul(mat_mul(m, phi), mat_transpose(m), mod)
    rhs = tuple(tuple(v % mod for v in row) for row in phi) if mod else phi
    return lhs == rhs


def reduce_mod2(m: Mat) -> Mat:
    return tuple(tuple(v % 2 for v in row) for row in m)


@lru_cache(maxsize=None)
def symplectic_group_mod2() -> frozenset[Mat]:
    """All symplectic 4x4 matrices over F_2, by brute enumeration."""
    found = []
    for bits in product((0, 1), repeat=16):
        m = (bits[0:4], bits[4:8], bits[8:12], bits[12:16])
        if is_symplectic(m, 2):
            found.append(m)
    return frozenset(found)


def closure_mod2(mats: tuple[Mat, ...]) -> frozenset[Mat]:
    """Subgroup of the mod-2 symplectic group generated by the matrices."""
    gens = [reduce_mod2(m) for m in mats]
    seen = {identity_matrix(4)}
    frontier = [identity_matrix(4)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = mat_mul(m, g, 2)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return frozenset(seen)


# -- quadratic forms refining the mod-2 pairing ----------------------------

Quad = tuple[int, ...]  # value on each of the 16 vectors, indexed by bits


def _vectors() -> list[Vec]:
    return [tuple((i >> k) & 1 for k in range(4)) for i in range(16)]


def _vec_index(v: Vec) -> int:
    return sum((v[k] & 1) << k for k in range(4))


@lru_cache(maxsize=None)
def quadratic_refinements() -> tuple[Quad, ...]:
    """All q: F_2^4 -> F_2 with q(u+v) = q(u) + q(v) + <u, v>."""
    vecs = _vectors()
    base = []
    for u in vecs:
        # q0 = x1 x3 + x2 x4 matches the pairing's symplectic pairs
        base.append((u[0] * u[2] + u[1] * u[3]) % 2)
    out = []
    for shift in vecs:
        q = tuple((base[i] + intersection(shift, vecs[i])) % 2
                  for i in range(16))
        out.append(q)
    return tuple(sorted(set(out)))


def arf_invariant(q: Quad) -> int:
    """q(e1)q(e3) + q(e2)q(e4), odd forms have value 1."""
    e = [_vec_index(tuple(int(i == j) for j in range(4))) for i in range(4)]
    return (q[e[0]] * q[e[2]] + q[e[1]] * q[e[3]]) % 2


def odd_refinements() -> tuple[Quad, ...]:
    return tuple(q for q in quadratic_refinements() if arf_invariant(q))


def act_on_quadratic(m: Mat, q: Quad) -> Quad:
    """Action (m.q)(u) = q(u m^-1), coordinates as row vectors.

    Works mod 2 throughout, so both integer matrices and their reductions
    are accepted.
    """
    phi = INTERSECTION_FORM
    minv = reduce_mod2(mat_mul(mat_mul(phi, mat_transpose(m)), phi))
    if mat_mul(reduce_mod2(m), minv, 2) != identity_matrix(4):
        raise ArithmeticError("matrix is not symplectic mod 2")
    vecs = _vectors()
    out = []
    for u in vecs:
        img = tuple(sum(u[i] * minv[i][j] for i in range(4)) % 2
                    for j in range(4))
        out.append(q[_vec_index(img)])
    return tuple(out)


@lru_cache(maxsize=None)
def distinguished_odd_form() -> Quad:
    """The unique odd refinement fixed by the four chain transvections."""
    gens = generators()
    fixed = [q for q in odd_refinements()
             if all(act_on_quadratic(gens[n], q) == q for n in "ABCD")]
    if len(fixed) != 1:
        raise ArithmeticError("chain stabiliser is not a point stabiliser")
    return fixed[0]


def in_marked_subgroup(m: Mat) -> bool:
    """Membership in the four-generator group, decided mod 2.

    The group contains the principal level-2 congruence subgroup, so it is
    the full preimage of its mod-2 image, which in turn is the stabiliser
    of the distinguished odd form.
    """
    if not is_symplectic(m):
        return False
    q = distinguished_odd_form()
    return act_on_quadratic(m, q) == q


def subgroup_index() -> int:
    """Index of the four-generator group: the orbit size of its form."""
    q = distinguished_odd_form()
    orbit = {act_on_quadratic(m, q) for m in symplectic_group_mod2()}
    return len(orbit)


COSET_WORDS = ("ABCDE", "BCDE", "CDE", "DE", "E", "")


def coset_representatives() -> dict[str, Mat]:
    """Words representing the six left cosets of the four-generator group.

    Two matrices m, m' share a left coset exactly when m^-1 m' stabilises
    the distinguished form, so the inverse action separates the cosets.
    """
    reps = {w: word(w) for w in COSET_WORDS}
    q = distinguished_odd_form()
    images = {w: act_on_quadratic(mat_inv(m), q) for w, m in reps.items()}
    if len(set(images.values())) != len(reps):
        raise ArithmeticError("coset words collide")
    return reps


def in_theta_group(m: Mat) -> bool:
    """Stabiliser of the even reference form: block products with even
    diagonals, the classical index-10 congruence condition.

    The condition only reads entries mod 2, so integer matrices and their
    reductions agree.
    """
    if not is_symplectic(m, 2):
        return False
    a = [row[:2] for row in m[:2]]
    b = [row[2:] for row in m[:2]]
    c = [row[:2] for row in m[2:]]
    d = [row[2:] for row in m[2:]]

    def diag_even(x, y):
        return all(sum(x[i][k] * y[i][k] for k in range(2)) % 2 == 0
                   for i in range(2))

    return diag_even(a, b) and diag_even(c, d)
