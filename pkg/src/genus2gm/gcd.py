"""Multivariate polynomial gcd by iterated univariate primitive PRS.

The classical content / primitive-part recursion: pick a variable common to
both inputs, take gcds of the coefficient vectors for the content, run a
primitive pseudo-remainder sequence for the primitive part, recurse for the
coefficient gcds.  Exact and dependable on the small operands this package
feeds it; the large rational-function normalizations are routed around it via
registered-factor stripping (see ratfunc.py).
"""

from __future__ import annotations

from functools import reduce

from .mpoly import MPoly
from .rationals import ONE, ZERO, rat_gcd


def poly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Primitive gcd with positive leading coefficient (1 for coprime inputs).

    Rational contents are units of Q[x] and are ignored; callers that care
    about contents normalize separately.
    """
    if a.ring != b.ring:
        raise ValueError("gcd of polynomials over different tables")
    if a.is_zero():
        return b.primitive_part()
    if b.is_zero():
        return a.primitive_part()
    ring = a.ring
    mono_a = a.min_exponents()
    mono_b = b.min_exponents()
    common = ring.pack([min(x, y) for x, y in
                        zip(ring.unpack(mono_a), ring.unpack(mono_b))])
    f = a.shift_down(mono_a).primitive_part()
    g = b.shift_down(mono_b).primitive_part()
    core = _gcd_primitive(f, g)
    if common:
        core = core * MPoly(ring, {common: ONE})
    return core


def _gcd_primitive(f: MPoly, g: MPoly) -> MPoly:
    """gcd of monomial-content-free primitive polynomials."""
    if f.is_constant() or g.is_constant():
        return MPoly.const(f.ring, 1)
    if f.terms == g.terms:
        return f
    vf = set(f.variables())
    vg = set(g.variables())
    shared = vf & vg
    if not shared:
        return MPoly.const(f.ring, 1)
    # cheap exact-division shortcuts catch the frequent nested cases
    if len(f.terms) >= len(g.terms) and f.try_div(g) is not None:
        return g.primitive_part()
    if len(g.terms) > len(f.terms) and g.try_div(f) is not None:
        return f.primitive_part()
    var = min(shared, key=lambda v: min(f.degree_in(v), g.degree_in(v)))
    cf, pf = _univariate_split(f, var)
    cg, pg = _univariate_split(g, var)
    cont = poly_gcd(cf, cg)
    core = _prs_gcd(pf, pg, var)
    return (cont * core).primitive_part()


def _univariate_split(p: MPoly, var: str) -> tuple[MPoly, list[MPoly]]:
    """Content and dense primitive coefficient list of p viewed in Q[...][var]."""
    buckets = p.coeffs_in(var)
    cont = reduce(poly_gcd, buckets.values())
    coeffs = [MPoly.zero(p.ring)] * (max(buckets) + 1)
    for e, c in buckets.items():
        coeffs[e] = c.exact_div(cont)
    return cont, coeffs


def _prs_gcd(fc: list[MPoly], gc: list[MPoly], var: str) -> MPoly:
    """Primitive PRS gcd of two primitive dense univariate polynomials."""
    if len(fc) < len(gc):
        fc, gc = gc, fc
    while True:
        rem = _pseudo_rem(fc, gc)
        if not rem:
            return _assemble(gc, var)
        if len(rem) == 1:
            return MPoly.const(rem[0].ring, 1)
        fc, gc = gc, _make_primitive(rem)


def _pseudo_rem(fc: list[MPoly], gc: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder of dense coefficient lists (leading entries nonzero)."""
    rem = list(fc)
    lead_g = gc[-1]
    deg_g = len(gc) - 1
    while len(rem) - 1 >= deg_g:
        lead_r = rem[-1]
        shift = len(rem) - 1 - deg_g
        rem = [c * lead_g for c in rem[:-1]]
        for i, c in enumerate(gc[:-1]):
            rem[shift + i] = rem[shift + i] - lead_r * c
        while rem and rem[-1].is_zero():
            rem.pop()
        if not rem:
            break
    return rem


def _make_primitive(coeffs: list[MPoly]) -> list[MPoly]:
    """Strip the polynomial content and the joint rational content.

    Coefficient growth control for the PRS: without this the pseudo-remainder
    contents explode exponentially.
    """
    cont = reduce(poly_gcd, (c for c in coeffs if not c.is_zero()))
    if not cont.is_constant():
        coeffs = [c if c.is_zero() else c.exact_div(cont) for c in coeffs]
    rc = ZERO
    for c in coeffs:
        for v in c.terms.values():
            rc = rat_gcd(rc, v) if rc else abs(v)
        if rc == 1:
            break
    if rc and rc != 1:
        coeffs = [c / rc for c in coeffs]
    return coeffs


def _assemble(coeffs: list[MPoly], var: str) -> MPoly:
    ring = coeffs[0].ring
    x = MPoly.var(ring, var)
    total = MPoly.zero(ring)
    for e in range(len(coeffs) - 1, -1, -1):
        total = total * x + coeffs[e]
    return total.primitive_part()
