"""Second-order differential operator built from the modular vector fields.

The three vector fields on the frame moduli combine into the
determinant-style operator

    second_order(f) = R1(R2(f)) - 1/4 R3(R3(f)),

acting on functions of the frame coordinates.  For a function of weight w
(graded degree 4w over the base) the weighted combination

    weighted_derivative(f, w) = (4w-1)/(4w^2) f second_order(f)
                                + (1-2w)/(8w^2) second_order(f^2)

is again of pure weight 2w + 2, and on the five modular generators it
closes into the generator algebra: the right-hand sides recorded in
`IDENTITY_RHS` hold exactly after restriction to the frame relation locus,
and every right-hand side except the weight-2 one carries the cusp
generator chi10 as a factor.

The generators themselves are the sextic invariants rescaled by powers of
the frame determinant (`hatted_forms`).  The constants in `IDENTITY_RHS`
were solved for exactly from the computed left-hand sides and then frozen;
`identity_status` re-derives each identity from scratch.  The answer is
independent of the composition order used in `second_order`: replacing
R1(R2(f)) by R2(R1(f)) or by their average changes nothing on the locus.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .families import discriminant_numerator
from .igusa import reference_generators
from .moduli import equal_mod_frame_relation, random_frame_point
from .ratfunc import RatFunc
from .rationals import Rat, rat
from .rings import frame_det, ts_ring
from .vector_fields import modular_field

HATTED_NAMES = ("E2", "E4", "E6", "chi10", "chi12")

# weight w; the graded degree over the base is 4w
FORM_WEIGHTS = {"E2": 2, "E4": 4, "E6": 6, "chi10": 10, "chi12": 12}

# right-hand sides: tuples of (monomial over HATTED_NAMES, coefficient)
IDENTITY_RHS = {
    "E2": (((("E2", 3),), rat(1, 256)),
           ((("E2", 1), ("E4", 1)), rat(1, 16)),
           ((("E6", 1),), rat(-1, 8))),
    "E4": (((("chi10", 1),), rat(984375, 1024)),),
    "E6": (((("E4", 1), ("chi10", 1)), rat(2165625, 64)),),
    "chi10": (((("chi10", 1), ("chi12", 1)), rat(-3, 6400)),),
    "chi12": (((("E6", 1), ("chi10", 2)), rat(-23, 864)),
              ((("E4", 1), ("chi10", 1), ("chi12", 1)), rat(37, 1728))),
}


@lru_cache(maxsize=None)
def hatted_forms() -> dict[str, RatFunc]:
    """The five modular generators as functions of the frame coordinates.

    Sextic invariants over powers of the frame determinant; the power is
    half the graded degree of the numerator, making each form weight w
    with degree 4w.
    """
    ring = ts_ring()
    inv = {n: RatFunc.from_poly(p.map_ring(ring))
           for n, p in reference_generators().items()}
    delta = frame_det(ring)
    return {
        "E2": inv["A"] / delta ** 2,
        "E4": inv["B"] / delta ** 4,
        "E6": (4 * inv["A"] * inv["B"] - 3 * inv["C"]) / delta ** 6,
        "chi10": inv["D"] / delta ** 10,
        "chi12": (inv["A"] * inv["D"]) / delta ** 12,
    }


def second_order(f: RatFunc) -> RatFunc:
    """R1(R2(f)) - 1/4 R3(R3(f)), the composed-derivation determinant."""
    r1, r2, r3 = (modular_field(k) for k in (1, 2, 3))
    return r1.apply(r2.apply(f)) - rat(1, 4) * r3.apply(r3.apply(f))


def weighted_derivative(f: RatFunc, weight: int) -> RatFunc:
    """The weight-adapted second-order derivative of a graded function."""
    w = weight
    return (rat(4 * w - 1, 4 * w * w) * f * second_order(f)
            + rat(1 - 2 * w, 8 * w * w) * second_order(f * f))


Terms = tuple[tuple[tuple[tuple[str, int], ...], Rat], ...]


@lru_cache(maxsize=None)
def lhs_value(name: str) -> RatFunc:
    """Weight-adapted derivative of the named generator; the expensive side."""
    return weighted_derivative(hatted_forms()[name], FORM_WEIGHTS[name])


def rhs_from_terms(terms: Terms) -> RatFunc:
    """Assemble a right-hand side from (monomial, coefficient) pairs."""
    forms = hatted_forms()
    total = RatFunc.const(ts_ring(), 0)
    for monomial, coeff in terms:
        term = RatFunc.const(ts_ring(), coeff)
        for factor, exp in monomial:
            term = term * forms[factor] ** exp
        total = total + term
    return total


def rhs_value(name: str) -> RatFunc:
    """Right-hand side of the identity for the named generator."""
    return rhs_from_terms(IDENTITY_RHS[name])


@lru_cache(maxsize=None)
def identity_residual(name: str) -> RatFunc:
    """Left minus right side of the identity, in the ambient ring."""
    return lhs_value(name) - rhs_value(name)


def residual_for_terms(name: str, terms: Terms) -> RatFunc:
    """Residual of the identity with an alternative right-hand side."""
    return lhs_value(name) - rhs_from_terms(terms)


def point_residual_for_terms(name: str, terms: Terms, seed: int = 0) -> Rat:
    """Residual at a random frame point without the symbolic subtraction.

    Both sides are evaluated separately, so a disagreement surfaces in
    milliseconds once the left-hand side is built.
    """
    point = random_frame_point(random.Random(seed))
    return lhs_value(name).eval(point) - rhs_from_terms(terms).eval(point)


def residual_at_point(name: str, seed: int = 0) -> Rat:
    """The residual evaluated at a random frame point: a fast pre-check.

    Zero for every seed when the identity holds; a nonzero value is a
    certificate that it fails.
    """
    return point_residual_for_terms(name, IDENTITY_RHS[name], seed)


@lru_cache(maxsize=None)
def identity_status(name: str) -> str:
    """'exact' if the identity holds in the ambient ring, 'on-locus' if it
    needs the frame relation; raises if it fails outright."""
    residual = identity_residual(name)
    if residual.is_zero():
        return "exact"
    if equal_mod_frame_relation(residual, RatFunc.const(ts_ring(), 0)):
        return "on-locus"
    raise ArithmeticError(f"identity for {name} fails")


def is_cusp_form(name: str) -> bool:
    """Divisibility of the numerator by the curve discriminant.

    The proxy for vanishing at the boundary: chi10 and chi12 carry the
    discriminant as a factor, the Eisenstein-type generators do not.
    """
    disc = discriminant_numerator().map_ring(ts_ring())
    return disc.divides(hatted_forms()[name].num)


def is_cusp_type(name: str) -> bool:
    """Whether every right-hand-side monomial carries the cusp generator."""
    return all(any(factor == "chi10" for factor, _ in monomial)
               for monomial, _ in IDENTITY_RHS[name])
