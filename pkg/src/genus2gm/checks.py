"""The verification registry: every reproducible statement as one check.

A check compares freshly computed objects against frozen golden data or
verifies a structural property outright.  The protocol is deliberately
small: a check function receives a `CheckContext` and returns None on
success or a witness (polynomial, rational function, matrix, or plain
string) on failure.  A missing golden file raises `GoldenMissingError`,
which the runner converts into a skip; a malformed one fails the check.

Checks are registered in dependency order (ring algebra before the
connection, the connection before the vector fields, and so on) and the
runner preserves that order during execution.  Reports are sorted by
check id afterwards, so execution order never leaks into the output.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional, Union

from . import resnikoff
from .families import discriminant, discriminant_numerator
from .gaussmanin import (basis_conjugation, connection_inverse,
                         connection_matrix, cup_derivative_residual,
                         curvature, pole_order_is_one)
from .golden import GoldenMissingError, GoldenStore
from .igusa import discriminant_ratio, odd_square_relation, reference_generators
from .infinity import (cup_pairing, even_corrected_basis_residues,
                       even_residue, holomorphic_corrections)
from .matrix import RFMatrix
from .moduli import (at_period_point, catalog, catalog_entry,
                     det_scaling_residual, equal_mod_frame_relation,
                     factorization_residual, generic_parabolic,
                     gram_residual, matrix_at_period_point,
                     modular_pullback_residuals, parabolic_ring,
                     period_gram_residual, period_image_frame, period_ring,
                     redundancy_residuals, skew_block_residual,
                     unit_block_residual)
from .monodromy import (GENERATOR_NAMES, closure_mod2, generators,
                        identity_matrix, in_marked_subgroup, is_symplectic,
                        mat_inv, mat_mul, mat_neg, reduce_mod2, subgroup_index,
                        symplectic_group_mod2, word)
from .mpoly import MPoly, VarTable
from .rationals import num_den, rat
from .ratfunc import RatFunc
from .report import PASS, FAIL, SKIPPED, VerificationReport, sort_reports
from .rings import (T_NAMES, block, cup_matrix, frame_det, frame_matrix,
                    sigma_ring, symplectic_form, t_ring, ts_ring)
from .serialize import (canonical_dumps, from_json, matrix_from_json,
                        poly_from_json, ratfunc_from_json, to_json)
from .vector_fields import (defining_residual, direction_coefficients_sigma,
                            discriminant_logderivative,
                            discriminant_logderivative_sigma, euler_direction,
                            gamma_kernel_residuals, gamma_matrix,
                            j_shape_residual, jh_first_residual,
                            jh_second_residual, modular_field,
                            relation_tangency_factor, scalar_coefficients,
                            specialise_sigma, vanishes_on_frame_locus,
                            weight_component)

Witness = Union[None, str, MPoly, RatFunc, RFMatrix]


@dataclass(frozen=True)
class CheckContext:
    store: GoldenStore
    seed: int = 0
    prec: int = 18  # truncation order for the expansions at infinity


@dataclass(frozen=True)
class Check:
    check_id: str
    anchor: str
    fn: Callable[[CheckContext], Witness]
    uses_golden: bool = False


# -- small helpers -----------------------------------------------------------

def _diff(computed, expected) -> Witness:
    delta = computed - expected
    return None if delta.is_zero() else delta


def _first_nonzero(values) -> Witness:
    for value in values:
        if not value.is_zero():
            return value
    return None


def _random_poly(ring: VarTable, rng: random.Random, nonzero: bool = False) -> MPoly:
    n = len(ring.names)
    items = []
    for _ in range(rng.randint(1, 4)):
        exps = tuple(rng.randint(0, 2) for _ in range(n))
        items.append((exps, rat(rng.randint(-9, 9), rng.randint(1, 5))))
    p = MPoly.from_terms(ring, items)
    if nonzero and p.is_zero():
        return p + MPoly.const(ring, 1)
    return p


def _terms_from_json(data) -> resnikoff.Terms:
    out = []
    for entry in data:
        monomial = tuple((str(f), int(e)) for f, e in entry["monomial"])
        out.append((monomial, rat(int(entry["num"]), int(entry["den"]))))
    return tuple(out)


def terms_to_json(terms: resnikoff.Terms) -> list:
    out = []
    for monomial, coeff in terms:
        n, d = num_den(coeff)
        out.append({"monomial": [[f, e] for f, e in monomial],
                    "num": str(n), "den": str(d)})
    return out


# -- ring algebra ------------------------------------------------------------

def _check_canonical(ctx: CheckContext) -> Witness:
    ring = t_ring()
    rng = random.Random(ctx.seed)
    for _ in range(25):
        a = _random_poly(ring, rng)
        b = _random_poly(ring, rng, nonzero=True)
        c = _random_poly(ring, rng, nonzero=True)
        rf = RatFunc(a, b)
        if RatFunc(a * c, b * c) != rf:
            return "common factors change the canonical representative"
        again = RatFunc(rf.num, rf.den)
        if again.num != rf.num or again.den != rf.den:
            return "canonicalization is not idempotent"
        if rf.den.leading()[1] <= 0:
            return "denominator leading coefficient is not positive"
        if (rf - rf) != RatFunc.const(ring, 0):
            return "self-difference is not the canonical zero"
    return None


def _check_serialize(ctx: CheckContext) -> Witness:
    samples = [discriminant_numerator(),
               RatFunc.var(t_ring(), "t2") / RatFunc.var(t_ring(), "t5"),
               connection_matrix(2),
               frame_matrix(ts_ring())]
    for obj in samples:
        text = canonical_dumps(to_json(obj))
        back = from_json(json.loads(text))
        if back != obj:
            return f"round trip changed a {type(obj).__name__}"
        if canonical_dumps(to_json(back)) != text:
            return "re-serialization is not byte identical"
    return None


def _check_symplectic(ctx: CheckContext) -> Witness:
    ring = parabolic_ring()
    phi = symplectic_form(ring)
    if not (phi.transpose() + phi).is_zero():
        return "pairing form is not antisymmetric"
    if not (phi @ phi + RFMatrix.identity(ring, 4)).is_zero():
        return "pairing form does not square to minus one"
    g = generic_parabolic(ring)
    if not g.is_member():
        return "generic parabolic element fails the membership test"
    residual = g.symplectic_residual()
    if not residual.is_zero():
        return residual
    frame = ts_ring()
    return _first_nonzero([unit_block_residual(frame),
                           skew_block_residual(frame),
                           gram_residual(frame)])


# -- Gauss-Manin connection ---------------------------------------------------

def _check_gm_discriminant(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("gm.discriminant")
    expected = poly_from_json(payload["poly"], t_ring())
    scale = rat(int(payload["scaled_by"]))
    if scale * discriminant() != expected:
        return scale * discriminant() - expected
    return _diff(discriminant_numerator(), expected)


def _check_gm_inverse(m: int) -> Callable[[CheckContext], Witness]:
    def fn(ctx: CheckContext) -> Witness:
        payload = ctx.store.payload(f"gm.inverse_{m}")
        ring = t_ring()
        expected = matrix_from_json(payload["matrix"], ring)
        conj = basis_conjugation(ring)
        computed = conj @ connection_inverse(m) @ conj.inverse()
        return _diff(computed, expected)
    return fn


def _check_gm_symmetry(ctx: CheckContext) -> Witness:
    return _first_nonzero(cup_derivative_residual(m) for m in (2, 3, 4, 5))


def _check_gm_curvature(ctx: CheckContext) -> Witness:
    pairs = [(m, n) for m in (2, 3, 4, 5) for n in (2, 3, 4, 5) if m < n]
    return _first_nonzero(curvature(m, n) for m, n in pairs)


def _check_gm_pole_order(ctx: CheckContext) -> Witness:
    for m in (2, 3, 4, 5):
        if not pole_order_is_one(m):
            return f"direction t{m} has a pole of order above one"
    return None


# -- cup product ---------------------------------------------------------------

def _check_cup_pairing(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("cup.pairing")
    ring = t_ring()
    expected = matrix_from_json(payload["matrix"], ring)
    structural = _diff(cup_matrix(ring), expected)
    if structural is not None:
        return structural
    return _diff(cup_pairing(ctx.prec), expected)


def _check_cup_corrections(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("cup.corrections")
    ring = t_ring()
    computed = holomorphic_corrections(ctx.prec)
    for i in range(4):
        expected = {int(e): ratfunc_from_json(c, ring)
                    for e, c in payload[f"P{i}"]}
        if dict(computed[i].coeffs) != expected:
            return f"correction term P{i} disagrees with the stored expansion"
    return None


def _check_cup_residues(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("cup.residues")
    ring = even_residue(2, prec=ctx.prec).ring
    for key, i in (("quadratic", 2), ("cubic", 3), ("quartic", 4)):
        expected = ratfunc_from_json(payload[key], ring)
        delta = even_residue(i, prec=ctx.prec) - expected
        if not delta.is_zero():
            return delta
    return _first_nonzero(even_corrected_basis_residues(prec=ctx.prec))


# -- modular vector fields -----------------------------------------------------

def _check_vf_directions(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("vf.directions")
    ring = sigma_ring()
    computed = direction_coefficients_sigma()
    for m in (2, 3, 4, 5):
        expected = ratfunc_from_json(payload[f"t{m}"], ring)
        delta = computed[m] - expected
        if not delta.is_zero():
            return delta
    return None


def _check_vf_weights(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("vf.weights")
    ring = t_ring()
    for j in (2, 4, 6):
        expected = matrix_from_json(payload[f"sigma{j}"], ring)
        delta = weight_component(j) - expected
        if not delta.is_zero():
            return delta
    return None


def _check_vf_kernel(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("vf.kernel")
    ring = t_ring()
    right = [ratfunc_from_json(v, ring) for v in payload["right"]]
    left = [ratfunc_from_json(v, ring) for v in payload["left"]]
    gam = gamma_matrix(ring)
    euler = euler_direction(ring)
    for j, m in enumerate((2, 3, 4, 5)):
        if euler[m] != right[j]:
            return euler[m] - right[j]
    for i in range(4):
        total = sum((gam[i, j] * right[j] for j in range(4)),
                    RatFunc.const(ring, 0))
        if not total.is_zero():
            return total
    for j in range(4):
        total = sum((left[i] * gam[i, j] for i in range(4)),
                    RatFunc.const(ring, 0))
        if not total.is_zero():
            return total
    for side in gamma_kernel_residuals(ring).values():
        for value in side:
            if not value.is_zero():
                return value
    return None


def _check_vf_components(k: int) -> Callable[[CheckContext], Witness]:
    def fn(ctx: CheckContext) -> Witness:
        payload = ctx.store.payload(f"vf.components_{k}")
        ring = ts_ring()
        vf = modular_field(k)
        if set(payload["t"]) != {str(m) for m in vf.t_parts}:
            return "stored t-components cover the wrong directions"
        if set(payload["s"]) != set(vf.s_parts):
            return "stored s-components cover the wrong coordinates"
        for m, coeff in vf.t_parts.items():
            delta = coeff - ratfunc_from_json(payload["t"][str(m)], ring)
            if not delta.is_zero():
                return delta
        for name, coeff in vf.s_parts.items():
            delta = coeff - ratfunc_from_json(payload["s"][name], ring)
            if not delta.is_zero():
                return delta
        return None
    return fn


def _check_vf_scalars(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("vf.scalars")
    ring = ts_ring()
    for k in (1, 2, 3):
        computed = scalar_coefficients(k, ring)
        for name, value in computed.items():
            delta = value - ratfunc_from_json(payload[str(k)][name], ring)
            if not delta.is_zero():
                return delta
        shape = j_shape_residual(k, ring)
        if not shape.is_zero():
            return shape
    return None


def _check_vf_relation_derivative(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("vf.relation_derivative")
    ring = ts_ring()
    for k in (1, 2, 3):
        expected = ratfunc_from_json(payload[str(k)], ring)
        delta = relation_tangency_factor(k) - expected
        if not delta.is_zero():
            return delta
    return None


def _check_vf_discriminant_derivative(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("vf.discriminant_derivative")
    expected = ratfunc_from_json(payload["sigma"], sigma_ring())
    symbolic = discriminant_logderivative_sigma()
    delta = symbolic - expected
    if not delta.is_zero():
        return delta
    for k in (1, 2, 3):
        special = specialise_sigma(symbolic, k, ts_ring())
        delta = special - discriminant_logderivative(k)
        if not delta.is_zero():
            return delta
    return None


def _check_vf_tangency(ctx: CheckContext) -> Witness:
    for k in (1, 2, 3):
        if not vanishes_on_frame_locus(defining_residual(k)):
            return f"defining rule for field {k} fails on the frame locus"
    return None


def _check_vf_jh(ctx: CheckContext) -> Witness:
    for kc, k in product((1, 2, 3), repeat=2):
        second = jh_second_residual(kc, k)
        if not second.is_zero():
            return second
        if not vanishes_on_frame_locus(jh_first_residual(kc, k)):
            return f"first transport rule fails for pair ({kc}, {k})"
    return None


# -- moduli coordinate ring ----------------------------------------------------

def _check_moduli_catalog(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("moduli.catalog")
    entries = catalog()
    names = [e.name for e in entries]
    redundant = [e.name for e in entries if e.redundant]
    if names != list(payload["names"]):
        return "catalog enumeration order or content changed"
    if redundant != list(payload["redundant"]):
        return "redundant entries changed"
    independent = len(entries) - len(redundant)
    if independent != int(payload["independent"]):
        return f"catalog has {independent} independent functions"
    return None


def _check_moduli_redundancies(ctx: CheckContext) -> Witness:
    return _first_nonzero(redundancy_residuals(ts_ring()).values())


def _check_moduli_quadratic(ctx: CheckContext) -> Witness:
    ring = ts_ring()
    values = {name: catalog_entry(name).value(ring)
              for name in ("T12", "T16", "T20")}
    delta = values["T16"] ** 2 - values["T12"] * values["T20"]
    if delta.is_zero():
        return None
    if equal_mod_frame_relation(delta, RatFunc.const(ring, 0)):
        return None
    return delta


def _check_moduli_scaling(ctx: CheckContext) -> Witness:
    ring = parabolic_ring()
    residual = det_scaling_residual(ring)
    if not residual.is_zero():
        return residual
    g = generic_parabolic(ring)
    moved = g.act(frame_matrix(ring))
    new_delta = block(moved, 1, 1).det()
    detk = g.k.det()
    t = {n: RatFunc.var(ring, n) for n in T_NAMES}
    monomials = {1: t["t2"], 2: t["t4"], 3: t["t3"] ** 2,
                 4: t["t3"] * t["t5"], 5: t["t5"] ** 2}
    for i, mono in monomials.items():
        delta = mono / new_delta ** i - (mono / frame_det(ring) ** i) / detk ** i
        if not delta.is_zero():
            return delta
    return None


def _check_moduli_period_relations(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("moduli.period_relations")
    ring = period_ring()
    residual = period_gram_residual(ring)
    seen = set()
    for entry in payload["relations"]:
        i, j = int(entry["row"]), int(entry["col"])
        seen.add((i, j))
        expected = ratfunc_from_json(entry["value"], ring)
        delta = residual[i - 1, j - 1] - expected
        if not delta.is_zero():
            return delta
        solved = at_period_point(expected)
        if not solved.is_zero():
            return solved
    if seen != {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}:
        return "stored relations do not cover the six upper entries"
    return None


def _check_moduli_period_identity(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("moduli.period_identity")
    ring = period_ring()
    frame = period_image_frame(ring)
    delta = block(frame, 1, 1).det()
    d = (RatFunc.var(ring, "x31") * RatFunc.var(ring, "x42")
         - RatFunc.var(ring, "x32") * RatFunc.var(ring, "x41"))
    for i, mono_json in enumerate(payload["monomials"], start=1):
        mono = ratfunc_from_json(mono_json, ring)
        residual = mono / delta ** i - mono * d ** i
        if not residual.is_zero():
            return residual
    return _first_nonzero(modular_pullback_residuals(ring))


def _check_moduli_factorization(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("moduli.factorization")
    ring = period_ring()
    expected = matrix_from_json(payload["frame"], ring)
    delta = matrix_at_period_point(period_image_frame(ring) - expected)
    if not delta.is_zero():
        return delta
    solved = matrix_at_period_point(factorization_residual(ring))
    if not solved.is_zero():
        return solved
    return _diff(matrix_at_period_point(period_gram_residual(ring)),
                 RFMatrix.zero(ring, 4, 4))


# -- sextic invariants ---------------------------------------------------------

def _check_igusa_generators(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("igusa.generators")
    computed = reference_generators()
    for name in ("A", "B", "C", "D", "E"):
        expected = poly_from_json(payload[name], t_ring())
        delta = computed[name] - expected
        if not delta.is_zero():
            return delta
    return None


def _check_igusa_discriminant(ctx: CheckContext) -> Witness:
    delta = reference_generators()["D"] - discriminant()
    if not delta.is_zero():
        return delta
    if discriminant_ratio() != 1:
        return f"proportionality constant is {discriminant_ratio()}"
    return _diff(3125 * discriminant(), discriminant_numerator())


def _check_igusa_odd_square(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("igusa.odd_square")
    expected = {tuple(entry["exp"]): rat(int(entry["num"]), int(entry["den"]))
                for entry in payload["relation"]}
    computed = odd_square_relation()
    if computed != expected:
        return "odd generator square leaves the stored span"
    return None


# -- second-order identities -----------------------------------------------------

def _check_resnikoff_identity(name: str) -> Callable[[CheckContext], Witness]:
    check_id = f"resnikoff.{name.lower()}"

    def fn(ctx: CheckContext) -> Witness:
        payload = ctx.store.payload(check_id)
        terms = _terms_from_json(payload["terms"])
        for seed in (ctx.seed, ctx.seed + 1):
            value = resnikoff.point_residual_for_terms(name, terms, seed)
            if value != 0:
                return RatFunc.const(ts_ring(), value)
        residual = resnikoff.residual_for_terms(name, terms)
        if residual.is_zero():
            return None
        if equal_mod_frame_relation(residual, RatFunc.const(ts_ring(), 0)):
            return None
        return residual
    return fn


def _check_resnikoff_solved(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("resnikoff.solved")
    for name in resnikoff.HATTED_NAMES:
        stored = _terms_from_json(payload["constants"][name])
        if stored != resnikoff.IDENTITY_RHS[name]:
            return f"stored constants for {name} differ from the solved set"
        try:
            resnikoff.identity_status(name)
        except ArithmeticError:
            return resnikoff.identity_residual(name)
    return None


# -- monodromy -------------------------------------------------------------------

def _check_monodromy_generators(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("monodromy.generators")
    computed = generators()
    for name in GENERATOR_NAMES:
        expected = tuple(tuple(int(v) for v in row) for row in payload[name])
        if computed[name] != expected:
            return json.dumps({"generator": name,
                               "computed": computed[name]})
    return None


def _check_monodromy_relations(ctx: CheckContext) -> Witness:
    gens = generators()
    for name, g in gens.items():
        if not is_symplectic(g):
            return f"generator {name} does not preserve the intersection form"
    if word("(ABCD)^5") != mat_neg(identity_matrix(4)):
        return "five-fold twist product is not minus the identity"
    if word("E^2") != word("(ABC)^4"):
        return "boundary relation between E and (ABC)^4 fails"
    return None


def _check_monodromy_words(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("monodromy.words")
    for entry in payload["identities"]:
        lhs, rhs = entry["lhs"], entry["rhs"]
        if word(lhs) != word(rhs):
            return json.dumps({"lhs": lhs, "rhs": rhs})
    if len(payload["identities"]) != 4:
        return "expected exactly four stored word identities"
    return None


def _check_monodromy_index(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("monodromy.index")
    gens = generators()
    marked = closure_mod2(tuple(reduce_mod2(gens[n]) for n in "ABCD"))
    full = closure_mod2(tuple(reduce_mod2(gens[n]) for n in GENERATOR_NAMES))
    results = {"subgroup": len(marked), "group": len(full),
               "index": subgroup_index()}
    if len(full) != len(symplectic_group_mod2()):
        return "full closure is smaller than the symplectic group"
    if not all(in_marked_subgroup(m) for m in marked):
        return "marked closure leaves the stabilizer subgroup"
    for key in ("subgroup", "group", "index"):
        if results[key] != int(payload[key]):
            return json.dumps(results)
    return None


def _check_monodromy_cosets(ctx: CheckContext) -> Witness:
    payload = ctx.store.payload("monodromy.cosets")
    words = list(payload["words"])
    if len(words) != subgroup_index():
        return "stored coset list does not match the index"
    mats = [word(w) for w in words]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            shift = mat_mul(mat_inv(mats[i]), mats[j], mod=2)
            if in_marked_subgroup(shift):
                return json.dumps({"first": words[i], "second": words[j]})
    return None


# -- registry --------------------------------------------------------------------

def _register() -> tuple[Check, ...]:
    checks = [
        Check("algebra.canonical", "property:algebra/canonical-form",
              _check_canonical),
        Check("algebra.serialize", "property:algebra/serialization-roundtrip",
              _check_serialize),
        Check("algebra.symplectic", "property:algebra/symplectic-frames",
              _check_symplectic),
        Check("gm.discriminant", "reference:connection/discriminant",
              _check_gm_discriminant, uses_golden=True),
    ]
    for m in (2, 3, 4, 5):
        checks.append(Check(f"gm.inverse_{m}",
                            f"reference:connection/inverse-dt{m}",
                            _check_gm_inverse(m), uses_golden=True))
    checks += [
        Check("gm.symmetry", "property:connection/pairing-compatibility",
              _check_gm_symmetry),
        Check("gm.curvature", "property:connection/flatness",
              _check_gm_curvature),
        Check("gm.pole_order", "property:connection/pole-order",
              _check_gm_pole_order),
        Check("cup.pairing", "reference:pairing/matrix",
              _check_cup_pairing, uses_golden=True),
        Check("cup.corrections", "reference:pairing/corrections",
              _check_cup_corrections, uses_golden=True),
        Check("cup.residues", "reference:pairing/sextic-residues",
              _check_cup_residues, uses_golden=True),
        Check("vf.directions", "reference:fields/directions",
              _check_vf_directions, uses_golden=True),
        Check("vf.weights", "reference:fields/weight-matrices",
              _check_vf_weights, uses_golden=True),
        Check("vf.kernel", "reference:fields/kernel",
              _check_vf_kernel, uses_golden=True),
    ]
    for k in (1, 2, 3):
        checks.append(Check(f"vf.components_{k}",
                            f"reference:fields/components-{k}",
                            _check_vf_components(k), uses_golden=True))
    checks += [
        Check("vf.scalars", "reference:fields/scalars",
              _check_vf_scalars, uses_golden=True),
        Check("vf.relation_derivative", "reference:fields/relation-derivative",
              _check_vf_relation_derivative, uses_golden=True),
        Check("vf.discriminant_derivative",
              "reference:fields/discriminant-derivative",
              _check_vf_discriminant_derivative, uses_golden=True),
        Check("vf.tangency", "property:fields/tangency", _check_vf_tangency),
        Check("vf.jh", "property:fields/transport", _check_vf_jh),
        Check("moduli.catalog", "reference:moduli/catalog",
              _check_moduli_catalog, uses_golden=True),
        Check("moduli.redundancies", "property:moduli/redundancies",
              _check_moduli_redundancies),
        Check("moduli.quadratic", "property:moduli/quadratic-relation",
              _check_moduli_quadratic),
        Check("moduli.scaling", "property:moduli/group-scaling",
              _check_moduli_scaling),
        Check("moduli.period_relations", "reference:periods/relations",
              _check_moduli_period_relations, uses_golden=True),
        Check("moduli.period_identity", "reference:periods/pullback-identity",
              _check_moduli_period_identity, uses_golden=True),
        Check("moduli.factorization", "reference:periods/frame-factorization",
              _check_moduli_factorization, uses_golden=True),
        Check("igusa.generators", "reference:invariants/generators",
              _check_igusa_generators, uses_golden=True),
        Check("igusa.discriminant", "property:invariants/discriminant-match",
              _check_igusa_discriminant),
        Check("igusa.odd_square", "reference:invariants/odd-square",
              _check_igusa_odd_square, uses_golden=True),
    ]
    for name in resnikoff.HATTED_NAMES:
        checks.append(Check(f"resnikoff.{name.lower()}",
                            f"reference:identities/{name.lower()}",
                            _check_resnikoff_identity(name), uses_golden=True))
    checks += [
        Check("resnikoff.solved", "reference:identities/solved-constants",
              _check_resnikoff_solved, uses_golden=True),
        Check("monodromy.generators", "reference:monodromy/generators",
              _check_monodromy_generators, uses_golden=True),
        Check("monodromy.relations", "property:monodromy/relations",
              _check_monodromy_relations),
        Check("monodromy.words", "reference:monodromy/word-identities",
              _check_monodromy_words, uses_golden=True),
        Check("monodromy.index", "reference:monodromy/index",
              _check_monodromy_index, uses_golden=True),
        Check("monodromy.cosets", "reference:monodromy/cosets",
              _check_monodromy_cosets, uses_golden=True),
    ]
    ids = [c.check_id for c in checks]
    if len(ids) != len(set(ids)):
        raise ValueError("duplicate check ids in the registry")
    return tuple(checks)


_REGISTRY = _register()


def all_checks() -> tuple[Check, ...]:
    return _REGISTRY


def check_ids() -> list[str]:
    return [c.check_id for c in _REGISTRY]


def _witness_text(witness) -> str:
    if isinstance(witness, str):
        return witness
    if isinstance(witness, (MPoly, RatFunc, RFMatrix)):
        return canonical_dumps(to_json(witness))
    return json.dumps(witness)


def run_one(check: Check, ctx: CheckContext) -> VerificationReport:
    start = time.perf_counter()

    def elapsed() -> int:
        return int((time.perf_counter() - start) * 1000)

    try:
        witness = check.fn(ctx)
    except GoldenMissingError as exc:
        return VerificationReport(check.check_id, SKIPPED, elapsed(),
                                  check.anchor, note=str(exc))
    except (ValueError, KeyError, TypeError, ArithmeticError) as exc:
        return VerificationReport(check.check_id, FAIL, elapsed(),
                                  check.anchor,
                                  residual=f"{type(exc).__name__}: {exc}",
                                  note="check raised instead of returning")
    if witness is None:
        return VerificationReport(check.check_id, PASS, elapsed(), check.anchor)
    return VerificationReport(check.check_id, FAIL, elapsed(), check.anchor,
                              residual=_witness_text(witness))


def run_checks(store: Optional[GoldenStore] = None,
               only: Optional[str] = None,
               seed: int = 0) -> list[VerificationReport]:
    """Run the registry in dependency order; report sorted by check id."""
    ctx = CheckContext(store=store if store is not None else GoldenStore(),
                       seed=seed)
    selected = [c for c in _REGISTRY
                if only is None or c.check_id.startswith(only)]
    return sort_reports([run_one(c, ctx) for c in selected])
