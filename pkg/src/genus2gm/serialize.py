"""JSON and LaTeX emission for polynomials, rational functions and matrices.

The JSON layout is the wire format for golden data and CLI output:

  polynomial  {"vars": [..], "weights": [..],
               "terms": [{"exp": [..], "num": "3", "den": "2"}, ..]}
  ratfunc     {"num": <polynomial>, "den": <polynomial>}
  matrix      {"rows": [[<ratfunc>, ..], ..]}

Terms are listed in descending graded-lex order and coefficients carry their
sign on num, so serialization is canonical: parse(dumps(x)) == x and
dumps(parse(s)) == s byte for byte.
"""

from __future__ import annotations

import json
import re
from typing import Any, Optional, Union

from .matrix import RFMatrix
from .mpoly import MPoly, VarTable
from .rationals import Rat, num_den, rat
from .ratfunc import RatFunc

Jsonable = Union[MPoly, RatFunc, RFMatrix]


# -- JSON ------------------------------------------------------------------

def poly_to_json(p: MPoly) -> dict[str, Any]:
    terms = []
    for exps, coeff in p.iter_terms():
        n, d = num_den(coeff)
        terms.append({"exp": list(exps), "num": str(n), "den": str(d)})
    return {"vars": list(p.ring.names),
            "weights": list(p.ring.weights),
            "terms": terms}


def poly_from_json(data: dict[str, Any],
                   ring: Optional[VarTable] = None) -> MPoly:
    names = tuple(data["vars"])
    weights = tuple(data["weights"])
    if ring is None:
        ring = VarTable(names, weights)
    elif ring.names != names or tuple(ring.weights) != weights:
        raise ValueError("variable table mismatch in serialized polynomial")
    items = [(t["exp"], rat(int(t["num"]), int(t["den"])))
             for t in data["terms"]]
    return MPoly.from_terms(ring, items)


def ratfunc_to_json(rf: RatFunc) -> dict[str, Any]:
    return {"num": poly_to_json(rf.num), "den": poly_to_json(rf.den)}


def ratfunc_from_json(data: dict[str, Any],
                      ring: Optional[VarTable] = None) -> RatFunc:
    num = poly_from_json(data["num"], ring)
    den = poly_from_json(data["den"], num.ring)
    return RatFunc(num, den)


def matrix_to_json(m: RFMatrix) -> dict[str, Any]:
    return {"rows": [[ratfunc_to_json(v) for v in row] for row in m.rows]}


def matrix_from_json(data: dict[str, Any],
                     ring: Optional[VarTable] = None) -> RFMatrix:
    rows = []
    for row in data["rows"]:
        out_row = []
        for entry in row:
            rf = ratfunc_from_json(entry, ring)
            ring = rf.ring
            out_row.append(rf)
        rows.append(out_row)
    if ring is None:
        raise ValueError("empty matrix has no variable table")
    return RFMatrix(ring, rows)


def to_json(obj: Jsonable) -> dict[str, Any]:
    if isinstance(obj, MPoly):
        return poly_to_json(obj)
    if isinstance(obj, RatFunc):
        return ratfunc_to_json(obj)
    if isinstance(obj, RFMatrix):
        return matrix_to_json(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_json(data: dict[str, Any],
              ring: Optional[VarTable] = None) -> Jsonable:
    if "rows" in data:
        return matrix_from_json(data, ring)
    if "num" in data and "den" in data and isinstance(data["num"], dict):
        return ratfunc_from_json(data, ring)
    if "terms" in data:
        return poly_from_json(data, ring)
    raise ValueError("unrecognized serialized object")


def canonical_dumps(data: Any) -> str:
    """Deterministic JSON text (keys in construction order, 2-space indent)."""
    return json.dumps(data, indent=2) + "\n"


# -- LaTeX -----------------------------------------------------------------

_GREEK = {"alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta",
          "theta", "iota", "kappa", "lambda", "mu", "nu", "xi", "pi", "rho",
          "sigma", "tau", "phi", "chi", "psi", "omega"}

_NAME_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


def latex_name(name: str) -> str:
    m = _NAME_RE.match(name)
    if m is None:
        return name
    head, digits = m.groups()
    if head.lower() in _GREEK:
        head = "\\" + head
    if not digits:
        return head
    if len(digits) == 1:
        return f"{head}_{digits}"
    return f"{head}_{{{digits}}}"


def latex_scalar(q: Rat) -> str:
    n, d = num_den(q)
    sign = "-" if n < 0 else ""
    n = abs(n)
    if d == 1:
        return f"{sign}{n}"
    return f"{sign}\\frac{{{n}}}{{{d}}}"


def _latex_monomial(ring: VarTable, exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(ring.names, exps):
        if e == 0:
            continue
        base = latex_name(name)
        if e == 1:
            parts.append(base)
        elif e < 10:
            parts.append(f"{base}^{e}")
        else:
            parts.append(f"{base}^{{{e}}}")
    return " ".join(parts)


def latex_poly(p: MPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for exps, coeff in p.iter_terms():
        mono = _latex_monomial(p.ring, exps)
        cs = latex_scalar(coeff)
        if mono:
            if cs == "1":
                term = mono
            elif cs == "-1":
                term = f"-{mono}"
            else:
                term = f"{cs} {mono}"
        else:
            term = cs
        if pieces:
            if term.startswith("-"):
                pieces.append(" - " + term[1:])
            else:
                pieces.append(" + " + term)
        else:
            pieces.append(term)
    return "".join(pieces)


def latex_ratfunc(rf: RatFunc) -> str:
    if rf.den.is_constant():
        # canonical form keeps a primitive positive denominator, so it is 1
        return latex_poly(rf.num)
    num = latex_poly(rf.num)
    den = latex_poly(rf.den)
    return f"\\frac{{{num}}}{{{den}}}"


def latex_matrix(m: RFMatrix) -> str:
    body = " \\\\\n".join(
        " & ".join(latex_ratfunc(v) for v in row) for row in m.rows)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def emit(obj: Jsonable, fmt: str = "json") -> str:
    if fmt == "json":
        return canonical_dumps(to_json(obj))
    if fmt == "latex":
        if isinstance(obj, MPoly):
            return latex_poly(obj)
        if isinstance(obj, RatFunc):
            return latex_ratfunc(obj)
        if isinstance(obj, RFMatrix):
            return latex_matrix(obj)
        raise TypeError(f"cannot emit {type(obj).__name__} as LaTeX")
    raise ValueError(f"unknown format {fmt!r}")
