"""Driver: full component-by-component check of the printed vector fields."""

import re
import time

from genus2gm.mpoly import MPoly
from genus2gm.parsing import parse_poly
from genus2gm.ratfunc import RatFunc
from genus2gm.rings import ts_ring
from genus2gm.vector_fields import modular_field

T0 = time.time()
RING = ts_ring()


def tex2expr(src: str) -> str:
    """Turn a LaTeX fragment into parser syntax (explicit * and plain names)."""
    s = re.sub(r"[\s&\\]+", "", src)
    s = s.replace("_{", "").replace("_", "").replace("{", "").replace("}", "")
    tokens = []
    i = 0
    while i < len(s):
        c = s[i]
        if c in "+-/()":
            tokens.append(c)
            i += 1
        elif c == "^":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            tokens.append(s[i:j])
            i = j
        elif c == "t":
            tokens.append(s[i:i + 2])
            i += 2
        elif c == "s":
            tokens.append(s[i:i + 3])
            i += 3
        elif c.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            tokens.append(s[i:j])
            i = j
        else:
            raise ValueError(f"unexpected {c!r} in fragment")
    out = ""
    for k, tok in enumerate(tokens):
        out += tok
        if k + 1 < len(tokens):
            b = tokens[k + 1]
            starts = b[0].isdigit() or b[0] in "ts" or b == "("
            ends = tok[0].isdigit() or tok[0] in "ts" or tok[0] == "^" or tok == ")"
            if starts and ends:
                out += "*"
    return out


def component(num_tex: str, den_coeff: int, delta_pow: int) -> RatFunc:
    num = parse_poly(RING, tex2expr(num_tex))
    delta = parse_poly(RING, "s11*s22-s12*s21")
    den = MPoly.const(RING, den_coeff) * parse_poly(RING, "t5") * delta ** delta_pow
    return RatFunc(num, den)


# numerators verbatim; denominators recorded as (coefficient, delta power)
FIELDS = {
    1: {
        "t2": ("""4t_2^2t_4s_{21}^2+30t_2^2t_5s_{21}s_{22}-6t_2t_3t_4s_{21}s_{22}-20t_2t_3t_5s_{22}^2+8t_2t_4^2s_{22}^2+75t_3t_5s_{21}^2
                  -100t_4t_5s_{21}s_{22}+125t_5^2s_{22}^2""", 50, 2),
        "t3": ("""-30t_2^2t_5s_{21}^2+6t_2t_3t_4s_{21}^2+65t_2t_3t_5s_{21}s_{22}-10t_2t_4t_5s_{22}^2-9t_3^2t_4s_{21}s_{22}
                  -30t_3^2t_5s_{22}^2+12t_3t_4^2s_{22}^2+100t_4t_5s_{21}^2-125t_5^2s_{21}s_{22}""", 50, 2),
        "t4": ("""-20t_2t_3t_5s_{21}^2+8t_2t_4^2s_{21}^2+10t_2t_4t_5s_{21}s_{22}+75t_2t_5^2s_{22}^2+30t_3^2t_5s_{21}s_{22}
                  -12t_3t_4^2s_{21}s_{22}-55t_3t_4t_5s_{22}^2+16t_4^3s_{22}^2+125t_5^2s_{21}^2""", 50, 2),
        "s11": ("""6t_2t_4s_{11}s_{21}^2+20t_2t_5s_{11}s_{21}s_{22}-20t_2t_5s_{12}s_{21}^2-9t_3t_4s_{11}s_{21}s_{22}-30t_3t_5s_{11}s_{22}^2
                   +30t_3t_5s_{12}s_{21}s_{22}+12t_4^2s_{11}s_{22}^2-15t_4t_5s_{12}s_{22}^2+100t_5s_{11}^2s_{22}^2s_{31}
                   -200t_5s_{11}s_{12}s_{21}s_{22}s_{31}+100t_5s_{12}^2s_{21}^2s_{31}""", 100, 2),
        "s12": ("""2t_2t_4s_{12}s_{21}^2-25t_2t_5s_{11}s_{22}^2+40t_2t_5s_{12}s_{21}s_{22}-3t_3t_4s_{12}s_{21}s_{22}-10t_3t_5s_{12}s_{22}^2
                   +4t_4^2s_{12}s_{22}^2+100t_5s_{11}^2s_{22}^2s_{32}-200t_5s_{11}s_{12}s_{21}s_{22}s_{32}+25t_5s_{11}s_{21}^2
                   +100t_5s_{12}^2s_{21}^2s_{32}""", 100, 2),
        "s21": ("6t_2t_4s_{21}^3-9t_3t_4s_{21}^2s_{22}+12t_4^2s_{21}s_{22}^2-15t_4t_5s_{22}^3", 100, 2),
        "s22": ("""2t_2t_4s_{21}^2s_{22}+15t_2t_5s_{21}s_{22}^2-3t_3t_4s_{21}s_{22}^2-10t_3t_5s_{22}^3+4t_4^2s_{22}^3
                   +25t_5s_{21}^3""", 100, 2),
        "s31": ("""6t_2t_4s_{11}s_{21}^2s_{22}s_{31}-6t_2t_4s_{12}s_{21}^3s_{31}-20t_2t_5s_{11}s_{21}^2s_{22}s_{32}+20t_2t_5s_{11}s_{21}s_{22}^2s_{31}
                   +20t_2t_5s_{12}s_{21}^3s_{32}-20t_2t_5s_{12}s_{21}^2s_{22}s_{31}-9t_3t_4s_{11}s_{21}s_{22}^2s_{31}+9t_3t_4s_{12}s_{21}^2s_{22}s_{31}
                   +30t_3t_5s_{11}s_{21}s_{22}^2s_{32}-30t_3t_5s_{11}s_{22}^3s_{31}-30t_3t_5s_{12}s_{21}^2s_{22}s_{32}+30t_3t_5s_{12}s_{21}s_{22}^2s_{31}
                   +12t_4^2s_{11}s_{22}^3s_{31}-12t_4^2s_{12}s_{21}s_{22}^2s_{31}-15t_4t_5s_{11}s_{22}^3s_{32}+15t_4t_5s_{12}s_{21}s_{22}^2s_{32}
                   +25t_4t_5s_{21}^2s_{22}-50t_5^2s_{21}s_{22}^2""", 100, 3),
        "s32": ("""2t_2t_4s_{11}s_{21}^2s_{22}s_{32}-2t_2t_4s_{12}s_{21}^3s_{32}+40t_2t_5s_{11}s_{21}s_{22}^2s_{32}-25t_2t_5s_{11}s_{22}^3s_{31}
                   -40t_2t_5s_{12}s_{21}^2s_{22}s_{32}+25t_2t_5s_{12}s_{21}s_{22}^2s_{31}+10t_2t_5s_{21}^3-3t_3t_4s_{11}s_{21}s_{22}^2s_{32}
                   +3t_3t_4s_{12}s_{21}^2s_{22}s_{32}-10t_3t_5s_{11}s_{22}^3s_{32}+10t_3t_5s_{12}s_{21}s_{22}^2s_{32}+35t_3t_5s_{21}^2s_{22}
                   +4t_4^2s_{11}s_{22}^3s_{32}-4t_4^2s_{12}s_{21}s_{22}^2s_{32}-55t_4t_5s_{21}s_{22}^2+75t_5^2s_{22}^3+25t_5s_{11}s_{21}^2s_{22}s_{31}
                   -25t_5s_{12}s_{21}^3s_{31}""", 100, 3),
        "s41": ("""24t_2t_4s_{11}s_{21}^2s_{22}s_{41}-24t_2t_4s_{12}s_{21}^3s_{41}-80t_2t_5s_{11}s_{21}^2s_{22}s_{42}+80t_2t_5s_{11}s_{21}s_{22}^2s_{41}
                   +80t_2t_5s_{12}s_{21}^3s_{42}-80t_2t_5s_{12}s_{21}^2s_{22}s_{41}-36t_3t_4s_{11}s_{21}s_{22}^2s_{41}+36t_3t_4s_{12}s_{21}^2s_{22}s_{41}
                   +120t_3t_5s_{11}s_{21}s_{22}^2s_{42}-120t_3t_5s_{11}s_{22}^3s_{41}-120t_3t_5s_{12}s_{21}^2s_{22}s_{42}+120t_3t_5s_{12}s_{21}s_{22}^2s_{41}
                   +48t_4^2s_{11}s_{22}^3s_{41}-48t_4^2s_{12}s_{21}s_{22}^2s_{41}-25t_4t_5s_{11}s_{21}s_{22}-60t_4t_5s_{11}s_{22}^3s_{42}-75t_4t_5s_{12}s_{21}^2
                   +60t_4t_5s_{12}s_{21}s_{22}^2s_{42}+50t_5^2s_{11}s_{22}^2+150t_5^2s_{12}s_{21}s_{22}""", 400, 3),
        "s42": ("""8t_2t_4s_{11}s_{21}^2s_{22}s_{42}-8t_2t_4s_{12}s_{21}^3s_{42}-40t_2t_5s_{11}s_{21}^2+160t_2t_5s_{11}s_{21}s_{22}^2s_{42}
                   -100t_2t_5s_{11}s_{22}^3s_{41}-160t_2t_5s_{12}s_{21}^2s_{22}s_{42}+100t_2t_5s_{12}s_{21}s_{22}^2s_{41}-12t_3t_4s_{11}s_{21}s_{22}^2s_{42}
                   +12t_3t_4s_{12}s_{21}^2s_{22}s_{42}+10t_3t_5s_{11}s_{21}s_{22}-40t_3t_5s_{11}s_{22}^3s_{42}-150t_3t_5s_{12}s_{21}^2
                   +40t_3t_5s_{12}s_{21}s_{22}^2s_{42}+16t_4^2s_{11}s_{22}^3s_{42}-16t_4^2s_{12}s_{21}s_{22}^2s_{42}-5t_4t_5s_{11}s_{22}^2+225t_4t_5s_{12}s_{21}s_{22}
                   -300t_5^2s_{12}s_{22}^2+100t_5s_{11}s_{21}^2s_{22}s_{41}-100t_5s_{12}s_{21}^3s_{41}""", 400, 3),
    },
    2: {
        "t2": ("""4t_2^2t_4s_{11}^2+30t_2^2t_5s_{11}s_{12}-6t_2t_3t_4s_{11}s_{12}-20t_2t_3t_5s_{12}^2+8t_2t_4^2s_{12}^2+75t_3t_5s_{11}^2
                  -100t_4t_5s_{11}s_{12}+125t_5^2s_{12}^2""", 50, 2),
        "t3": ("""-30t_2^2t_5s_{11}^2+6t_2t_3t_4s_{11}^2+65t_2t_3t_5s_{11}s_{12}-10t_2t_4t_5s_{12}^2-9t_3^2t_4s_{11}s_{12}-30t_3^2t_5s_{12}^2
                  +12t_3t_4^2s_{12}^2+100t_4t_5s_{11}^2-125t_5^2s_{11}s_{12}""", 50, 2),
        "t4": ("""-20t_2t_3t_5s_{11}^2+8t_2t_4^2s_{11}^2+10t_2t_4t_5s_{11}s_{12}+75t_2t_5^2s_{12}^2+30t_3^2t_5s_{11}s_{12}-12t_3t_4^2s_{11}s_{12}
                  -55t_3t_4t_5s_{12}^2+16t_4^3s_{12}^2+125t_5^2s_{11}^2""", 50, 2),
        "s11": ("6t_2t_4s_{11}^3-9t_3t_4s_{11}^2s_{12}+12t_4^2s_{11}s_{12}^2-15t_4t_5s_{12}^3", 100, 2),
        "s12": ("""2t_2t_4s_{11}^2s_{12}+15t_2t_5s_{11}s_{12}^2-3t_3t_4s_{11}s_{12}^2-10t_3t_5s_{12}^3+4t_4^2s_{12}^3
                   +25t_5s_{11}^3""", 100, 2),
        "s21": ("""6t_2t_4s_{11}^2s_{21}-20t_2t_5s_{11}^2s_{22}+20t_2t_5s_{11}s_{12}s_{21}-9t_3t_4s_{11}s_{12}s_{21}+30t_3t_5s_{11}s_{12}s_{22}
                   -30t_3t_5s_{12}^2s_{21}+12t_4^2s_{12}^2s_{21}-15t_4t_5s_{12}^2s_{22}+100t_5s_{11}^2s_{22}^2s_{41}-200t_5s_{11}s_{12}s_{21}s_{22}s_{41}
                   +100t_5s_{12}^2s_{21}^2s_{41}""", 100, 2),
        "s22": ("""2t_2t_4s_{11}^2s_{22}+40t_2t_5s_{11}s_{12}s_{22}-25t_2t_5s_{12}^2s_{21}-3t_3t_4s_{11}s_{12}s_{22}-10t_3t_5s_{12}^2s_{22}
                   +4t_4^2s_{12}^2s_{22}+25t_5s_{11}^2s_{21}+100t_5s_{11}^2s_{22}^2s_{42}-200t_5s_{11}s_{12}s_{21}s_{22}s_{42}+100t_5s_{12}^2s_{21}^2s_{42}""", 100, 2),
        "s31": ("""24t_2t_4s_{11}^3s_{22}s_{31}-24t_2t_4s_{11}^2s_{12}s_{21}s_{31}-80t_2t_5s_{11}^3s_{22}s_{32}+80t_2t_5s_{11}^2s_{12}s_{21}s_{32}
                   +80t_2t_5s_{11}^2s_{12}s_{22}s_{31}-80t_2t_5s_{11}s_{12}^2s_{21}s_{31}-36t_3t_4s_{11}^2s_{12}s_{22}s_{31}+36t_3t_4s_{11}s_{12}^2s_{21}s_{31}
                   +120t_3t_5s_{11}^2s_{12}s_{22}s_{32}-120t_3t_5s_{11}s_{12}^2s_{21}s_{32}-120t_3t_5s_{11}s_{12}^2s_{22}s_{31}+120t_3t_5s_{12}^3s_{21}s_{31}
                   +48t_4^2s_{11}s_{12}^2s_{22}s_{31}-48t_4^2s_{12}^3s_{21}s_{31}+75t_4t_5s_{11}^2s_{22}-60t_4t_5s_{11}s_{12}^2s_{22}s_{32}+25t_4t_5s_{11}s_{12}s_{21}
                   +60t_4t_5s_{12}^3s_{21}s_{32}-150t_5^2s_{11}s_{12}s_{22}-50t_5^2s_{12}^2s_{21}""", 400, 3),
        "s32": ("""8t_2t_4s_{11}^3s_{22}s_{32}-8t_2t_4s_{11}^2s_{12}s_{21}s_{32}+160t_2t_5s_{11}^2s_{12}s_{22}s_{32}+40t_2t_5s_{11}^2s_{21}
                   -160t_2t_5s_{11}s_{12}^2s_{21}s_{32}-100t_2t_5s_{11}s_{12}^2s_{22}s_{31}+100t_2t_5s_{12}^3s_{21}s_{31}-12t_3t_4s_{11}^2s_{12}s_{22}s_{32}
                   +12t_3t_4s_{11}s_{12}^2s_{21}s_{32}+150t_3t_5s_{11}^2s_{22}-40t_3t_5s_{11}s_{12}^2s_{22}s_{32}-10t_3t_5s_{11}s_{12}s_{21}+40t_3t_5s_{12}^3s_{21}s_{32}
                   +16t_4^2s_{11}s_{12}^2s_{22}s_{32}-16t_4^2s_{12}^3s_{21}s_{32}-225t_4t_5s_{11}s_{12}s_{22}+5t_4t_5s_{12}^2s_{21}+300t_5^2s_{12}^2s_{22}
                   +100t_5s_{11}^3s_{22}s_{31}-100t_5s_{11}^2s_{12}s_{21}s_{31}""", 400, 3),
        "s41": ("""6t_2t_4s_{11}^3s_{22}s_{41}-6t_2t_4s_{11}^2s_{12}s_{21}s_{41}-20t_2t_5s_{11}^3s_{22}s_{42}+20t_2t_5s_{11}^2s_{12}s_{21}s_{42}
                   +20t_2t_5s_{11}^2s_{12}s_{22}s_{41}-20t_2t_5s_{11}s_{12}^2s_{21}s_{41}-9t_3t_4s_{11}^2s_{12}s_{22}s_{41}+9t_3t_4s_{11}s_{12}^2s_{21}s_{41}
                   +30t_3t_5s_{11}^2s_{12}s_{22}s_{42}-30t_3t_5s_{11}s_{12}^2s_{21}s_{42}-30t_3t_5s_{11}s_{12}^2s_{22}s_{41}+30t_3t_5s_{12}^3s_{21}s_{41}
                   +12t_4^2s_{11}s_{12}^2s_{22}s_{41}-12t_4^2s_{12}^3s_{21}s_{41}-25t_4t_5s_{11}^2s_{12}-15t_4t_5s_{11}s_{12}^2s_{22}s_{42}+15t_4t_5s_{12}^3s_{21}s_{42}
                   +50t_5^2s_{11}s_{12}^2""", 100, 3),
        "s42": ("""2t_2t_4s_{11}^3s_{22}s_{42}-2t_2t_4s_{11}^2s_{12}s_{21}s_{42}-10t_2t_5s_{11}^3+40t_2t_5s_{11}^2s_{12}s_{22}s_{42}-40t_2t_5s_{11}s_{12}^2s_{21}s_{42}
                   -25t_2t_5s_{11}s_{12}^2s_{22}s_{41}+25t_2t_5s_{12}^3s_{21}s_{41}-3t_3t_4s_{11}^2s_{12}s_{22}s_{42}+3t_3t_4s_{11}s_{12}^2s_{21}s_{42}-35t_3t_5s_{11}^2s_{12}
                   -10t_3t_5s_{11}s_{12}^2s_{22}s_{42}+10t_3t_5s_{12}^3s_{21}s_{42}+4t_4^2s_{11}s_{12}^2s_{22}s_{42}-4t_4^2s_{12}^3s_{21}s_{42}+55t_4t_5s_{11}s_{12}^2
                   -75t_5^2s_{12}^3+25t_5s_{11}^3s_{22}s_{41}-25t_5s_{11}^2s_{12}s_{21}s_{41}""", 100, 3),
    },
    3: {
        "t2": ("""-4t_2^2t_4s_{11}s_{21}-15t_2^2t_5s_{11}s_{22}-15t_2^2t_5s_{12}s_{21}+3t_2t_3t_4s_{11}s_{22}+3t_2t_3t_4s_{12}s_{21}
                  +20t_2t_3t_5s_{12}s_{22}-8t_2t_4^2s_{12}s_{22}-75t_3t_5s_{11}s_{21}+50t_4t_5s_{11}s_{22}+50t_4t_5s_{12}s_{21}
                  -125t_5^2s_{12}s_{22}""", 25, 2),
        "t3": ("""60t_2^2t_5s_{11}s_{21}-12t_2t_3t_4s_{11}s_{21}-65t_2t_3t_5s_{11}s_{22}-65t_2t_3t_5s_{12}s_{21}+20t_2t_4t_5s_{12}s_{22}
                  +9t_3^2t_4s_{11}s_{22}+9t_3^2t_4s_{12}s_{21}+60t_3^2t_5s_{12}s_{22}-24t_3t_4^2s_{12}s_{22}-200t_4t_5s_{11}s_{21}+125t_5^2s_{11}s_{22}
                  +125t_5^2s_{12}s_{21}""", 50, 2),
        "t4": ("""20t_2t_3t_5s_{11}s_{21}-8t_2t_4^2s_{11}s_{21}-5t_2t_4t_5s_{11}s_{22}-5t_2t_4t_5s_{12}s_{21}-75t_2t_5^2s_{12}s_{22}
                  -15t_3^2t_5s_{11}s_{22}-15t_3^2t_5s_{12}s_{21}+6t_3t_4^2s_{11}s_{22}+6t_3t_4^2s_{12}s_{21}+55t_3t_4t_5s_{12}s_{22}-16t_4^3s_{12}s_{22}
                  -125t_5^2s_{11}s_{21}""", 25, 2),
        "s11": ("""-12t_2t_4s_{11}^2s_{21}-20t_2t_5s_{11}^2s_{22}+20t_2t_5s_{11}s_{12}s_{21}+9t_3t_4s_{11}^2s_{22}+9t_3t_4s_{11}s_{12}s_{21}
                   +30t_3t_5s_{11}s_{12}s_{22}-30t_3t_5s_{12}^2s_{21}-24t_4^2s_{11}s_{12}s_{22}+30t_4t_5s_{12}^2s_{22}+100t_5s_{11}^2s_{22}^2s_{41}
                   -200t_5s_{11}s_{12}s_{21}s_{22}s_{41}+100t_5s_{12}^2s_{21}^2s_{41}""", 100, 2),
        "s12": ("""-4t_2t_4s_{11}s_{12}s_{21}+10t_2t_5s_{11}s_{12}s_{22}-40t_2t_5s_{12}^2s_{21}+3t_3t_4s_{11}s_{12}s_{22}+3t_3t_4s_{12}^2s_{21}
                   +20t_3t_5s_{12}^2s_{22}-8t_4^2s_{12}^2s_{22}-50t_5s_{11}^2s_{21}+100t_5s_{11}^2s_{22}^2s_{42}-200t_5s_{11}s_{12}s_{21}s_{22}s_{42}
                   +100t_5s_{12}^2s_{21}^2s_{42}""", 100, 2),
        "s21": ("""-12t_2t_4s_{11}s_{21}^2+20t_2t_5s_{11}s_{21}s_{22}-20t_2t_5s_{12}s_{21}^2+9t_3t_4s_{11}s_{21}s_{22}+9t_3t_4s_{12}s_{21}^2
                   -30t_3t_5s_{11}s_{22}^2+30t_3t_5s_{12}s_{21}s_{22}-24t_4^2s_{12}s_{21}s_{22}+30t_4t_5s_{12}s_{22}^2+100t_5s_{11}^2s_{22}^2s_{31}
                   -200t_5s_{11}s_{12}s_{21}s_{22}s_{31}+100t_5s_{12}^2s_{21}^2s_{31}""", 100, 2),
        "s22": ("""-4t_2t_4s_{11}s_{21}s_{22}-40t_2t_5s_{11}s_{22}^2+10t_2t_5s_{12}s_{21}s_{22}+3t_3t_4s_{11}s_{22}^2+3t_3t_4s_{12}s_{21}s_{22}
                   +20t_3t_5s_{12}s_{22}^2-8t_4^2s_{12}s_{22}^2+100t_5s_{11}^2s_{22}^2s_{32}-200t_5s_{11}s_{12}s_{21}s_{22}s_{32}-50t_5s_{11}s_{21}^2
                   +100t_5s_{12}^2s_{21}^2s_{32}""", 100, 2),
        "s31": ("""-48t_2t_4s_{11}^2s_{21}s_{22}s_{31}+48t_2t_4s_{11}s_{12}s_{21}^2s_{31}+160t_2t_5s_{11}^2s_{21}s_{22}s_{32}-80t_2t_5s_{11}^2s_{22}^2s_{31}
                   -160t_2t_5s_{11}s_{12}s_{21}^2s_{32}+80t_2t_5s_{12}^2s_{21}^2s_{31}+36t_3t_4s_{11}^2s_{22}^2s_{31}-36t_3t_4s_{12}^2s_{21}^2s_{31}
                   -120t_3t_5s_{11}^2s_{22}^2s_{32}+240t_3t_5s_{11}s_{12}s_{22}^2s_{31}+120t_3t_5s_{12}^2s_{21}^2s_{32}-240t_3t_5s_{12}^2s_{21}s_{22}s_{31}
                   -96t_4^2s_{11}s_{12}s_{22}^2s_{31}+96t_4^2s_{12}^2s_{21}s_{22}s_{31}+120t_4t_5s_{11}s_{12}s_{22}^2s_{32}-175t_4t_5s_{11}s_{21}s_{22}
                   -120t_4t_5s_{12}^2s_{21}s_{22}s_{32}-25t_4t_5s_{12}s_{21}^2+150t_5^2s_{11}s_{22}^2+250t_5^2s_{12}s_{21}s_{22}""", 400, 3),
        "s32": ("""-16t_2t_4s_{11}^2s_{21}s_{22}s_{32}+16t_2t_4s_{11}s_{12}s_{21}^2s_{32}-160t_2t_5s_{11}^2s_{22}^2s_{32}+200t_2t_5s_{11}s_{12}s_{22}^2s_{31}
                   -80t_2t_5s_{11}s_{21}^2+160t_2t_5s_{12}^2s_{21}^2s_{32}-200t_2t_5s_{12}^2s_{21}s_{22}s_{31}+12t_3t_4s_{11}^2s_{22}^2s_{32}
                   -12t_3t_4s_{12}^2s_{21}^2s_{32}+80t_3t_5s_{11}s_{12}s_{22}^2s_{32}-290t_3t_5s_{11}s_{21}s_{22}-80t_3t_5s_{12}^2s_{21}s_{22}s_{32}
                   +10t_3t_5s_{12}s_{21}^2-32t_4^2s_{11}s_{12}s_{22}^2s_{32}+32t_4^2s_{12}^2s_{21}s_{22}s_{32}+225t_4t_5s_{11}s_{22}^2+215t_4t_5s_{12}s_{21}s_{22}
                   -600t_5^2s_{12}s_{22}^2-200t_5s_{11}^2s_{21}s_{22}s_{31}+200t_5s_{11}s_{12}s_{21}^2s_{31}""", 400, 3),
        "s41": ("""-48t_2t_4s_{11}^2s_{21}s_{22}s_{41}+48t_2t_4s_{11}s_{12}s_{21}^2s_{41}+160t_2t_5s_{11}^2s_{21}s_{22}s_{42}-80t_2t_5s_{11}^2s_{22}^2s_{41}
                   -160t_2t_5s_{11}s_{12}s_{21}^2s_{42}+80t_2t_5s_{12}^2s_{21}^2s_{41}+36t_3t_4s_{11}^2s_{22}^2s_{41}-36t_3t_4s_{12}^2s_{21}^2s_{41}
                   -120t_3t_5s_{11}^2s_{22}^2s_{42}+240t_3t_5s_{11}s_{12}s_{22}^2s_{41}+120t_3t_5s_{12}^2s_{21}^2s_{42}-240t_3t_5s_{12}^2s_{21}s_{22}s_{41}
                   -96t_4^2s_{11}s_{12}s_{22}^2s_{41}+96t_4^2s_{12}^2s_{21}s_{22}s_{41}+25t_4t_5s_{11}^2s_{22}+175t_4t_5s_{11}s_{12}s_{21}
                   +120t_4t_5s_{11}s_{12}s_{22}^2s_{42}-120t_4t_5s_{12}^2s_{21}s_{22}s_{42}-250t_5^2s_{11}s_{12}s_{22}-150t_5^2s_{12}^2s_{21}""", 400, 3),
        "s42": ("""-16t_2t_4s_{11}^2s_{21}s_{22}s_{42}+16t_2t_4s_{11}s_{12}s_{21}^2s_{42}+80t_2t_5s_{11}^2s_{21}-160t_2t_5s_{11}^2s_{22}^2s_{42}
                   +200t_2t_5s_{11}s_{12}s_{22}^2s_{41}+160t_2t_5s_{12}^2s_{21}^2s_{42}-200t_2t_5s_{12}^2s_{21}s_{22}s_{41}+12t_3t_4s_{11}^2s_{22}^2s_{42}
                   -12t_3t_4s_{12}^2s_{21}^2s_{42}-10t_3t_5s_{11}^2s_{22}+290t_3t_5s_{11}s_{12}s_{21}+80t_3t_5s_{11}s_{12}s_{22}^2s_{42}
                   -80t_3t_5s_{12}^2s_{21}s_{22}s_{42}-32t_4^2s_{11}s_{12}s_{22}^2s_{42}+32t_4^2s_{12}^2s_{21}s_{22}s_{42}-215t_4t_5s_{11}s_{12}s_{22}
                   -225t_4t_5s_{12}^2s_{21}+600t_5^2s_{12}^2s_{22}-200t_5s_{11}^2s_{21}s_{22}s_{41}+200t_5s_{11}s_{12}s_{21}^2s_{41}""", 400, 3),
    },
}

bad = []
for k in (1, 2, 3):
    field = modular_field(k)
    for m in (2, 3, 4, 5):
        mine = field.t_parts[m]
        if m == 5:
            ok = mine.is_zero()
        else:
            want = component(*FIELDS[k][f"t{m}"])
            ok = (mine - want).is_zero()
        if not ok:
            bad.append((k, f"t{m}"))
        print(f"  field {k} d/dt{m}: {'ok' if ok else 'MISMATCH'}", flush=True)
    for name in ("s11", "s12", "s21", "s22", "s31", "s32", "s41", "s42"):
        want = component(*FIELDS[k][name])
        mine = field.s_parts[name]
        ok = (mine - want).is_zero()
        if not ok:
            bad.append((k, name))
        print(f"  field {k} d/d{name}: {'ok' if ok else 'MISMATCH'}", flush=True)

print(f"[{time.time()-T0:6.2f}s] mismatches: {bad if bad else 'none'}")
raise SystemExit(1 if bad else 0)
