"""Exact computer algebra for genus-2 hyperelliptic curve families.

The package computes, over the rationals and without any floating point,
the Gauss-Manin connection, cup product, modular vector fields, Igusa
invariants, Resnikoff-type differential identities and the monodromy group
of the weighted family y^2 = x^5 + t2*x^3 + t3*x^2 + t4*x + t5, and ships a
verification CLI that replays every computed object against committed
reference data.
"""

__version__ = "0.1.0"
