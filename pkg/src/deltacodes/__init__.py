"""Evaluation codes from plane-valuation weight functions.

Exact finite-field and order-domain machinery for building delta-sequences
(integer, planar, rational, and quadratic-irrational flavours), the well-ordered
semigroups they generate, families of approximate polynomials, and the
evaluation codes with Feng-Rao, Goppa-style, and true minimum distances.
"""

from __future__ import annotations

__version__ = "0.1.0"
