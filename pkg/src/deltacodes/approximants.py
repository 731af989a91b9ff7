"""Sparse bivariate polynomials over a finite field and approximate families.

An approximate family attaches one polynomial to each generator of a
delta-sequence's semigroup: q_0 = x and q_1 = y for the first two, then

    q_{i+1} = q_i^{n_i} - prod_j q_j^{a_{ij}}

where the exponent row (a_{ij}) is the unique bounded representation of
n_i * delta_i over the preceding generators.  The polynomial attached to the
(i+1)-th generator therefore has that generator's value as its weight, and
products of family members indexed by a representation span the function
space below any semigroup element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd

from .deltaseq import DeltaN, telescopic_exponents, validate_n
from .errors import DomainError
from .genesis import DeltaQ, DeltaR, DeltaZ2
from .gf import FieldElement, FieldSpec
from .semigroup import Representation, enumerate_upto, generators, represent

__all__ = [
    "ApproximateFamily",
    "BasisElement",
    "BivarPoly",
    "ExpansionStep",
    "basis_element",
    "basis_for",
    "build_approximates",
    "poly_eval",
]


def _term_order(item):
    (ex, ey), _ = item
    return (-(ex + ey), -ey, -ex)


@dataclass(frozen=True)
class BivarPoly:
    """An exact sparse polynomial in x and y over one finite field.

    Terms are stored sorted by decreasing total degree then decreasing
    y-degree, with no zero coefficients.
    """

    spec: FieldSpec
    terms: tuple[tuple[tuple[int, int], FieldElement], ...]

    @classmethod
    def from_coeffs(cls, spec: FieldSpec, mapping) -> BivarPoly:
        """Build from a {(x-exponent, y-exponent): coefficient} mapping.

        Integer coefficients are reduced mod p for prime fields; extension
        fields require encoded values or field elements.
        """
        acc: dict[tuple[int, int], FieldElement] = {}
        for key, coeff in mapping.items():
            if isinstance(coeff, int) and spec.m == 1:
                coeff = spec.element(coeff % spec.p)
            else:
                coeff = spec.element(coeff)
            if coeff:
                acc[(int(key[0]), int(key[1]))] = coeff
        return cls(spec, tuple(sorted(acc.items(), key=_term_order)))

    def _merge(self, other: BivarPoly, negate: bool) -> BivarPoly:
        if self.spec != other.spec:
            raise DomainError("field mismatch")
        acc = dict(self.terms)
        for key, coeff in other.terms:
            add = -coeff if negate else coeff
            total = acc[key] + add if key in acc else add
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
        return BivarPoly(self.spec, tuple(sorted(acc.items(), key=_term_order)))

    def __add__(self, other: BivarPoly) -> BivarPoly:
        return self._merge(other, negate=False)

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        return self._merge(other, negate=True)

    def __mul__(self, other: BivarPoly) -> BivarPoly:
        if self.spec != other.spec:
            raise DomainError("field mismatch")
        acc: dict[tuple[int, int], FieldElement] = {}
        for (ax, ay), ac in self.terms:
            for (bx, by), bc in other.terms:
                key = (ax + bx, ay + by)
                prod = ac * bc
                total = acc[key] + prod if key in acc else prod
                if total:
                    acc[key] = total
                else:
                    acc.pop(key, None)
        return BivarPoly(self.spec, tuple(sorted(acc.items(), key=_term_order)))

    def __pow__(self, power: int) -> BivarPoly:
        if power < 0:
            raise DomainError("negative polynomial power")
        result = BivarPoly.from_coeffs(self.spec, {(0, 0): 1})
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    def deg_y(self) -> int:
        return max(ey for (_, ey), _ in self.terms) if self.terms else -1

    def evaluate(self, point) -> FieldElement:
        px = self.spec.element(point[0])
        py = self.spec.element(point[1])
        total = self.spec.element(0)
        for (ex, ey), coeff in self.terms:
            total = total + coeff * px**ex * py**ey
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (ex, ey), coeff in self.terms:
            factors = []
            text = str(coeff)
            if text != "1" or (ex == 0 and ey == 0):
                factors.append(text)
            if ex:
                factors.append("x" if ex == 1 else f"x^{ex}")
            if ey:
                factors.append("y" if ey == 1 else f"y^{ey}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def poly_eval(p: BivarPoly, point) -> FieldElement:
    """Evaluate a polynomial at a point given as a pair of field elements."""
    return p.evaluate(point)


@dataclass(frozen=True)
class ExpansionStep:
    """One recurrence step: the n_i used and the prefix exponent row a_{ij}."""

    n: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class ApproximateFamily:
    """Approximates q_0..q_r with their weights and recurrence rows."""

    spec: FieldSpec
    polys: tuple[BivarPoly, ...]
    weights: tuple
    expansion: tuple[ExpansionStep, ...]


@dataclass(frozen=True)
class BasisElement:
    """A product of approximates with its exponents and semigroup weight."""

    exponents: tuple[int, ...]
    weight: object
    expanded: BivarPoly


def _base_sequence(delta) -> DeltaN:
    if isinstance(delta, DeltaN):
        return delta
    if isinstance(delta, (DeltaZ2, DeltaR)):
        return delta.witness.dstar
    if isinstance(delta, DeltaQ):
        return delta.stages[-1]
    raise DomainError("unsupported sequence kind")


def _prefix_row(base: DeltaN, i: int) -> tuple[int, ...]:
    """Bounded exponents of n_i * delta_i over delta_0..delta_{i-1}."""
    n_i = base.structure.n[i - 1]
    target = n_i * base.deltas[i]
    prefix = base.deltas[:i]
    d = reduce(gcd, prefix)
    if target % d:
        raise DomainError("inconsistent δ-sequence")
    scaled = validate_n(tuple(v // d for v in prefix))
    exps = telescopic_exponents(scaled, target // d)
    if exps is None:
        raise DomainError("inconsistent δ-sequence")
    return exps


@lru_cache(maxsize=None)
def build_approximates(delta, spec: FieldSpec, depth: int | None = None) -> ApproximateFamily:
    """Build the family of approximates for a delta-sequence over a field."""
    weights = generators(delta)
    max_depth = len(weights) - 1
    if depth is None:
        depth = max_depth
    if depth < 1:
        raise DomainError("depth must be at least 1")
    if depth > max_depth:
        raise DomainError("depth exceeds the generator count")
    base = _base_sequence(delta)
    polys = [
        BivarPoly.from_coeffs(spec, {(1, 0): 1}),
        BivarPoly.from_coeffs(spec, {(0, 1): 1}),
    ]
    steps = []
    for i in range(1, depth):
        n_i = base.structure.n[i - 1]
        row = _prefix_row(base, i)
        product = BivarPoly.from_coeffs(spec, {(0, 0): 1})
        for q, a in zip(polys, row):
            if a:
                product = product * q**a
        new = polys[i] ** n_i - product
        if not new.terms:
            raise DomainError("inconsistent δ-sequence")
        polys.append(new)
        steps.append(ExpansionStep(n_i, row))
    return ApproximateFamily(
        spec, tuple(polys), tuple(weights[: depth + 1]), tuple(steps)
    )


@lru_cache(maxsize=None)
def _product_of(fam: ApproximateFamily, exponents: tuple[int, ...]) -> BivarPoly:
    result = BivarPoly.from_coeffs(fam.spec, {(0, 0): 1})
    for q, a in zip(fam.polys, exponents):
        if a:
            result = result * q**a
    return result


def _fit_exponents(fam: ApproximateFamily, exps: tuple[int, ...]) -> tuple[int, ...]:
    width = len(fam.polys)
    if len(exps) > width:
        if any(exps[width:]):
            raise DomainError(
                "extend prefix: the bound needs generators beyond the family"
            )
        return exps[:width]
    return exps + (0,) * (width - len(exps))


@lru_cache(maxsize=None)
def basis_for(delta, fam: ApproximateFamily, alpha) -> tuple[BasisElement, ...]:
    """One basis element per semigroup member up to alpha, in semigroup order."""
    out = []
    for value, rep in enumerate_upto(delta, alpha):
        exps = _fit_exponents(fam, rep.exponents)
        out.append(BasisElement(exps, value, _product_of(fam, exps)))
    return tuple(out)


@lru_cache(maxsize=None)
def basis_element(delta, fam: ApproximateFamily, alpha) -> BasisElement:
    """The single basis element attached to one semigroup member."""
    exps = _fit_exponents(fam, represent(delta, alpha).exponents)
    return BasisElement(exps, alpha, _product_of(fam, exps))
