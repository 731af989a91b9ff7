"""Increasing-gcd sequences of positive integers and their semigroup structure.

A sequence (delta_0, ..., delta_g) is accepted when the gcd chain
d_i = gcd(delta_0, ..., delta_{i-1}) reaches 1 exactly at d_{g+1} with every
quotient n_i = d_i / d_{i+1} > 1, each n_i * delta_i lies in the semigroup of
the earlier entries, and the entries satisfy delta_0 > delta_1 together with
delta_i < delta_{i-1} * n_{i-1} from the third entry on.  The derived structure
records the gcd chain, the n_i, the slopes (e_j, m_j) of the associated Newton
segments, and the continued fraction of the last slope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError

__all__ = [
    "DeltaN",
    "DeltaStructure",
    "Rational",
    "canonical_cf",
    "cf_of",
    "contains",
    "denormalize",
    "gap_count_telescopic",
    "gaps",
    "members_below",
    "normalize",
    "structure_of",
    "telescopic_exponents",
    "validate_n",
]

Rational = Fraction


@dataclass(frozen=True)
class DeltaStructure:
    """Derived data of a valid sequence.

    ``d`` is the gcd chain (d_1, ..., d_{g+1}); ``n`` the quotients
    (n_1, ..., n_g); ``newton`` the slope pairs (e_j, m_j); ``cf`` the
    continued-fraction digits of the last slope m/e (None when there are no
    slopes); ``divisible`` whether delta_0 - delta_1 divides delta_0, which
    merges the first two slopes.
    """

    d: tuple[int, ...]
    n: tuple[int, ...]
    newton: tuple[tuple[int, int], ...]
    cf: tuple[int, ...] | None
    divisible: bool


@dataclass(frozen=True)
class DeltaN:
    """A validated sequence of positive integers with its derived structure."""

    deltas: tuple[int, ...]
    structure: DeltaStructure

    @property
    def g(self) -> int:
        return len(self.deltas) - 1


def _gcd_chain(deltas: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    acc = 0
    for v in deltas:
        acc = gcd(acc, v)
        out.append(acc)
    return tuple(out)


def validate_n(deltas) -> DeltaN:
    """Validate a sequence, naming the first violated condition on failure."""
    seq = tuple(int(v) for v in deltas)
    if not seq:
        raise DomainError("sequence must not be empty")
    if any(v <= 0 for v in seq):
        raise DomainError("sequence entries must be positive integers")
    g = len(seq) - 1
    d = _gcd_chain(seq)
    if d[-1] != 1:
        raise DomainError(f"condition (1): gcd chain must end at 1, got d = {d[-1]}")
    n = tuple(d[i] // d[i + 1] for i in range(g))
    if any(v == 1 for v in n):
        raise DomainError("condition (1): every n_i must exceed 1")
    for i in range(1, g + 1):
        if not contains(seq[:i], n[i - 1] * seq[i]):
            raise DomainError(
                f"condition (2): n_{i} * delta_{i} = {n[i - 1] * seq[i]} is not in "
                f"the semigroup of the first {i} entries"
            )
    if g >= 1 and seq[0] <= seq[1]:
        raise DomainError("condition (3): delta_0 must exceed delta_1")
    for i in range(2, g + 1):
        if seq[i] >= seq[i - 1] * n[i - 2]:
            raise DomainError(
                f"condition (3): delta_{i} must be below delta_{i - 1} * n_{i - 1}"
            )
    return DeltaN(seq, _structure(seq, d, n))


def structure_of(deltas) -> DeltaStructure:
    """Structure of a sequence, validating it first."""
    return validate_n(deltas).structure


def _structure(seq: tuple[int, ...], d: tuple[int, ...], n: tuple[int, ...]) -> DeltaStructure:
    g = len(seq) - 1
    divisible = g >= 1 and seq[0] % (seq[0] - seq[1]) == 0
    newton: list[tuple[int, int]] = []
    if g >= 1 and not divisible:
        newton.append((seq[0] - seq[1], seq[0]))
        for i in range(1, g):
            newton.append((d[i], n[i - 1] * seq[i] - seq[i + 1]))
    elif g >= 2:
        newton.append((d[1], seq[0] + n[0] * seq[1] - seq[2]))
        for i in range(1, g - 1):
            newton.append((d[i + 1], n[i] * seq[i + 1] - seq[i + 2]))
    cf = None
    if newton:
        e, m = newton[-1]
        cf = cf_of(Fraction(m, e))
    return DeltaStructure(tuple(d), n, tuple(newton), cf, divisible)


def cf_of(value: Fraction) -> tuple[int, ...]:
    """Continued-fraction digits of a positive rational, last digit >= 2
    unless the value is an integer."""
    if value <= 0:
        raise DomainError("continued fractions need a positive value")
    digits = []
    num, den = value.numerator, value.denominator
    while den:
        digits.append(num // den)
        num, den = den, num % den
    return tuple(digits)


def canonical_cf(digits) -> tuple[int, ...]:
    """Canonicalize digits so the expansion never ends in 1 (..., a, 1 -> ..., a+1)."""
    out = tuple(int(v) for v in digits)
    if not out:
        raise DomainError("continued fraction needs at least one digit")
    if out[0] < 1 or any(v < 1 for v in out[1:]):
        raise DomainError("continued-fraction digits must be positive")
    if len(out) > 1 and out[-1] == 1:
        out = out[:-2] + (out[-2] + 1,)
    return out


def normalize(delta: DeltaN) -> tuple[Fraction, ...]:
    """The sequence scaled so its second entry becomes 1."""
    if delta.g < 1:
        raise DomainError("normalization needs at least two entries")
    return tuple(Fraction(v, delta.deltas[1]) for v in delta.deltas)


def denormalize(values) -> tuple[int, ...]:
    """Clear denominators by the lcm, recovering the integer sequence."""
    fracs = [Fraction(v) for v in values]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    return tuple(int(f * lcm) for f in fracs)


def contains(gens, value: int) -> bool:
    """Whether value lies in the numerical semigroup generated by gens."""
    if value < 0:
        return False
    reach = bytearray(value + 1)
    reach[0] = 1
    gs = sorted({int(v) for v in gens if v > 0})
    for v in range(1, value + 1):
        for d in gs:
            if d > v:
                break
            if reach[v - d]:
                reach[v] = 1
                break
    return bool(reach[value])


def members_below(gens, bound: int) -> list[int]:
    """Sorted members of the semigroup of gens that are <= bound."""
    if bound < 0:
        return []
    reach = bytearray(bound + 1)
    reach[0] = 1
    gs = sorted({int(v) for v in gens if v > 0})
    for v in range(1, bound + 1):
        for d in gs:
            if d > v:
                break
            if reach[v - d]:
                reach[v] = 1
                break
    return [v for v in range(bound + 1) if reach[v]]


def gaps(gens) -> list[int]:
    """All positive integers outside the semigroup of gens (gcd must be 1)."""
    gs = sorted({int(v) for v in gens if v > 0})
    if not gs:
        raise DomainError("gap computation needs positive generators")
    acc = 0
    for v in gs:
        acc = gcd(acc, v)
    if acc != 1:
        raise DomainError("gap set is infinite unless the gcd of generators is 1")
    bound = gs[0] * gs[-1] + 1
    members = members_below(gs, bound)
    present = bytearray(bound + 1)
    for v in members:
        present[v] = 1
    return [v for v in range(1, bound + 1) if not present[v]]


def gap_count_telescopic(delta: DeltaN) -> int:
    """Closed-form gap count (sum (n_i - 1) delta_i - delta_0 + 1) / 2."""
    n = delta.structure.n
    total = sum((n[i - 1] - 1) * delta.deltas[i] for i in range(1, delta.g + 1))
    value = Fraction(total - delta.deltas[0] + 1, 2)
    if value.denominator != 1:
        raise DomainError("closed-form gap count is not an integer")
    return int(value)


def telescopic_exponents(delta: DeltaN, value: int) -> tuple[int, ...] | None:
    """The unique exponents with value = sum gamma_i delta_i, gamma_i < n_i
    for i >= 1 and gamma_0 >= 0, or None when value is not a member.

    Works by gcd descent: modulo d_i the value determines gamma_i, because the
    earlier entries are all divisible by d_i while delta_i / d_{i+1} is
    invertible mod n_i.
    """
    if value < 0:
        return None
    seq = delta.deltas
    d = delta.structure.d  # d[i] holds d_{i+1}
    n = delta.structure.n
    exps = [0] * len(seq)
    v = value
    for i in range(delta.g, 0, -1):
        d_next = d[i]
        if v % d_next:
            return None
        n_i = n[i - 1]
        w = seq[i] // d_next
        exps[i] = (v // d_next) * pow(w, -1, n_i) % n_i
        v -= exps[i] * seq[i]
        if v < 0:
            return None
    if v % seq[0]:
        return None
    exps[0] = v // seq[0]
    return tuple(exps)
