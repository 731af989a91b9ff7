"""Well-ordered semigroups generated by delta-sequences.

Every sequence kind generates a semigroup in its ambient ordered group:
integers, plane vectors under lexicographic order, rationals, or a real
quadratic extension.  This module provides the shared operations on those
semigroups: exact comparison of values, the unique bounded representation
of a member over the generators, ordered enumeration up to a bound, the
successor of a value, and the pair count omega (the number of ordered pairs
of members summing to a given value).

Representations are unique under the bound pattern reported alongside the
exponents: the first exponent is always free, interior exponents are bounded
by the quotients n_i of the underlying integer sequence, and whether the last
exponent is free depends on the kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache

from .deltaseq import (
    DeltaN,
    members_below,
    normalize,
    telescopic_exponents,
    validate_n,
)
from .errors import DomainError
from .genesis import DeltaQ, DeltaR, DeltaZ2, extend_n
from .quadratics import QuadExt

__all__ = [
    "LexValue",
    "QuadValue",
    "RatValue",
    "Representation",
    "compare",
    "enumerate_upto",
    "generators",
    "omega",
    "represent",
    "successor",
    "zero_of",
]


@dataclass(frozen=True)
class LexValue:
    """A plane vector compared lexicographically."""

    x: int
    y: int


@dataclass(frozen=True)
class RatValue:
    """A rational value."""

    value: Fraction


@dataclass(frozen=True)
class QuadValue:
    """The value r + m * tau in a real quadratic extension."""

    r: Fraction
    m: int
    tau: QuadExt

    def exact(self) -> QuadExt:
        return self.tau * self.m + self.r


@dataclass(frozen=True)
class Representation:
    """Exponents over the generators, with the uniqueness bound pattern.

    ``bounds[i]`` is ``None`` when the i-th exponent is unbounded, otherwise
    the exclusive upper bound it must stay below.
    """

    exponents: tuple[int, ...]
    bounds: tuple[int | None, ...]


def compare(left, right) -> int:
    """Exact three-way comparison; -1, 0, or 1.

    Values of different kinds cannot be compared, except rationals against
    quadratic values, which embed in the same real line.
    """
    if isinstance(left, LexValue) and isinstance(right, LexValue):
        lhs, rhs = (left.x, left.y), (right.x, right.y)
        return (lhs > rhs) - (lhs < rhs)
    if isinstance(left, RatValue) and isinstance(right, RatValue):
        return (left.value > right.value) - (left.value < right.value)
    if isinstance(left, QuadValue) and isinstance(right, QuadValue):
        if left.tau != right.tau:
            raise DomainError("order mismatch: values live over different tails")
        return (left.exact() - right.exact()).sign()
    if isinstance(left, RatValue) and isinstance(right, QuadValue):
        return (right.exact() - left.value).sign() * -1
    if isinstance(left, QuadValue) and isinstance(right, RatValue):
        return (left.exact() - right.value).sign()
    raise DomainError("order mismatch: values of different kinds")


# --- per-kind engines -------------------------------------------------------


class _IntegerEngine:
    """The integer sequence's own telescopic semigroup."""

    def __init__(self, delta: DeltaN) -> None:
        self.delta = delta
        self.bounds = (None,) + tuple(delta.structure.n)

    def lift(self, value) -> RatValue:
        if isinstance(value, RatValue):
            return value
        raise DomainError("value kind mismatch")

    def zero(self) -> RatValue:
        return RatValue(Fraction(0))

    def generators(self) -> tuple[RatValue, ...]:
        return tuple(RatValue(Fraction(v)) for v in self.delta.deltas)

    def add(self, a: RatValue, b: RatValue) -> RatValue:
        return RatValue(a.value + b.value)

    def sub(self, a: RatValue, b: RatValue) -> RatValue:
        return RatValue(a.value - b.value)

    def represent(self, value: RatValue) -> Representation:
        if value.value < 0:
            raise DomainError("below zero")
        if value.value.denominator != 1:
            raise DomainError("not a member")
        exps = telescopic_exponents(self.delta, int(value.value))
        if exps is None:
            raise DomainError("not a member")
        return Representation(exps, self.bounds)

    def enumerate(self, bound: RatValue):
        top = bound.value.numerator // bound.value.denominator
        out = []
        for v in members_below(self.delta.deltas, top):
            exps = telescopic_exponents(self.delta, v)
            out.append((RatValue(Fraction(v)), Representation(exps, self.bounds)))
        return out


class _PlanarEngine:
    """Plane-vector semigroup; the last generator is peeled off by the
    determinant of the witness pair, the rest is telescopic."""

    def __init__(self, delta: DeltaZ2) -> None:
        self.delta = delta
        w = delta.witness
        self.u = w.u
        self.off = w.off
        self.cg = w.cg
        self.head = validate_n(w.head_c)
        self.det = w.u[0] * w.off[1] - w.u[1] * w.off[0]
        self.bounds = (None,) + tuple(self.head.structure.n) + (None,)

    def lift(self, value) -> LexValue:
        if isinstance(value, LexValue):
            return value
        raise DomainError("value kind mismatch")

    def zero(self) -> LexValue:
        return LexValue(0, 0)

    def generators(self) -> tuple[LexValue, ...]:
        return tuple(LexValue(x, y) for x, y in self.delta.deltas)

    def add(self, a: LexValue, b: LexValue) -> LexValue:
        return LexValue(a.x + b.x, a.y + b.y)

    def sub(self, a: LexValue, b: LexValue) -> LexValue:
        return LexValue(a.x - b.x, a.y - b.y)

    def represent(self, value: LexValue) -> Representation:
        if (value.x, value.y) < (0, 0):
            raise DomainError("below zero")
        ux, uy = self.u
        last = -(ux * value.y - uy * value.x) * self.det
        if last < 0:
            raise DomainError("not a member")
        rx = value.x + last * self.off[0]
        ry = value.y + last * self.off[1]
        if ux:
            s, rem = divmod(rx, ux)
            if rem or s * uy != ry:
                raise DomainError("not a member")
        else:
            s, rem = divmod(ry, uy)
            if rem or rx:
                raise DomainError("not a member")
        s -= last * self.cg
        if s < 0:
            raise DomainError("not a member")
        head_exps = telescopic_exponents(self.head, s)
        if head_exps is None:
            raise DomainError("not a member")
        return Representation(head_exps + (last,), self.bounds)

    def enumerate(self, bound: LexValue):
        gens = self.delta.deltas
        if any(gx == 0 for gx, _ in gens):
            raise DomainError(
                "enumeration is infinite: a generator has first component zero"
            )
        target = (bound.x, bound.y)
        out = []

        def walk(i: int, x: int, y: int, acc: tuple[int, ...]) -> None:
            if i == len(gens):
                out.append(
                    (LexValue(x, y), Representation(acc, self.bounds))
                )
                return
            gx, gy = gens[i]
            cap = self.bounds[i]
            c = 0
            while cap is None or c < cap:
                nx, ny = x + c * gx, y + c * gy
                if (nx, ny) > target:
                    break
                walk(i + 1, nx, ny, acc + (c,))
                c += 1

        walk(0, 0, 0, ())
        out.sort(key=cmp_to_key(lambda a, b: compare(a[0], b[0])))
        return out


class _QuadraticEngine:
    """Rational head plus one irrational tail generator."""

    def __init__(self, delta: DeltaR) -> None:
        self.delta = delta
        self.dstar = delta.witness.dstar
        self.scale = self.dstar.deltas[1]
        self.tau = delta.tail
        self.bounds = (None,) + tuple(self.dstar.structure.n) + (None,)

    def lift(self, value) -> QuadValue:
        if isinstance(value, QuadValue):
            if value.tau != self.tau:
                raise DomainError("order mismatch: values live over different tails")
            return value
        if isinstance(value, RatValue):
            return QuadValue(value.value, 0, self.tau)
        raise DomainError("value kind mismatch")

    def zero(self) -> QuadValue:
        return QuadValue(Fraction(0), 0, self.tau)

    def generators(self) -> tuple[QuadValue, ...]:
        head = tuple(QuadValue(h, 0, self.tau) for h in self.delta.head)
        return head + (QuadValue(Fraction(0), 1, self.tau),)

    def add(self, a: QuadValue, b: QuadValue) -> QuadValue:
        return QuadValue(a.r + b.r, a.m + b.m, self.tau)

    def sub(self, a: QuadValue, b: QuadValue) -> QuadValue:
        return QuadValue(a.r - b.r, a.m - b.m, self.tau)

    def represent(self, value: QuadValue) -> Representation:
        if value.exact().sign() < 0:
            raise DomainError("below zero")
        if value.m < 0:
            raise DomainError("not a member")
        scaled = value.r * self.scale
        if scaled.denominator != 1 or scaled < 0:
            raise DomainError("not a member")
        exps = telescopic_exponents(self.dstar, int(scaled))
        if exps is None:
            raise DomainError("not a member")
        return Representation(exps + (value.m,), self.bounds)

    def enumerate(self, bound: QuadValue):
        exact_bound = bound.exact()
        out = []
        m = 0
        while True:
            room = exact_bound - self.tau * m
            if room.sign() < 0:
                break
            top = (room * self.scale).floor()
            for v in members_below(self.dstar.deltas, top):
                exps = telescopic_exponents(self.dstar, v)
                out.append(
                    (
                        QuadValue(Fraction(v, self.scale), m, self.tau),
                        Representation(exps + (m,), self.bounds),
                    )
                )
            m += 1
        out.sort(key=cmp_to_key(lambda a, b: compare(a[0], b[0])))
        return out


class _ChainEngine:
    """Rational chain; every query works inside a stage whose next generator
    would already exceed the query bound."""

    def __init__(self, delta: DeltaQ) -> None:
        self.delta = delta

    def lift(self, value) -> RatValue:
        if isinstance(value, RatValue):
            return value
        raise DomainError("value kind mismatch")

    def zero(self) -> RatValue:
        return RatValue(Fraction(0))

    def generators(self) -> tuple[RatValue, ...]:
        return tuple(RatValue(v) for v in self.delta.generators())

    def add(self, a: RatValue, b: RatValue) -> RatValue:
        return RatValue(a.value + b.value)

    def sub(self, a: RatValue, b: RatValue) -> RatValue:
        return RatValue(a.value - b.value)

    def covering_stage(self, bound: Fraction) -> DeltaN:
        stage = self.delta.stages[-1]
        while True:
            grown = extend_n(stage)
            appended = Fraction(grown.deltas[-1], grown.deltas[1])
            if appended > bound:
                return stage
            stage = grown

    def represent(self, value: RatValue) -> Representation:
        if value.value < 0:
            raise DomainError("below zero")
        stage = self.covering_stage(value.value)
        scaled = value.value * stage.deltas[1]
        if scaled.denominator != 1:
            raise DomainError("not a member")
        exps = telescopic_exponents(stage, int(scaled))
        if exps is None:
            raise DomainError("not a member")
        return Representation(exps, (None,) + tuple(stage.structure.n))

    def enumerate(self, bound: RatValue):
        stage = self.covering_stage(bound.value)
        scale = stage.deltas[1]
        top = (bound.value.numerator * scale) // bound.value.denominator
        bounds = (None,) + tuple(stage.structure.n)
        out = []
        for v in members_below(stage.deltas, top):
            exps = telescopic_exponents(stage, v)
            out.append(
                (RatValue(Fraction(v, scale)), Representation(exps, bounds))
            )
        return out


@lru_cache(maxsize=None)
def _engine(delta):
    if isinstance(delta, DeltaN):
        return _IntegerEngine(delta)
    if isinstance(delta, DeltaZ2):
        return _PlanarEngine(delta)
    if isinstance(delta, DeltaR):
        return _QuadraticEngine(delta)
    if isinstance(delta, DeltaQ):
        return _ChainEngine(delta)
    raise DomainError("unsupported sequence kind")


# --- public operations ------------------------------------------------------


def generators(delta):
    """The generators of the semigroup as comparable values."""
    return _engine(delta).generators()


def zero_of(delta):
    """The zero member as a comparable value."""
    return _engine(delta).zero()


def represent(delta, value) -> Representation:
    """The unique bounded representation of a member over the generators."""
    eng = _engine(delta)
    return eng.represent(eng.lift(value))


def enumerate_upto(delta, bound):
    """All members up to the bound in increasing order, with representations."""
    eng = _engine(delta)
    return eng.enumerate(eng.lift(bound))


def successor(delta, value):
    """The least member strictly greater than the given value."""
    eng = _engine(delta)
    value = eng.lift(value)
    zero = eng.zero()
    if compare(value, zero) < 0:
        return zero
    # The largest member m <= value satisfies m + delta_0 > value, so the
    # successor is never beyond value + delta_0.
    bound = eng.add(value, eng.generators()[0])
    for member, _ in eng.enumerate(bound):
        if compare(member, value) > 0:
            return member
    raise DomainError("successor search failed")


def omega(delta, value) -> int:
    """How many ordered pairs of members sum to the value."""
    eng = _engine(delta)
    value = eng.lift(value)
    if compare(value, eng.zero()) < 0:
        return 0
    members = [v for v, _ in eng.enumerate(value)]
    seen = set(members)
    count = 0
    for member in members:
        if eng.sub(value, member) in seen:
            count += 1
    return count
