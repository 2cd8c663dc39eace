"""Closed-form classification of the quotient from (Delta, R, g_max).

This path never touches the castling recursion, so ``cross_check`` compares
two genuinely independent computations.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .arith import DimVec, InvariantBundle, checked, invariants, validate_dims
from .errors import InternalInconsistency
from .recursion import RecursionTrace, run_recursion


class Status(str, enum.Enum):
    EMPTY = "empty"
    POINT = "point"
    DIM = "dim"


class Rule(str, enum.Enum):
    DELTA_GT_M2 = "DeltaGreaterThanMinus2"
    DELTA_EQ_M2 = "DeltaEqualsMinus2"
    DELTA_LT_M2 = "DeltaLessThanMinus2"


@dataclass(frozen=True)
class Classification:
    status: Status
    value: int  # -1 empty, 0 point, k >= 1 dimension
    invariants_used: InvariantBundle
    rule: Rule

    @property
    def nonempty(self) -> bool:
        return self.status is not Status.EMPTY


@dataclass(frozen=True)
class ConsistencyReport:
    dims: DimVec
    closed_form: Classification
    recursive_dim: int
    agree: bool
    trace: RecursionTrace


def _from_value(value: int, inv: InvariantBundle, rule: Rule) -> Classification:
    if value < 0:
        status = Status.EMPTY
    elif value == 0:
        status = Status.POINT
    else:
        status = Status.DIM
    return Classification(status, value, inv, rule)


def classify(d: DimVec) -> Classification:
    inv = invariants(d)
    if inv.delta > -2:
        if inv.r <= 0 or inv.delta < 2:
            raise InternalInconsistency(f"{d}: Delta={inv.delta} > -2 but R={inv.r}")
        return _from_value(inv.delta, inv, Rule.DELTA_GT_M2)
    if inv.delta == -2:
        if inv.r <= 0:
            raise InternalInconsistency(f"{d}: Delta=-2 but R={inv.r}")
        return _from_value(max(inv.gmax - 3, 0), inv, Rule.DELTA_EQ_M2)
    if inv.r > 0:
        raise InternalInconsistency(f"{d}: Delta={inv.delta} < -2 but R={inv.r}")
    return _from_value(0 if inv.r == 0 else -1, inv, Rule.DELTA_LT_M2)


def classify_2bc(b: int, c: int) -> Classification:
    """Classify (2, b, c) by the ratio rule for three-party systems with a qubit.

    Nonempty exactly when b == c (dimension max(b - 3, 0)) or c/b reduces to
    (k+1)/k (a single point). Anything else is empty.
    """
    if b < 2 or c < 2:
        raise ValueError(f"need b, c >= 2, got b={b}, c={c}")
    d = validate_dims([2, b, c])
    _, b, c = d.dims
    inv = invariants(d)
    if b == c:
        return _from_value(max(b - 3, 0), inv, Rule.DELTA_EQ_M2)
    ratio = Fraction(c, b)
    rule = Rule.DELTA_LT_M2
    if ratio.numerator == ratio.denominator + 1:
        return _from_value(0, inv, rule)
    return _from_value(-1, inv, rule)


def hyperdet_nonzero(d: DimVec) -> bool:
    """Whether the hyperdeterminant of this format is a nonzero polynomial."""
    return d.last <= sum(d.dims[:-1]) - (d.n - 2)


def invariant_degrees(d: DimVec, k_max: int) -> list[int]:
    """Degrees <= k_max in which nonzero invariants may exist (multiples of lcm)."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    step = checked(lcm(*d.dims))
    return list(range(step, k_max + 1, step))


def cross_check(d: DimVec) -> ConsistencyReport:
    closed = classify(d)
    trace = run_recursion(d)
    return ConsistencyReport(
        dims=d,
        closed_form=closed,
        recursive_dim=trace.d_value,
        agree=closed.value == trace.d_value,
        trace=trace,
    )
