"""Castling recursion computing the quotient dimension D(d).

Each non-terminal vector (P/2 < d_n < P, with P the product of all but the
largest entry) is replaced by sort(d_1, ..., d_{n-1}, P - d_n) until one of
the terminal cases is reached:

* A: d_n > P           -> D = -1 (empty quotient)
* B: d_n = P           -> D = 0  (single point)
* D: 2 d_n <= P        -> D = 0 for (1,..,1,2,2,2), d - 3 for (1,..,1,2,d,d)
                          with d >= 3, and the expected dimension otherwise.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arith import DimVec, checked, delta, strip_ones
from .errors import InternalInconsistency, NotCaseC


class CaseTag(str, enum.Enum):
    A = "CaseA"
    B = "CaseB"
    D = "CaseD"


class Subcase(str, enum.Enum):
    SPECIAL_222 = "Special222"
    SPECIAL_2DD = "Special2dd"
    GENERIC = "Generic"


@dataclass(frozen=True)
class TerminalCase:
    tag: CaseTag
    subcase: Subcase | None = None
    d: int | None = None  # only for Special2dd

    def __str__(self) -> str:
        if self.tag is not CaseTag.D:
            return self.tag.value
        if self.subcase is Subcase.SPECIAL_2DD:
            return f"{self.tag.value}:{self.subcase.value}(d={self.d})"
        return f"{self.tag.value}:{self.subcase.value}"


# Sentinel returned by classify_case for vectors that still need castling.
NON_TERMINAL = "NonTerminal"


@dataclass(frozen=True)
class RecursionTrace:
    start: DimVec
    steps: tuple[DimVec, ...]  # starts with `start`, ends with `terminal`
    terminal: DimVec
    case: TerminalCase
    d_value: int = field(default=-1)

    @property
    def length(self) -> int:
        """Number of castling steps taken."""
        return len(self.steps) - 1


def castle(d: DimVec) -> DimVec:
    p, last = d.head_product, d.last
    if not (p < 2 * last and last < p):
        raise NotCaseC(f"{d} is not in case (c): need P/2 < d_n < P with P={p}")
    return DimVec(tuple(sorted(d.dims[:-1] + (checked(p - last),))))


def _special_with_ones(d: DimVec) -> tuple[Subcase, int | None]:
    dims = d.dims
    k = 0
    while dims[k] == 1:
        k += 1
    tail = dims[k:]
    if tail == (2, 2, 2):
        return Subcase.SPECIAL_222, None
    if len(tail) == 3 and tail[0] == 2 and tail[1] == tail[2] and tail[1] >= 3:
        return Subcase.SPECIAL_2DD, tail[1]
    return Subcase.GENERIC, None


def _special_stripped(d: DimVec) -> tuple[Subcase, int | None]:
    a = strip_ones(d).dims
    if len(a) != 3 or a[0] != 2 or a[1] != a[2]:
        return Subcase.GENERIC, None
    if a[1] == 2:
        return Subcase.SPECIAL_222, None
    return Subcase.SPECIAL_2DD, a[1]


def classify_case(d: DimVec) -> TerminalCase | str:
    """Terminal case of ``d``, or NON_TERMINAL when castling applies."""
    p, last = d.head_product, d.last
    if last > p:
        return TerminalCase(CaseTag.A)
    if last == p:
        return TerminalCase(CaseTag.B)
    if 2 * last > p:
        return NON_TERMINAL
    sub = _special_with_ones(d)
    if sub != _special_stripped(d):
        raise InternalInconsistency(f"special-pattern tests disagree on {d}")
    subcase, dd = sub
    return TerminalCase(CaseTag.D, subcase, dd)


def terminal_value(terminal: DimVec, case: TerminalCase) -> int:
    if case.tag is CaseTag.A:
        return -1
    if case.tag is CaseTag.B:
        return 0
    if case.subcase is Subcase.SPECIAL_222:
        return 0
    if case.subcase is Subcase.SPECIAL_2DD:
        return case.d - 3
    return delta(terminal)


def run_recursion(d: DimVec) -> RecursionTrace:
    steps = [d]
    current = d
    budget = sum(d.dims)
    while (case := classify_case(current)) == NON_TERMINAL:
        current = castle(current)
        steps.append(current)
        if len(steps) - 1 > budget:
            raise InternalInconsistency(f"castling from {d} exceeded {budget} steps")
    return RecursionTrace(
        start=d,
        steps=tuple(steps),
        terminal=current,
        case=case,
        d_value=terminal_value(current, case),
    )


def dimension(d: DimVec) -> int:
    """Dimension of the quotient; -1 means empty."""
    return run_recursion(d).d_value
