"""Exact integer invariants of dimension vectors.

All arithmetic is done with Python ints, but every intermediate that could
grow (products, squared-gcd sums) is range-checked against signed 128-bit
bounds so that results match a fixed-width implementation and runaway inputs
are reported instead of silently computed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd, lcm, prod
from typing import Iterable

from .errors import DimOverflow, InsufficientNontrivial, NonPositiveEntry, TooFewSubsystems

INT128_MAX = (1 << 127) - 1
INT128_MIN = -(1 << 127)


def checked(value: int) -> int:
    if not INT128_MIN <= value <= INT128_MAX:
        raise DimOverflow(f"value {value} exceeds the signed 128-bit range")
    return value


@dataclass(frozen=True, order=True)
class DimVec:
    """Weakly increasing tuple of local dimensions; build with validate_dims."""

    dims: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def head_product(self) -> int:
        """P = d_1 ... d_{n-1}."""
        return checked(prod(self.dims[:-1]))

    @property
    def last(self) -> int:
        return self.dims[-1]

    def __iter__(self):
        return iter(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.dims)) + ")"


@dataclass(frozen=True)
class InvariantBundle:
    delta: int
    r: int
    gmax: int
    product: int


def validate_dims(raw: Iterable[int]) -> DimVec:
    dims = [int(x) for x in raw]
    if len(dims) < 2:
        raise TooFewSubsystems(f"need at least 2 subsystems, got {len(dims)}")
    bad = [x for x in dims if x < 1]
    if bad:
        raise NonPositiveEntry(f"dimensions must be positive, got {bad}")
    if sum(1 for x in dims if x >= 2) < 2:
        raise InsufficientNontrivial(
            f"at least two subsystems of dimension >= 2 are required, got {dims}"
        )
    checked(prod(dims))
    return DimVec(tuple(sorted(dims)))


def product(d: DimVec) -> int:
    return checked(prod(d.dims))


def delta(d: DimVec) -> int:
    """Expected dimension: prod d_i - 1 - sum (d_i^2 - 1)."""
    return checked(product(d) - 1 - checked(sum(x * x - 1 for x in d.dims)))


def gk(d: DimVec, k: int) -> int:
    """Sum over k-subsets of the squared gcd of the chosen entries."""
    if not 1 <= k <= d.n:
        raise ValueError(f"k must lie in [1, {d.n}], got {k}")
    total = 0
    for subset in combinations(d.dims, k):
        g = reduce(gcd, subset)
        total = checked(total + g * g)
    return total


def r_invariant(d: DimVec) -> int:
    total = product(d)
    for k in range(1, d.n + 1):
        total = checked(total + (-1) ** k * gk(d, k))
    return total


def gmax(d: DimVec) -> int:
    return max(gcd(a, b) for a, b in combinations(d.dims, 2))


def lcm_all(d: DimVec) -> int:
    return checked(lcm(*d.dims))


def strip_ones(d: DimVec) -> DimVec:
    rest = tuple(x for x in d.dims if x != 1)
    if len(rest) < 2:
        raise InsufficientNontrivial(f"fewer than two entries remain after removing 1s from {d}")
    return DimVec(rest)


def invariants(d: DimVec) -> InvariantBundle:
    return InvariantBundle(delta=delta(d), r=r_invariant(d), gmax=gmax(d), product=product(d))
