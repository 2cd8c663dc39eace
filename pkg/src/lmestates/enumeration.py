"""Exhaustive enumeration of dimension vectors and per-vector record rows."""
from __future__ import annotations

import heapq
from dataclasses import astuple, dataclass, fields
from typing import Iterator, Union

from .arith import DimVec, lcm_all, validate_dims
from .classify import cross_check, hyperdet_nonzero
from .errors import DimOverflow


@dataclass(frozen=True)
class EnumerationBounds:
    n_min: int = 2
    n_max: int = 3
    max_product: int = 64
    max_entry: int | None = None  # None: limited only by max_product
    require_nontrivial: bool = True

    def __post_init__(self):
        if not 2 <= self.n_min <= self.n_max:
            raise ValueError(f"need 2 <= n_min <= n_max, got {self.n_min}, {self.n_max}")
        if self.max_product < 4:
            raise ValueError("max_product must be >= 4")
        if self.max_entry is not None and self.max_entry < 2:
            raise ValueError("max_entry must be >= 2")
        if not self.require_nontrivial:
            raise ValueError("vectors with fewer than two entries >= 2 are not admissible")

    @property
    def entry_cap(self) -> int:
        if self.max_entry is None:
            return self.max_product
        return min(self.max_entry, self.max_product)


@dataclass(frozen=True)
class RecordRow:
    dims: str
    delta: int
    r: int
    gmax: int
    product: int
    status: int
    terminal_case: str
    terminal_vector: str
    trace_length: int
    hyperdet_nonzero: bool
    lcm: int

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def values(self) -> tuple:
        return astuple(self)


@dataclass(frozen=True)
class OverflowRecord:
    dims: str
    warning: str = "overflow"


def _tuples(n: int, lo: int, budget: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing n-tuples with entries in [lo, cap] and product <= budget, in lex order."""
    if n == 0:
        yield ()
        return
    x = lo
    while x <= cap and x**n <= budget:
        for rest in _tuples(n - 1, x, budget // x, cap):
            yield (x,) + rest
        x += 1


def dim_vectors(bounds: EnumerationBounds) -> Iterator[tuple[int, ...]]:
    """Every admissible weakly increasing vector within bounds, once, in lexicographic order."""
    streams = [
        _tuples(n, 1, bounds.max_product, bounds.entry_cap)
        for n in range(bounds.n_min, bounds.n_max + 1)
    ]
    for t in heapq.merge(*streams):
        if sum(1 for x in t if x >= 2) < 2:
            continue
        yield t


def make_row(d: DimVec) -> RecordRow:
    rep = cross_check(d)
    inv = rep.closed_form.invariants_used
    return RecordRow(
        dims=str(d),
        delta=inv.delta,
        r=inv.r,
        gmax=inv.gmax,
        product=inv.product,
        status=rep.closed_form.value,
        terminal_case=str(rep.trace.case),
        terminal_vector=str(rep.trace.terminal),
        trace_length=rep.trace.length,
        hyperdet_nonzero=hyperdet_nonzero(d),
        lcm=lcm_all(d),
    )


def enumerate_rows(bounds: EnumerationBounds) -> Iterator[Union[RecordRow, OverflowRecord]]:
    for t in dim_vectors(bounds):
        try:
            yield make_row(validate_dims(t))
        except DimOverflow:
            yield OverflowRecord(dims="(" + ",".join(map(str, t)) + ")")
