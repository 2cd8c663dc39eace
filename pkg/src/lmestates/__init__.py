"""Locally maximally entangled states: existence, quotient dimension, witnesses.

The quotient P(V)//G for V = C^{d_1} (x) ... (x) C^{d_n} and
G = SL_{d_1} x ... x SL_{d_n} is nonempty exactly when an LME state exists.
Two independent routes compute its dimension: the closed form in
:mod:`lmestates.classify` and the castling recursion in
:mod:`lmestates.recursion`. :mod:`lmestates.witness` searches numerically for
an explicit LME state.
"""
from .arith import (
    DimVec,
    InvariantBundle,
    delta,
    gk,
    gmax,
    invariants,
    r_invariant,
    strip_ones,
    validate_dims,
)
from .classify import (
    Classification,
    ConsistencyReport,
    Status,
    classify,
    classify_2bc,
    cross_check,
    hyperdet_nonzero,
    invariant_degrees,
)
from .recursion import RecursionTrace, TerminalCase, castle, classify_case, dimension, run_recursion
from .witness import (
    PureState,
    WitnessConfig,
    WitnessReport,
    lme_residual,
    random_state,
    reduced_density,
    residual_gradient,
    search_witness,
    verify_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
