"""Reversible cellular automata: inverses, block neighborhoods and block circuits."""

from ._core import (
    BlockCircuit,
    FinitePermutation,
    Involution,
    LocalRule,
    Neighborhood,
    NotInjective,
    RcaError,
    ReversibleCA,
    VerificationReport,
    apply_circuit,
    apply_cyclic,
    assemble_circuit,
    block_neighborhood,
    bn_upper_bound,
    compose,
    dump_circuit,
    ebr_of_square,
    equal,
    find_time_symmetries,
    format_rule,
    invert,
    is_injective,
    is_ltsca,
    localization,
    minimize_neighborhood,
    parse_rule,
    product,
    reversible_update,
    time_symmetrize,
    verify_block_representation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
