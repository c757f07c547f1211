"""Exact enumeration of restricted lattice walks (C++ core)."""

from ._core import (
    GuardExceeded,
    InputError,
    __version__,
    aa_closed,
    ab_closed,
    ace3d_count,
    binomial,
    canonicalize_type,
    catalan,
    central_binomial_any,
    central_binomial_even,
    count_dp,
    dyck_to_touchard,
    enumerate,
    enumerate_dyck,
    general_count,
    golden_table3,
    halfplane_closed,
    motzkin,
    multinomial,
    quadrant_axis_sum,
    render_walk,
    sequence_dp,
    table2_map,
    to_two_colored_motzkin,
    touchard_terms,
    touchard_to_dyck,
    validate,
    vandermonde_chain,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
