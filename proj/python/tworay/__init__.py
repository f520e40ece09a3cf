"""Exact-integer verification engine for two-ray games on Fano threefolds.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from tworay._core import (
    Center,
    YInvariants,
    allowed_hw3,
    blowup_invariants,
    chi_exceptional,
    chi_exceptional_rational,
    chi_minus_k,
    d_intersections,
    divcont_parity_witness,
    divcont_solutions,
    e1_derived,
    e2_target_volume,
    flop_table,
    gbound_scan,
    golden_table,
    identity_sweep,
    nonfano_search,
    omega_d_squared,
    rr_h0,
    section_lower_bound,
    triple_product,
    verify,
)

__all__ = [
    "Center",
    "YInvariants",
    "allowed_hw3",
    "blowup_invariants",
    "chi_exceptional",
    "chi_exceptional_rational",
    "chi_minus_k",
    "d_intersections",
    "divcont_parity_witness",
    "divcont_solutions",
    "e1_derived",
    "e2_target_volume",
    "flop_table",
    "gbound_scan",
    "golden_table",
    "identity_sweep",
    "nonfano_search",
    "omega_d_squared",
    "rr_h0",
    "section_lower_bound",
    "triple_product",
    "verify",
]
