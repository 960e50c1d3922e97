"""Exact combinatorics of free cumulants over the non-crossing partition lattice."""
from .cumulants import (
    InconsistencyError,
    IntervalGrouping,
    bracket_cumulant,
    cumulant_of_products,
    cumulants_from_moments,
    k_pi_eval,
    k_sigma_generalized,
    moments_from_cumulants,
    phi_pi_eval,
    tau_hat,
)
from .free import (
    RDiagonalSpec,
    check_freeness_moment_form,
    free_mult_cumulants,
    free_product,
    haar_unitary,
    is_alternating,
    is_r_diagonal,
    r_diagonal_from_spec,
    rdiag_aastar_cumulants,
    rdiag_product_cumulants,
    sandwich_cumulants,
    verify_power_rdiag,
    verify_ux_invariance,
)
from .partitions import (
    NcPartition,
    SetPartition,
    enumerate_nc,
    interval_partition,
    is_noncrossing,
    join,
    kreweras,
    leq,
    meet,
    moebius,
    parse_partition,
)
from .words import (
    CumulantTable,
    Letter,
    MomentFunctional,
    evaluate,
    parse_word,
    same_distribution,
)

__version__ = "0.1.0"
