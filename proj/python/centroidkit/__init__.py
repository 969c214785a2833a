"""Exact centroid computations for finite-dimensional Lie algebras."""

from ._centroidkit import (
    AssocAlgebra,
    LieAlgebra,
    ParseError,
    abelian,
    centre,
    centroid,
    centroid_cap_der,
    centroid_dim,
    classical,
    derivations_dim,
    derived,
    direct_sum,
    field_ext,
    group_algebra,
    h2_dim,
    heisenberg,
    local_analysis,
    loop_membership,
    matrix_assoc,
    oscillator,
    restrict_scalars,
    rootgraded,
    run_suite,
    sl_n_over,
    suite_names,
    tensor,
    toral_centroid_dim,
    truncated_poly,
    validate_cocycle,
    window_exclusion,
)

__all__ = [name for name in dir() if not name.startswith("_")]
