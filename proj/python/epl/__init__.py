"""Generalized elliptical potential lemma: bounds, verifiers, bandit harness."""

from ._core import (
    DesignAccumulator,
    Rng,
    dual_phi,
    epl_empirical_sums,
    epl_upper_bound,
    format_fixed6,
    integral_comparison_check,
    jensen_step_check,
    lower_bound_sequence,
    lower_bound_value,
    make_sequence,
    mat_power,
    phi,
    proof_chain_report,
    random_orthogonal,
    random_spd,
    read_sequence_file,
    regime,
    run_bandit,
    sandwich_check,
    sym_eig,
    trace_rotation_check,
    weighted_norm,
    weyl_check,
)

__all__ = [
    "DesignAccumulator",
    "Rng",
    "dual_phi",
    "epl_empirical_sums",
    "epl_upper_bound",
    "format_fixed6",
    "integral_comparison_check",
    "jensen_step_check",
    "lower_bound_sequence",
    "lower_bound_value",
    "make_sequence",
    "mat_power",
    "phi",
    "proof_chain_report",
    "random_orthogonal",
    "random_spd",
    "read_sequence_file",
    "regime",
    "run_bandit",
    "sandwich_check",
    "sym_eig",
    "trace_rotation_check",
    "weighted_norm",
    "weyl_check",
]
