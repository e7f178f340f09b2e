#pragma once

#include <string>
#include <vector>

#include "epl/accumulator.hpp"
#include "epl/matrix.hpp"

namespace epl {

/// One checkable inequality: pass iff lhs ≤ rhs + step-specific tolerance
/// (identity steps use a two-sided tolerance). slack = rhs − lhs.
struct ProofStepReport {
    std::string step;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = false;
};

/// Σ a_i ≤ √(n · Σ a_i²) for non-negative entries; 1e-12 absolute slack.
ProofStepReport jensen_step_check(const std::vector<double>& values);

/// Riemann-type lower sum against the closed-form integral of x^{-p}:
///   Σ_t ε̃_t (λ + Σ_{u≤t} ε̃_u)^{-p}  ≤  ∫_λ^{λ+Σε̃} x^{-p} dx,
/// with 1e-10 relative slack. Entries must be non-negative, λ > 0, p > 0.
ProofStepReport integral_comparison_check(const std::vector<double>& increments, double ridge,
                                          double power);

/// Telescoping identity λ_i(t+1) = λ + Σ_{u≤t} ε²_{i,u}, 1e-9 relative,
/// two-sided. index is the 0-based eigenvalue index; t = 0 checks the
/// boundary λ_i(1) = λ.
ProofStepReport substitution_identity_check(const DesignAccumulator& acc, int index, int t);

/// The full chain from the empirical potential sum to the closed-form bound,
/// one report per link. Link k's rhs is link k+1's lhs, so a passing chain
/// demonstrates sum ≤ … ≤ bound with each step only loosening.
///
/// Links: per_step_increment_sum, jensen_aggregation, integral_comparison,
/// regime_integral_bound, final_bound_formula (the last is an equality
/// check at 1e-12 between the chain's closed form and epl_upper_bound).
std::vector<ProofStepReport> proof_chain_report(const std::vector<Vector>& sequence, double ridge,
                                                double power);

}  // namespace epl
