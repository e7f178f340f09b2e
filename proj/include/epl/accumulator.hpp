#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "epl/matrix.hpp"

namespace epl {

/// Running design matrix V_t = ridge·I + Σ_{s<t} u_s u_sᵀ with full spectral
/// history. The step counter starts at 1 (V_1 = ridge·I) and advances once
/// per accepted observation. Observations must satisfy ‖u‖₂ ≤ 1 + 1e-12.
///
/// Single-owner mutable state: do not mutate concurrently. The history
/// accessors return immutable snapshots.
class DesignAccumulator {
public:
    static constexpr double kNormSlack = 1e-12;

    DesignAccumulator(int dim, double ridge, double power = 1.0);

    struct ObserveResult {
        double norm_before;  // ‖u‖ at V_t^{-p}
        double norm_after;   // ‖u‖ at V_{t+1}^{-p}
    };

    /// Advances V by u uᵀ and returns both potential norms for the
    /// configured exponent. Rejects (no state change) if ‖u‖₂ > 1 + 1e-12.
    ObserveResult observe(const Vector& u);

    int dim() const { return dim_; }
    double ridge() const { return ridge_; }
    double power() const { return power_; }
    int step() const { return static_cast<int>(eig_history_.size()); }  // t ≥ 1

    const SymMatrix& matrix() const { return v_; }
    const SymEig& eig() const { return eig_history_.back(); }
    const SymEig& eig_at(int t) const;  // decomposition of V_t, 1 ≤ t ≤ step()

    /// eigenvalue_history()[t-1][i] = λ_{i+1}(t), sorted non-increasing.
    const std::vector<std::vector<double>>& eigenvalue_history() const { return value_history_; }
    const std::vector<Vector>& observations() const { return observations_; }

    /// ε²_{i,t} = λ_i(t+1) − λ_i(t) for 1 ≤ t < step(); tiny negative
    /// roundoff is clamped to 0.
    std::vector<double> eigenvalue_increments(int t) const;

    double norm_before_at(int t) const;  // observation t, 1 ≤ t < step()
    double norm_after_at(int t) const;

    /// CSV rows `t,i,lambda_i,eps_sq_i,norm_before,norm_after`, one row per
    /// (observation, eigenvalue index). i is 1-based; lambda_i is λ_i(t+1).
    void write_snapshot_csv(std::ostream& out) const;
    std::string snapshot_csv() const;

private:
    int dim_;
    double ridge_;
    double power_;
    SymMatrix v_;
    std::vector<SymEig> eig_history_;                 // [s] = decomposition of V_{s+1}
    std::vector<std::vector<double>> value_history_;  // eigenvalues only
    std::vector<Vector> observations_;
    std::vector<double> norms_before_;
    std::vector<double> norms_after_;
};

}  // namespace epl
