#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "epl/accumulator.hpp"
#include "epl/matrix.hpp"

namespace epl {

enum class BoundRegime { PowerAboveOne, PowerEqualOne, PowerBelowOne };

/// Pure function of the exponent; |p − 1| ≤ 1e-12 counts as p = 1.
BoundRegime regime_of(double power);
std::string_view regime_label(BoundRegime regime);

/// Closed-form upper bound on Σ_{t≤T} ‖u_t‖_{V_{t+1}^{-p}}:
///   p > 1:  √(T d / (λ^{p-1}(p-1)))
///   p = 1:  √(T d log((T + dλ)/(dλ)))
///   p < 1:  √(d^p/(1-p) · T · (T + dλ)^{1-p})
double epl_upper_bound(int horizon, int dim, double ridge, double power);

enum class SumConvention {
    Current,  // summand ‖u_t‖_{V_t^{-p}}
    Next,     // summand ‖u_t‖_{V_{t+1}^{-p}}
};

/// A sequence entry broke ‖u‖₂ ≤ 1 + 1e-12; carries the offending index.
class NormBoundError : public std::domain_error {
public:
    NormBoundError(std::size_t index, double norm);

    std::size_t index() const { return index_; }
    double norm() const { return norm_; }

private:
    std::size_t index_;
    double norm_;
};

/// Runs an accumulator over the sequence and sums the chosen summand.
double epl_empirical_sum(const std::vector<Vector>& sequence, double ridge, double power,
                         SumConvention convention);

struct EmpiricalSums {
    double next = 0.0;
    double current = 0.0;
};

/// Both conventions in one pass.
EmpiricalSums epl_empirical_sums(const std::vector<Vector>& sequence, double ridge, double power);

struct SandwichReport {
    double sum_next = 0.0;
    double sum_current = 0.0;
    bool ok = false;
};

/// Two-sided relation sum_next ≤ sum_current ≤ 2^{p/2}·sum_next, checked
/// with 1e-9 relative slack. Requires ridge ≥ 1.
SandwichReport sandwich_check(const std::vector<Vector>& sequence, double ridge, double power);

struct IncrementBoundReport {
    double lhs = 0.0;  // ‖u_t‖²_{V_{t+1}^{-p}}
    double rhs = 0.0;  // Σ_i (λ_i(t+1) − λ_i(t)) / λ_i(t+1)^p
    bool ok = false;
};

/// Per-step eigenvalue-increment bound at observation t of the accumulator's
/// history, for any exponent p (not just the configured one). In dimension
/// one the two sides agree exactly.
IncrementBoundReport increment_bound_check(const DesignAccumulator& acc, int t, double power);

/// The constant sequence u_t = √(1/T) whose potential sum stays above
/// lower_bound_value for every p > 1 in dimension one.
std::vector<double> lower_bound_sequence(int horizon);

/// √T · (λ + 1)^{-p/2}, valid for p > 1.
double lower_bound_value(int horizon, double ridge, double power);

}  // namespace epl
