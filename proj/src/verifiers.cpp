#include "epl/verifiers.hpp"

#include <cmath>
#include <stdexcept>

#include "epl/bounds.hpp"

namespace epl {

namespace {

ProofStepReport make_report(std::string step, double lhs, double rhs, double tolerance,
                            bool two_sided) {
    ProofStepReport report;
    report.step = std::move(step);
    report.lhs = lhs;
    report.rhs = rhs;
    report.slack = rhs - lhs;
    report.pass = two_sided ? std::abs(lhs - rhs) <= tolerance : lhs <= rhs + tolerance;
    return report;
}

// ∫_lo^hi x^{-p} dx, evaluated analytically.
double power_integral(double lo, double hi, double power) {
    if (regime_of(power) == BoundRegime::PowerEqualOne) {
        return std::log(hi / lo);
    }
    const double q = 1.0 - power;
    return (std::pow(hi, q) - std::pow(lo, q)) / q;
}

}  // namespace

ProofStepReport jensen_step_check(const std::vector<double>& values) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double value : values) {
        if (value < 0.0) {
            throw std::domain_error("jensen_step_check: entries must be non-negative");
        }
        sum += value;
        sum_sq += value * value;
    }
    const double rhs = std::sqrt(static_cast<double>(values.size()) * sum_sq);
    return make_report("jensen_aggregation", sum, rhs, 1e-12, false);
}

ProofStepReport integral_comparison_check(const std::vector<double>& increments, double ridge,
                                          double power) {
    if (!(ridge > 0.0)) {
        throw std::invalid_argument("integral_comparison_check: ridge must be positive");
    }
    if (!(power > 0.0)) {
        throw std::invalid_argument("integral_comparison_check: power must be positive");
    }
    double running = ridge;
    double riemann = 0.0;
    for (double increment : increments) {
        if (increment < 0.0) {
            throw std::domain_error("integral_comparison_check: increments must be non-negative");
        }
        running += increment;
        riemann += increment * std::pow(running, -power);
    }
    const double integral = power_integral(ridge, running, power);
    return make_report("integral_comparison", riemann, integral,
                       1e-10 * std::max(1.0, std::abs(integral)), false);
}

ProofStepReport substitution_identity_check(const DesignAccumulator& acc, int index, int t) {
    if (index < 0 || index >= acc.dim()) {
        throw std::out_of_range("substitution_identity_check: eigenvalue index out of range");
    }
    if (t < 0 || t >= acc.step()) {
        throw std::out_of_range("substitution_identity_check: t out of range");
    }
    double rhs = acc.ridge();
    for (int u = 1; u <= t; ++u) {
        rhs += acc.eigenvalue_increments(u)[index];
    }
    const double lhs = acc.eig_at(t + 1).eigenvalues[index];
    return make_report("substitution_identity", lhs, rhs, 1e-9 * std::max(1.0, std::abs(rhs)),
                       true);
}

std::vector<ProofStepReport> proof_chain_report(const std::vector<Vector>& sequence, double ridge,
                                                double power) {
    if (sequence.empty()) {
        throw std::invalid_argument("proof_chain_report: sequence must be non-empty");
    }
    const int dim = static_cast<int>(sequence.front().size());
    const int horizon = static_cast<int>(sequence.size());

    DesignAccumulator acc(dim, ridge, power);
    double sum_norms = 0.0;
    for (std::size_t t = 0; t < sequence.size(); ++t) {
        const double len = norm2(sequence[t]);
        if (len > 1.0 + DesignAccumulator::kNormSlack) {
            throw NormBoundError(t, len);
        }
        sum_norms += acc.observe(sequence[t]).norm_after;
    }

    // Per-step eigenvalue-increment surrogates q_t = Σ_i ε²_{i,t}/λ_i(t+1)^p.
    double sum_roots = 0.0;
    double sum_q = 0.0;
    for (int t = 1; t <= horizon; ++t) {
        const std::vector<double> increments = acc.eigenvalue_increments(t);
        const SymEig& after = acc.eig_at(t + 1);
        double q = 0.0;
        for (int i = 0; i < dim; ++i) {
            q += increments[i] / std::pow(after.eigenvalues[i], power);
        }
        sum_roots += std::sqrt(q);
        sum_q += q;
    }

    const double jensen_value = std::sqrt(static_cast<double>(horizon) * sum_q);

    double integral_total = 0.0;
    const SymEig& last = acc.eig_at(horizon + 1);
    for (int i = 0; i < dim; ++i) {
        integral_total += power_integral(ridge, last.eigenvalues[i], power);
    }
    const double integral_value = std::sqrt(static_cast<double>(horizon) * integral_total);

    const double t_real = static_cast<double>(horizon);
    const double d_real = static_cast<double>(dim);
    double regime_value = 0.0;
    switch (regime_of(power)) {
        case BoundRegime::PowerAboveOne:
            regime_value = std::sqrt(t_real * d_real * std::pow(ridge, 1.0 - power) / (power - 1.0));
            break;
        case BoundRegime::PowerEqualOne:
            regime_value = std::sqrt(t_real * d_real * std::log1p(t_real / (d_real * ridge)));
            break;
        case BoundRegime::PowerBelowOne:
            regime_value = std::sqrt(t_real * d_real *
                                     std::pow((t_real + d_real * ridge) / d_real, 1.0 - power) /
                                     (1.0 - power));
            break;
    }

    const double bound = epl_upper_bound(horizon, dim, ridge, power);

    std::vector<ProofStepReport> chain;
    chain.push_back(make_report("per_step_increment_sum", sum_norms, sum_roots,
                                1e-9 * std::max(1.0, std::abs(sum_roots)), false));
    chain.push_back(make_report("jensen_aggregation", sum_roots, jensen_value,
                                1e-9 * std::max(1.0, std::abs(jensen_value)), false));
    chain.push_back(make_report("integral_comparison", jensen_value, integral_value,
                                1e-9 * std::max(1.0, std::abs(integral_value)), false));
    chain.push_back(make_report("regime_integral_bound", integral_value, regime_value,
                                1e-9 * std::max(1.0, std::abs(regime_value)), false));
    chain.push_back(make_report("final_bound_formula", regime_value, bound,
                                1e-12 * std::max(1.0, std::abs(bound)), true));
    return chain;
}

}  // namespace epl
