#include "epl/bounds.hpp"

#include <cmath>
#include <string>

namespace epl {

namespace {

constexpr double kRegimeTol = 1e-12;

void validate_bound_inputs(int horizon, int dim, double ridge, double power) {
    if (horizon < 1) {
        throw std::invalid_argument("bound: horizon must be >= 1");
    }
    if (dim < 1) {
        throw std::invalid_argument("bound: dimension must be >= 1");
    }
    if (!(ridge > 0.0)) {
        throw std::invalid_argument("bound: ridge must be positive");
    }
    if (!(power > 0.0)) {
        throw std::invalid_argument("bound: power must be positive");
    }
}

}  // namespace

BoundRegime regime_of(double power) {
    if (std::abs(power - 1.0) <= kRegimeTol) {
        return BoundRegime::PowerEqualOne;
    }
    return power > 1.0 ? BoundRegime::PowerAboveOne : BoundRegime::PowerBelowOne;
}

std::string_view regime_label(BoundRegime regime) {
    switch (regime) {
        case BoundRegime::PowerAboveOne:
            return "p>1";
        case BoundRegime::PowerEqualOne:
            return "p=1";
        case BoundRegime::PowerBelowOne:
            return "p<1";
    }
    return "";
}

double epl_upper_bound(int horizon, int dim, double ridge, double power) {
    validate_bound_inputs(horizon, dim, ridge, power);
    const double t = static_cast<double>(horizon);
    const double d = static_cast<double>(dim);
    switch (regime_of(power)) {
        case BoundRegime::PowerAboveOne:
            return std::sqrt(t * d / (std::pow(ridge, power - 1.0) * (power - 1.0)));
        case BoundRegime::PowerEqualOne:
            return std::sqrt(t * d * std::log((t + d * ridge) / (d * ridge)));
        case BoundRegime::PowerBelowOne:
            return std::sqrt(std::pow(d, power) / (1.0 - power) * t *
                             std::pow(t + d * ridge, 1.0 - power));
    }
    return 0.0;
}

NormBoundError::NormBoundError(std::size_t index, double norm)
    : std::domain_error("sequence entry " + std::to_string(index) + " has norm " +
                        std::to_string(norm) + ", which exceeds 1"),
      index_(index),
      norm_(norm) {}

EmpiricalSums epl_empirical_sums(const std::vector<Vector>& sequence, double ridge, double power) {
    if (sequence.empty()) {
        throw std::invalid_argument("empirical sum: sequence must be non-empty");
    }
    DesignAccumulator acc(static_cast<int>(sequence.front().size()), ridge, power);
    EmpiricalSums sums;
    for (std::size_t t = 0; t < sequence.size(); ++t) {
        const double len = norm2(sequence[t]);
        if (len > 1.0 + DesignAccumulator::kNormSlack) {
            throw NormBoundError(t, len);
        }
        const auto result = acc.observe(sequence[t]);
        sums.current += result.norm_before;
        sums.next += result.norm_after;
    }
    return sums;
}

double epl_empirical_sum(const std::vector<Vector>& sequence, double ridge, double power,
                         SumConvention convention) {
    const EmpiricalSums sums = epl_empirical_sums(sequence, ridge, power);
    return convention == SumConvention::Next ? sums.next : sums.current;
}

SandwichReport sandwich_check(const std::vector<Vector>& sequence, double ridge, double power) {
    if (!(ridge >= 1.0)) {
        throw std::invalid_argument("sandwich_check: ridge must be >= 1");
    }
    const EmpiricalSums sums = epl_empirical_sums(sequence, ridge, power);
    SandwichReport report;
    report.sum_next = sums.next;
    report.sum_current = sums.current;
    const double cap = std::pow(2.0, power / 2.0) * sums.next;
    const double tolerance = 1e-9 * std::max(1.0, cap);
    report.ok = sums.next <= sums.current + tolerance && sums.current <= cap + tolerance;
    return report;
}

IncrementBoundReport increment_bound_check(const DesignAccumulator& acc, int t, double power) {
    if (!(power > 0.0)) {
        throw std::invalid_argument("increment_bound_check: power must be positive");
    }
    const std::vector<double> increments = acc.eigenvalue_increments(t);
    const SymEig& after = acc.eig_at(t + 1);
    const Vector& u = acc.observations()[static_cast<std::size_t>(t) - 1];

    IncrementBoundReport report;
    const Vector coords = after.basis.apply_transposed(u);
    for (int i = 0; i < after.dim(); ++i) {
        report.lhs += coords[i] * coords[i] / std::pow(after.eigenvalues[i], power);
        report.rhs += increments[i] / std::pow(after.eigenvalues[i], power);
    }
    const double tolerance = 1e-9 * std::max(1.0, report.rhs);
    report.ok = report.lhs <= report.rhs + tolerance;
    return report;
}

std::vector<double> lower_bound_sequence(int horizon) {
    if (horizon < 1) {
        throw std::invalid_argument("lower_bound_sequence: horizon must be >= 1");
    }
    return std::vector<double>(static_cast<std::size_t>(horizon),
                               std::sqrt(1.0 / static_cast<double>(horizon)));
}

double lower_bound_value(int horizon, double ridge, double power) {
    validate_bound_inputs(horizon, 1, ridge, power);
    if (!(power > 1.0)) {
        throw std::invalid_argument("lower_bound_value: power must exceed 1");
    }
    return std::sqrt(static_cast<double>(horizon)) * std::pow(ridge + 1.0, -power / 2.0);
}

}  // namespace epl
