#include "epl/potential.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace epl {

PotentialSpec::PotentialSpec(SymEig source, double exponent)
    : source_(std::move(source)), exponent_(exponent) {
    if (!(exponent_ > 0.0)) {
        throw std::invalid_argument("PotentialSpec: exponent must be positive");
    }
    for (double value : source_.eigenvalues) {
        if (!(value > 0.0)) {
            throw std::domain_error("PotentialSpec: matrix must be positive definite, got eigenvalue " +
                                    std::to_string(value));
        }
    }
}

double phi(const PotentialSpec& spec, const Vector& u) {
    const SymEig& eig = spec.source();
    if (static_cast<int>(u.size()) != eig.dim()) {
        throw std::invalid_argument("phi: dimension mismatch");
    }
    const Vector coords = eig.basis.apply_transposed(u);
    double sum = 0.0;
    for (int i = 0; i < eig.dim(); ++i) {
        sum += coords[i] * coords[i] * std::pow(eig.eigenvalues[i], spec.exponent());
    }
    return 0.5 * sum;
}

double weighted_norm(const SymEig& eig, double power, const Vector& u) {
    if (static_cast<int>(u.size()) != eig.dim()) {
        throw std::invalid_argument("weighted_norm: dimension mismatch");
    }
    const Vector coords = eig.basis.apply_transposed(u);
    double sum = 0.0;
    for (int i = 0; i < eig.dim(); ++i) {
        const double value = eig.eigenvalues[i];
        if (!(value > 0.0)) {
            throw std::domain_error("weighted_norm: matrix must be positive definite");
        }
        sum += coords[i] * coords[i] / std::pow(value, power);
    }
    return std::sqrt(sum);
}

double weighted_norm(const PotentialSpec& spec, const Vector& u) {
    return weighted_norm(spec.source(), spec.exponent(), u);
}

double dual_phi(const PotentialSpec& spec, const Vector& u) {
    return 0.5 * weighted_norm(spec, u);
}

}  // namespace epl
