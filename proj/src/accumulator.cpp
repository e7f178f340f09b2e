#include "epl/accumulator.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "epl/format.hpp"
#include "epl/linalg.hpp"
#include "epl/potential.hpp"

namespace epl {

DesignAccumulator::DesignAccumulator(int dim, double ridge, double power)
    : dim_(dim), ridge_(ridge), power_(power) {
    if (dim < 1) {
        throw std::invalid_argument("DesignAccumulator: dimension must be >= 1");
    }
    if (!(ridge > 0.0)) {
        throw std::invalid_argument("DesignAccumulator: ridge must be positive");
    }
    if (!(power > 0.0)) {
        throw std::invalid_argument("DesignAccumulator: power must be positive");
    }
    v_ = SymMatrix::scaled_identity(dim, ridge);
    eig_history_.push_back(sym_eig(v_));
    value_history_.push_back(eig_history_.back().eigenvalues);
}

DesignAccumulator::ObserveResult DesignAccumulator::observe(const Vector& u) {
    if (static_cast<int>(u.size()) != dim_) {
        throw std::invalid_argument("observe: dimension mismatch");
    }
    const double len = norm2(u);
    if (len > 1.0 + kNormSlack) {
        throw std::invalid_argument("observe: observation norm " + std::to_string(len) +
                                    " exceeds 1");
    }

    ObserveResult result;
    result.norm_before = weighted_norm(eig_history_.back(), power_, u);

    v_ = rank1_update(v_, u);
    eig_history_.push_back(sym_eig(v_));
    value_history_.push_back(eig_history_.back().eigenvalues);
    observations_.push_back(u);

    result.norm_after = weighted_norm(eig_history_.back(), power_, u);
    norms_before_.push_back(result.norm_before);
    norms_after_.push_back(result.norm_after);
    return result;
}

const SymEig& DesignAccumulator::eig_at(int t) const {
    if (t < 1 || t > step()) {
        throw std::out_of_range("eig_at: t must be in [1, step()]");
    }
    return eig_history_[static_cast<std::size_t>(t) - 1];
}

std::vector<double> DesignAccumulator::eigenvalue_increments(int t) const {
    if (t < 1 || t >= step()) {
        throw std::out_of_range("eigenvalue_increments: t must be in [1, step())");
    }
    const auto& before = value_history_[static_cast<std::size_t>(t) - 1];
    const auto& after = value_history_[static_cast<std::size_t>(t)];
    std::vector<double> increments(dim_);
    for (int i = 0; i < dim_; ++i) {
        increments[i] = std::max(0.0, after[i] - before[i]);
    }
    return increments;
}

double DesignAccumulator::norm_before_at(int t) const {
    if (t < 1 || t >= step()) {
        throw std::out_of_range("norm_before_at: t must be in [1, step())");
    }
    return norms_before_[static_cast<std::size_t>(t) - 1];
}

double DesignAccumulator::norm_after_at(int t) const {
    if (t < 1 || t >= step()) {
        throw std::out_of_range("norm_after_at: t must be in [1, step())");
    }
    return norms_after_[static_cast<std::size_t>(t) - 1];
}

void DesignAccumulator::write_snapshot_csv(std::ostream& out) const {
    out << "t,i,lambda_i,eps_sq_i,norm_before,norm_after\n";
    for (int t = 1; t < step(); ++t) {
        const std::vector<double> increments = eigenvalue_increments(t);
        const auto& after = value_history_[static_cast<std::size_t>(t)];
        for (int i = 0; i < dim_; ++i) {
            out << t << ',' << (i + 1) << ',' << format_fixed6(after[i]) << ','
                << format_fixed6(increments[i]) << ',' << format_fixed6(norms_before_[t - 1])
                << ',' << format_fixed6(norms_after_[t - 1]) << '\n';
        }
    }
}

std::string DesignAccumulator::snapshot_csv() const {
    std::ostringstream out;
    write_snapshot_csv(out);
    return out.str();
}

}  // namespace epl
