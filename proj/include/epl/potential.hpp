#pragma once

#include "epl/matrix.hpp"

namespace epl {

/// A decomposed positive definite matrix M together with an exponent p > 0.
/// Defines the quadratic potential ½uᵀM^p u, the weighted norm ‖u‖_{M^{-p}}
/// and its halved square-root dual.
class PotentialSpec {
public:
    PotentialSpec(SymEig source, double exponent);

    double exponent() const { return exponent_; }
    const SymEig& source() const { return source_; }

private:
    SymEig source_;
    double exponent_;
};

/// ½ uᵀ M^p u.
double phi(const PotentialSpec& spec, const Vector& u);

/// ‖u‖_{M^{-p}} = √(Σ_i ũ_i² / λ_i^p) with ũ = Pᵀu. Evaluated in the
/// eigenbasis; M^{-p} is never formed.
double weighted_norm(const PotentialSpec& spec, const Vector& u);
double weighted_norm(const SymEig& eig, double power, const Vector& u);

/// ½ ‖u‖_{M^{-p}}.
double dual_phi(const PotentialSpec& spec, const Vector& u);

}  // namespace epl
