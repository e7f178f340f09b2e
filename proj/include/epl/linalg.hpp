#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "epl/matrix.hpp"

namespace epl {

/// Raised when the Jacobi sweep hits its rotation cap before the
/// off-diagonal residual criterion is met. Carries the residual.
class EigenConvergenceError : public std::runtime_error {
public:
    EigenConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

/// Cyclic Jacobi eigendecomposition. Sweeps until the largest off-diagonal
/// entry is at most 1e-13 · ‖M‖_F, capped at 50·d² rotations. Eigenvalues are
/// returned in non-increasing order; ties keep their pre-sort order.
SymEig sym_eig(const SymMatrix& m);

/// M^p = P diag(λ_i^p) Pᵀ for any real p. For negative or fractional p all
/// eigenvalues must be positive; values in [-1e-12·λ_1, 0) are treated as
/// roundoff and clamped to 1e-12·λ_1, anything more negative is an error.
SymMatrix mat_power(const SymEig& eig, double power);

/// M + u uᵀ.
SymMatrix rank1_update(const SymMatrix& m, const Vector& u);

struct WeylReport {
    bool ok = false;
    std::vector<double> margins;  // λ_i(after) − λ_i(before)
};

/// Checks λ_i(after) ≥ λ_i(before) − 1e-10·max(1, λ_1(after)) for all i,
/// the eigenvalue monotonicity that a positive semidefinite perturbation
/// must produce.
WeylReport weyl_check(const SymEig& before, const SymEig& after);

struct TraceSandwich {
    bool ok = false;
    double lower = 0.0;
    double middle = 0.0;
    double upper = 0.0;
};

/// Trace sandwich for orthogonal conjugations of two positive spectra
/// (both sorted non-increasing):
///   Tr(Σ⁻¹Σ') ≤ Tr(QΣ⁻¹Qᵀ RΣ'Rᵀ) ≤ Tr(Σ⁻¹Σ''),
/// where Σ'' carries Σ''s values in increasing order. Checked with 1e-9
/// relative slack.
TraceSandwich trace_rotation_check(const std::vector<double>& sigma,
                                   const std::vector<double>& sigma_prime,
                                   const OrthogonalMatrix& q,
                                   const OrthogonalMatrix& r);

/// Haar-like orthogonal matrix: orthonormalized seeded Gaussian matrix.
/// Deterministic per seed.
OrthogonalMatrix random_orthogonal(int dim, std::uint64_t seed);

/// Seeded symmetric positive definite matrix with eigenvalues drawn
/// uniformly from [min_eig, max_eig].
SymMatrix random_spd(int dim, std::uint64_t seed, double min_eig = 0.5, double max_eig = 4.0);

}  // namespace epl
