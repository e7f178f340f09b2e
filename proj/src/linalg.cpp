#include "epl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "epl/rng.hpp"

namespace epl {

namespace {

constexpr double kOffDiagonalFactor = 1e-13;  // convergence: max offdiag ≤ factor·‖M‖_F

double max_off_diagonal(const Matrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = i + 1; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j)));
        }
    }
    return m;
}

// One Jacobi rotation zeroing a(p,q); accumulates the rotation into v.
void jacobi_rotate(Matrix& a, Matrix& v, int p, int q) {
    const double apq = a(p, q);
    const double app = a(p, p);
    const double aqq = a(q, q);

    const double theta = (aqq - app) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);  // avoids overflow in theta²
    } else {
        t = ((theta >= 0.0) ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    const int d = a.rows();
    for (int i = 0; i < d; ++i) {
        if (i == p || i == q) continue;
        const double aip = a(i, p);
        const double aiq = a(i, q);
        a(i, p) = c * aip - s * aiq;
        a(p, i) = a(i, p);
        a(i, q) = s * aip + c * aiq;
        a(q, i) = a(i, q);
    }
    for (int i = 0; i < d; ++i) {
        const double vip = v(i, p);
        const double viq = v(i, q);
        v(i, p) = c * vip - s * viq;
        v(i, q) = s * vip + c * viq;
    }
}

// Q diag(values) Qᵀ as a plain dense matrix.
Matrix conjugate_diagonal(const Matrix& q, const std::vector<double>& values) {
    const int d = q.rows();
    Matrix out(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            double sum = 0.0;
            for (int k = 0; k < d; ++k) {
                sum += q(i, k) * values[k] * q(j, k);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

}  // namespace

SymEig sym_eig(const SymMatrix& m) {
    const int d = m.dim();
    Matrix a = m.dense();
    Matrix v = Matrix::identity(d);

    if (d > 1) {
        const double threshold = kOffDiagonalFactor * m.frobenius_norm();
        const long rotation_cap = 50L * d * d;
        long rotations = 0;
        while (true) {
            const double off = max_off_diagonal(a);
            if (off <= threshold) break;
            if (rotations >= rotation_cap) {
                throw EigenConvergenceError(
                    "sym_eig: Jacobi sweep hit the rotation cap with off-diagonal residual " +
                        std::to_string(off),
                    off);
            }
            for (int p = 0; p < d - 1; ++p) {
                for (int q = p + 1; q < d; ++q) {
                    if (a(p, q) != 0.0) {
                        jacobi_rotate(a, v, p, q);
                        ++rotations;
                    }
                }
            }
        }
    }

    // Non-increasing order; stable so degenerate eigenvalues keep their
    // pre-sort position.
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int lhs, int rhs) { return a(lhs, lhs) > a(rhs, rhs); });

    SymEig eig;
    eig.eigenvalues.resize(d);
    eig.basis = Matrix(d, d);
    for (int j = 0; j < d; ++j) {
        eig.eigenvalues[j] = a(order[j], order[j]);
        for (int i = 0; i < d; ++i) {
            eig.basis(i, j) = v(i, order[j]);
        }
    }
    return eig;
}

SymMatrix mat_power(const SymEig& eig, double power) {
    const int d = eig.dim();
    std::vector<double> powered(d);
    const bool integral = std::floor(power) == power;
    const bool needs_positive = power < 0.0 || !integral;
    const double lead = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    const double clamp_floor = 1e-12 * lead;

    for (int i = 0; i < d; ++i) {
        double value = eig.eigenvalues[i];
        if (needs_positive && value <= 0.0) {
            if (lead > 0.0 && value >= -clamp_floor && value < 0.0) {
                value = clamp_floor;  // roundoff negative from the sweep
            } else {
                throw std::domain_error(
                    "mat_power: eigenvalue " + std::to_string(value) +
                    " is not positive; fractional or negative powers need a positive spectrum");
            }
        }
        powered[i] = std::pow(value, power);
    }
    return SymMatrix::from_dense(conjugate_diagonal(eig.basis, powered));
}

SymMatrix rank1_update(const SymMatrix& m, const Vector& u) {
    const int d = m.dim();
    if (static_cast<int>(u.size()) != d) {
        throw std::invalid_argument("rank1_update: dimension mismatch");
    }
    SymMatrix out = m;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            out.set(i, j, out(i, j) + u[i] * u[j]);
        }
    }
    return out;
}

WeylReport weyl_check(const SymEig& before, const SymEig& after) {
    if (before.dim() != after.dim()) {
        throw std::invalid_argument("weyl_check: dimension mismatch");
    }
    WeylReport report;
    const double top = after.eigenvalues.empty() ? 0.0 : after.eigenvalues.front();
    const double tolerance = 1e-10 * std::max(1.0, top);
    report.ok = true;
    report.margins.resize(before.dim());
    for (int i = 0; i < before.dim(); ++i) {
        report.margins[i] = after.eigenvalues[i] - before.eigenvalues[i];
        if (report.margins[i] < -tolerance) {
            report.ok = false;
        }
    }
    return report;
}

TraceSandwich trace_rotation_check(const std::vector<double>& sigma,
                                   const std::vector<double>& sigma_prime,
                                   const OrthogonalMatrix& q, const OrthogonalMatrix& r) {
    const int d = static_cast<int>(sigma.size());
    if (static_cast<int>(sigma_prime.size()) != d || q.dim() != d || r.dim() != d) {
        throw std::invalid_argument("trace_rotation_check: dimension mismatch");
    }
    std::vector<double> inverse(d);
    for (int i = 0; i < d; ++i) {
        if (sigma[i] <= 0.0 || sigma_prime[i] <= 0.0) {
            throw std::domain_error("trace_rotation_check: diagonal values must be positive");
        }
        if (i > 0 && (sigma[i] > sigma[i - 1] || sigma_prime[i] > sigma_prime[i - 1])) {
            throw std::invalid_argument(
                "trace_rotation_check: diagonals must be sorted non-increasing");
        }
        inverse[i] = 1.0 / sigma[i];
    }

    TraceSandwich out;
    for (int i = 0; i < d; ++i) {
        out.lower += sigma_prime[i] / sigma[i];
        out.upper += sigma_prime[d - 1 - i] / sigma[i];
    }
    const Matrix conj_inv = conjugate_diagonal(q.matrix(), inverse);
    const Matrix conj_prime = conjugate_diagonal(r.matrix(), sigma_prime);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out.middle += conj_inv(i, j) * conj_prime(j, i);
        }
    }

    const double tolerance = 1e-9 * std::max(1.0, std::abs(out.upper));
    out.ok = out.lower <= out.middle + tolerance && out.middle <= out.upper + tolerance;
    return out;
}

OrthogonalMatrix random_orthogonal(int dim, std::uint64_t seed) {
    if (dim < 1) {
        throw std::invalid_argument("random_orthogonal: dimension must be >= 1");
    }
    Rng rng(seed);
    while (true) {
        Matrix g(dim, dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                g(i, j) = rng.normal();
            }
        }
        // Modified Gram-Schmidt with one re-orthogonalization pass.
        bool degenerate = false;
        for (int j = 0; j < dim && !degenerate; ++j) {
            for (int repeat = 0; repeat < 2; ++repeat) {
                for (int k = 0; k < j; ++k) {
                    double proj = 0.0;
                    for (int i = 0; i < dim; ++i) {
                        proj += g(i, k) * g(i, j);
                    }
                    for (int i = 0; i < dim; ++i) {
                        g(i, j) -= proj * g(i, k);
                    }
                }
            }
            double norm = 0.0;
            for (int i = 0; i < dim; ++i) {
                norm += g(i, j) * g(i, j);
            }
            norm = std::sqrt(norm);
            if (norm < 1e-10) {
                degenerate = true;  // redraw the whole matrix
                break;
            }
            for (int i = 0; i < dim; ++i) {
                g(i, j) /= norm;
            }
        }
        if (!degenerate) {
            return OrthogonalMatrix::from_matrix(std::move(g));
        }
    }
}

SymMatrix random_spd(int dim, std::uint64_t seed, double min_eig, double max_eig) {
    if (min_eig <= 0.0 || max_eig < min_eig) {
        throw std::invalid_argument("random_spd: need 0 < min_eig <= max_eig");
    }
    const OrthogonalMatrix q = random_orthogonal(dim, seed);
    Rng rng(seed ^ 0x5eed5eed5eed5eedULL);
    std::vector<double> values(dim);
    for (auto& value : values) {
        value = rng.uniform(min_eig, max_eig);
    }
    return SymMatrix::from_dense(conjugate_diagonal(q.matrix(), values));
}

}  // namespace epl
