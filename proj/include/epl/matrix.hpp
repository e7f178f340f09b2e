#pragma once

#include <cstddef>
#include <vector>

namespace epl {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);

/// Dense row-major matrix. Small fixed-size workhorse for the spectral code;
/// no view/expression machinery, everything is a value.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int dim);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transposed() const;
    Vector apply(const Vector& v) const;             // M v
    Vector apply_transposed(const Vector& v) const;  // Mᵀ v
    double max_abs() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Symmetric matrix. Entries are symmetrized on construction so that
/// (i,j) == (j,i) holds exactly, not just up to roundoff.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int dim);
    static SymMatrix scaled_identity(int dim, double value);
    static SymMatrix from_dense(const Matrix& m);
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int dim() const { return m_.rows(); }
    double operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, double value);

    double trace() const;
    double frobenius_norm() const;
    double max_abs() const { return m_.max_abs(); }
    Vector apply(const Vector& v) const { return m_.apply(v); }
    const Matrix& dense() const { return m_; }

private:
    Matrix m_;
};

/// Eigendecomposition of a symmetric matrix: eigenvalues in non-increasing
/// order, basis columns are the matching eigenvectors.
struct SymEig {
    std::vector<double> eigenvalues;
    Matrix basis;

    int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Orthogonal matrix validated on construction: ‖QᵀQ − I‖_max ≤ 1e-10.
class OrthogonalMatrix {
public:
    static constexpr double kOrthogonalityTol = 1e-10;

    static OrthogonalMatrix from_matrix(Matrix q);

    const Matrix& matrix() const { return q_; }
    int dim() const { return q_.rows(); }

private:
    explicit OrthogonalMatrix(Matrix q) : q_(std::move(q)) {}
    Matrix q_;
};

}  // namespace epl
