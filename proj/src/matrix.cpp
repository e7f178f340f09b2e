#include "epl/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace epl {

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double norm2(const Vector& v) {
    double sum = 0.0;
    for (double x : v) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("Matrix: negative dimension");
    }
    data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw std::invalid_argument("Matrix::apply: dimension mismatch");
    }
    Vector out(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
        double sum = 0.0;
        for (int j = 0; j < cols_; ++j) {
            sum += (*this)(i, j) * v[j];
        }
        out[i] = sum;
    }
    return out;
}

Vector Matrix::apply_transposed(const Vector& v) const {
    if (static_cast<int>(v.size()) != rows_) {
        throw std::invalid_argument("Matrix::apply_transposed: dimension mismatch");
    }
    Vector out(cols_, 0.0);
    for (int i = 0; i < rows_; ++i) {
        const double vi = v[i];
        for (int j = 0; j < cols_; ++j) {
            out[j] += (*this)(i, j) * vi;
        }
    }
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : data_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("Matrix multiply: dimension mismatch");
    }
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

SymMatrix::SymMatrix(int dim) : m_(dim, dim) {
    if (dim < 1) {
        throw std::invalid_argument("SymMatrix: dimension must be >= 1");
    }
}

SymMatrix SymMatrix::scaled_identity(int dim, double value) {
    SymMatrix s(dim);
    for (int i = 0; i < dim; ++i) {
        s.m_(i, i) = value;
    }
    return s;
}

SymMatrix SymMatrix::from_dense(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("SymMatrix::from_dense: matrix not square");
    }
    SymMatrix s(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        s.m_(i, i) = m(i, i);
        for (int j = i + 1; j < m.cols(); ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            s.m_(i, j) = v;
            s.m_(j, i) = v;
        }
    }
    return s;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int d = static_cast<int>(rows.size());
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[i].size()) != d) {
            throw std::invalid_argument("SymMatrix::from_rows: ragged rows");
        }
        for (int j = 0; j < d; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return from_dense(m);
}

void SymMatrix::set(int i, int j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) {
        t += m_(i, i);
    }
    return t;
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            sum += m_(i, j) * m_(i, j);
        }
    }
    return std::sqrt(sum);
}

OrthogonalMatrix OrthogonalMatrix::from_matrix(Matrix q) {
    if (q.rows() != q.cols() || q.rows() < 1) {
        throw std::invalid_argument("OrthogonalMatrix: matrix not square");
    }
    const int d = q.rows();
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            double g = 0.0;
            for (int k = 0; k < d; ++k) {
                g += q(k, i) * q(k, j);
            }
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    if (worst > kOrthogonalityTol) {
        throw std::invalid_argument("OrthogonalMatrix: QᵀQ deviates from I by " +
                                    std::to_string(worst));
    }
    return OrthogonalMatrix(std::move(q));
}

}  // namespace epl
