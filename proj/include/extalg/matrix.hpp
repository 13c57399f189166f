#pragma once

#include <concepts>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "extalg/errors.hpp"

namespace extalg {

// The scalar requirements for exact linear algebra: an effective field with
// decidable zero test. Satisfied by Rational and RationalFunction.
template <typename S>
concept FieldScalar = requires(const S& a, const S& b) {
    { S::zero() } -> std::convertible_to<S>;
    { S::one() } -> std::convertible_to<S>;
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a* b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

template <FieldScalar S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<S>& data() const { return data_; }

    std::vector<S> row(std::size_t i) const {
        return std::vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void set_row(std::size_t i, const std::vector<S>& v) {
        if (v.size() != cols_) throw DimensionError("row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        }
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    m(i, j) = m(i, j) + aik * b(k, j);
                }
            }
        }
        return m;
    }

    Matrix scaled(const S& c) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        for (const S& x : data_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j > 0) os << ", ";
                os << (*this)(i, j).str();
            }
            os << "]" << (i + 1 == rows_ ? "]" : "\n");
        }
        if (rows_ == 0) os << "[]";
        return os.str();
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    }
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

// --- vector helpers ---------------------------------------------------------

template <FieldScalar S>
bool vec_is_zero(const std::vector<S>& v) {
    for (const S& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

template <FieldScalar S>
std::vector<S> vec_scaled(const std::vector<S>& v, const S& c) {
    std::vector<S> r = v;
    for (S& x : r) x = x * c;
    return r;
}

// v += c * w
template <FieldScalar S>
void vec_add_scaled(std::vector<S>& v, const S& c, const std::vector<S>& w) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + c * w[i];
}

// Row vector times matrix.
template <FieldScalar S>
std::vector<S> vec_mat(const std::vector<S>& v, const Matrix<S>& m) {
    if (v.size() != m.rows()) throw DimensionError("vector/matrix shape mismatch");
    std::vector<S> r(m.cols(), S::zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = r[j] + v[i] * m(i, j);
    }
    return r;
}

// Matrix times column vector.
template <FieldScalar S>
std::vector<S> mat_vec(const Matrix<S>& m, const std::vector<S>& v) {
    if (v.size() != m.cols()) throw DimensionError("matrix/vector shape mismatch");
    std::vector<S> r(m.rows(), S::zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v[j].is_zero()) r[i] = r[i] + m(i, j) * v[j];
        }
    }
    return r;
}

// --- elimination ------------------------------------------------------------

template <FieldScalar S>
struct RrefResult {
    Matrix<S> matrix;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

// Reduced row echelon form by Gauss-Jordan elimination. Pivot choice is the
// first row with a nonzero entry in the current column, so the result and
// every downstream basis is deterministic.
template <FieldScalar S>
RrefResult<S> rref(Matrix<S> m) {
    RrefResult<S> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        }
        S inv = S::one() / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            S f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) = m(i, j) - f * m(r, j);
            }
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = r;
    out.matrix = std::move(m);
    return out;
}

template <FieldScalar S>
std::size_t rank(const Matrix<S>& m) {
    return rref(m).rank;
}

// Basis of the right null space {x : m x = 0}; one row per free column of the
// RREF, in ascending free-column order.
template <FieldScalar S>
Matrix<S> kernel(const Matrix<S>& m) {
    RrefResult<S> r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }

    Matrix<S> basis(free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis(k, f) = S::one();
        for (std::size_t p = 0; p < r.pivot_columns.size(); ++p) {
            basis(k, r.pivot_columns[p]) = -r.matrix(p, f);
        }
    }
    return basis;
}

template <FieldScalar S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S::one();
    }
    RrefResult<S> r = rref(std::move(aug));
    if (r.rank < n || r.pivot_columns[n - 1] != n - 1) {
        throw SingularMatrixError("matrix is singular");
    }
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
    }
    return inv;
}

template <FieldScalar S>
S determinant(Matrix<S> m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    S det = S::one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c).is_zero()) ++pivot;
        if (pivot == n) return S::zero();
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(pivot, j));
            det = -det;
        }
        det = det * m(c, c);
        S inv = S::one() / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            S f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

}  // namespace extalg
