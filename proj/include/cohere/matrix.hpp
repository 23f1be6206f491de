#pragma once

#include "cohere/error.hpp"
#include "cohere/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cohere {

/// Dense row-major matrix over an exact field.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) fail("DimMismatch", "entry count");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    static Matrix scalar(std::size_t n, const S& c) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<S>& data() const { return data_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail("DimMismatch", "product " + a.shape() + " * " + b.shape());
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) c(i, j) += x * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }
    friend Matrix operator*(const S& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x *= s;
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }
    bool is_identity() const { return square() && *this == identity(rows_); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += to_string((*this)(i, j));
            }
        }
        return s + "]";
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) fail("DimMismatch", shape() + " vs " + b.shape());
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

/// Reduced row echelon form together with its pivot columns.
template <class S>
struct Echelon {
    Matrix<S> reduced;
    std::vector<std::size_t> pivots;
};

template <class S>
Echelon<S> rref(Matrix<S> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        S inv = S(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            S f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
    return rref(m).pivots.size();
}

/**
 * \brief Basis of the right nullspace, one vector per free column.
 *
 * Vector k has a 1 in the k-th free column and 0 in every other free column,
 * so coordinates of a null vector are read off its free entries.
 */
template <class S>
struct Nullspace {
    std::vector<std::vector<S>> basis;
    std::vector<std::size_t> free_cols;
};

template <class S>
Nullspace<S> nullspace(const Matrix<S>& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Nullspace<S> ns;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(m.cols(), S(0));
        v[f] = S(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        ns.basis.push_back(std::move(v));
        ns.free_cols.push_back(f);
    }
    return ns;
}

template <class S>
bool invertible(const Matrix<S>& m) {
    return m.square() && rank(m) == m.rows();
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (!m.square()) fail("NotInvertible", "non-square " + m.shape());
    std::size_t n = m.rows();
    Matrix<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S(1);
    }
    auto e = rref(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) fail("NotInvertible", m.str());
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// A solution of A x = b with free variables zero, if one exists.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b) {
    if (b.size() != a.rows()) fail("DimMismatch", "right-hand side length");
    Matrix<S> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    std::vector<S> x(a.cols(), S(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

/// Block diagonal sum.
template <class S>
Matrix<S> block_diag(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

}  // namespace cohere
