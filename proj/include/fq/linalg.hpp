#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fq {

/// Dense matrix over an exact field K (row-major).
template <class K>
class Mat {
   public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const K& fill = K(0))
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        x.check_same_shape(y);
        Mat r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
        return r;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        x.check_same_shape(y);
        Mat r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }

    friend Mat operator*(const K& s, const Mat& m) {
        Mat r = m;
        for (auto& v : r.a_) v = s * v;
        return r;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        Mat r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k) == K(0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == K(0))) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    /// Submatrix of the first k rows and columns.
    Mat leading_principal(std::size_t k) const {
        Mat r(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) r.at(i, j) = at(i, j);
        return r;
    }

   private:
    std::size_t rows_, cols_;
    std::vector<K> a_;

    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<std::size_t> rref(Mat<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == K(0)) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        K inv = K(1) / m.at(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == K(0)) continue;
            K f = m.at(r, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(r, j) = m.at(r, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
std::size_t rank(Mat<K> m) {
    return rref(m).size();
}

/// Basis of the right nullspace {x : m x = 0}, one vector per free column,
/// in the canonical rref parametrization.
template <class K>
std::vector<std::vector<K>> nullspace(Mat<K> m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(m.cols(), K(0));
        v[free_col] = K(1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = K(0) - m.at(pi, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
Mat<K> inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("only square matrices invert");
    std::size_t n = m.rows();
    Mat<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("matrix is singular");
    Mat<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

template <class K>
K det(Mat<K> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
    std::size_t n = m.rows();
    K d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m.at(p, col) == K(0)) ++p;
        if (p == n) return K(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = K(0) - d;
        }
        d = d * m.at(col, col);
        K inv = K(1) / m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == K(0)) continue;
            K f = m.at(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
        }
    }
    return d;
}

}  // namespace fq
