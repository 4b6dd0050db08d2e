#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ermc/errors.hpp"

namespace ermc {

/// Dense row-major matrix over an arbitrary element type.
template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<T>& r) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
    }

    void append_row(const std::vector<T>& r) {
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
        if (cols_ == 0) cols_ = r.size();
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

// The routines below are generic over a field context F providing:
//   typename F::Elem, F.zero(), F.one(), add, sub, mul, neg, inv, is_zero.

/// Reduce to reduced row echelon form in place: leftmost pivots, pivots scaled
/// to one, zeros above and below. Returns the pivot column list (rank = size).
template <class F>
std::vector<std::size_t> rref_in_place(const F& f, Mat<typename F::Elem>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && f.is_zero(m.at(pr, c))) ++pr;
        if (pr == m.rows()) continue;
        m.swap_rows(r, pr);
        const auto piv_inv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            const auto factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(const F& f, Mat<typename F::Elem> m) {
    return rref_in_place(f, m).size();
}

/// Drop all-zero rows after RREF, yielding the canonical basis matrix of the row space.
template <class F>
Mat<typename F::Elem> row_space_basis(const F& f, Mat<typename F::Elem> m) {
    const auto pivots = rref_in_place(f, m);
    Mat<typename F::Elem> out(pivots.size(), m.cols(), f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

/// Canonical (RREF) basis of the right kernel {v : m v = 0}, one basis vector per row.
template <class F>
Mat<typename F::Elem> kernel_basis(const F& f, Mat<typename F::Elem> m) {
    const std::size_t n = m.cols();
    const auto pivots = rref_in_place(f, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    Mat<typename F::Elem> ker(0, n);
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<typename F::Elem> v(n, f.zero());
        v[free_col] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(m.at(r, free_col));
        ker.append_row(v);
    }
    return row_space_basis(f, std::move(ker));
}

/// Solve m x = rhs. Returns nullopt when inconsistent; `unique` reports whether
/// the solution space is a single point.
template <class F>
std::optional<std::vector<typename F::Elem>> solve_linear(const F& f,
                                                          Mat<typename F::Elem> m,
                                                          const std::vector<typename F::Elem>& rhs,
                                                          bool* unique = nullptr) {
    const std::size_t n = m.cols();
    Mat<typename F::Elem> aug(m.rows(), n + 1, f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = rhs[i];
    }
    const auto pivots = rref_in_place(f, aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt; // 0 = nonzero row
    if (unique) *unique = pivots.size() == n;
    std::vector<typename F::Elem> x(n, f.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, n);
    return x;
}

/// Inverse of a square matrix; throws SingularBasisError when not invertible.
template <class F>
Mat<typename F::Elem> inverse(const F& f, const Mat<typename F::Elem>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DomainError("inverse: matrix not square");
    Mat<typename F::Elem> aug(n, 2 * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = f.one();
    }
    const auto pivots = rref_in_place(f, aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw SingularBasisError("inverse: singular matrix");
    Mat<typename F::Elem> out(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

template <class F>
Mat<typename F::Elem> mat_mul(const F& f, const Mat<typename F::Elem>& a,
                              const Mat<typename F::Elem>& b) {
    if (a.cols() != b.rows()) throw DomainError("mat_mul: shape mismatch");
    Mat<typename F::Elem> out(a.rows(), b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& f, const Mat<typename F::Elem>& a,
                                      const std::vector<typename F::Elem>& v) {
    std::vector<typename F::Elem> out(a.rows(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] = f.add(out[i], f.mul(a.at(i, j), v[j]));
    return out;
}

} // namespace ermc
