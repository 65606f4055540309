#pragma once

// Dense exact matrices over Q and Q[g]: fraction-free determinant and rank,
// exact solve, and the polynomial determinant by evaluation/interpolation.

#include "nilalg/gamma_poly.hpp"
#include "nilalg/rational.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace nilalg {

template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    DenseMatrix transposed() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using PolyMatrix = DenseMatrix<GammaPoly>;

inline RationalMatrix specialize(const PolyMatrix &m, const Rational &gamma) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = m(r, c).eval(gamma);
    return out;
}

inline int max_entry_degree(const PolyMatrix &m) {
    int d = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            d = std::max(d, m(r, c).degree());
    return d;
}

namespace detail {

// Integer rows obtained by scaling each row by the lcm of its denominators.
// Returns the product of the scale factors.
inline Integer clear_denominators(const RationalMatrix &m, DenseMatrix<Integer> &out) {
    out = DenseMatrix<Integer>(m.rows(), m.cols());
    Integer total(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l(1);
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
        total *= l;
    }
    return total;
}

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps and
// the final pivot is the determinant for a full-rank square input.
inline std::size_t bareiss(DenseMatrix<Integer> &a, int &sign, Integer &last_pivot) {
    const std::size_t rows = a.rows(), cols = a.cols();
    sign = 1;
    Integer prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(a(pivot, c), a(rank, c));
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                a(r, c) = a(rank, col) * a(r, c) - a(r, col) * a(rank, c);
                mpz_divexact(a(r, c).get_mpz_t(), a(r, c).get_mpz_t(), prev.get_mpz_t());
            }
            a(r, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    last_pivot = prev;
    return rank;
}

} // namespace detail

inline Rational determinant(const RationalMatrix &m) {
    if (!m.square())
        throw std::invalid_argument("determinant: matrix is not square");
    if (m.rows() == 0)
        return Rational(1);
    DenseMatrix<Integer> a;
    Integer scale = detail::clear_denominators(m, a);
    int sign = 1;
    Integer pivot;
    std::size_t rank = detail::bareiss(a, sign, pivot);
    if (rank < m.rows())
        return Rational(0);
    return make_rational(sign * pivot, scale);
}

inline std::size_t rank(const RationalMatrix &m) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    DenseMatrix<Integer> a;
    detail::clear_denominators(m, a);
    int sign = 1;
    Integer pivot;
    return detail::bareiss(a, sign, pivot);
}

/// Some x with m x = v, or nullopt when v is outside the column space.
/// Free variables are set to zero.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix &m, const std::vector<Rational> &v) {
    if (v.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has " + std::to_string(v.size()) +
                                    " entries, matrix has " + std::to_string(m.rows()) + " rows");
    const std::size_t rows = m.rows(), cols = m.cols();
    RationalMatrix a(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            a(r, c) = m(r, c);
        a(r, cols) = v[r];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && a(p, col) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != row)
            for (std::size_t c = 0; c <= cols; ++c)
                std::swap(a(p, c), a(row, c));
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c <= cols; ++c)
            a(row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a(r, col) == 0)
                continue;
            Rational factor = a(r, col);
            for (std::size_t c = col; c <= cols; ++c)
                a(r, c) -= factor * a(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (a(r, cols) != 0)
            return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        x[pivot_cols[i]] = a(i, cols);
    return x;
}

inline std::vector<Rational> multiply(const RationalMatrix &m, const std::vector<Rational> &x) {
    if (x.size() != m.cols())
        throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<Rational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r] += m(r, c) * x[c];
    return out;
}

/// Determinant over Q[g] by evaluating at g = 0, 1, ..., degree_bound and
/// interpolating. `degree_bound` must bound the degree of the determinant;
/// a negative value selects rows * max entry degree.
inline GammaPoly det_poly(const PolyMatrix &m, int degree_bound = -1) {
    if (!m.square())
        throw std::invalid_argument("det_poly: matrix is not square");
    if (degree_bound < 0)
        degree_bound = static_cast<int>(m.rows()) * max_entry_degree(m);
    const std::size_t npoints = static_cast<std::size_t>(degree_bound) + 1;
    std::vector<std::pair<Rational, Rational>> samples(npoints);
    auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Rational point(static_cast<long>(i));
            samples[i] = {point, determinant(specialize(m, point))};
        }
    };
    std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, npoints);
    if (workers == 1) {
        eval_range(0, npoints);
    } else {
        std::vector<std::future<void>> tasks;
        std::size_t chunk = (npoints + workers - 1) / workers;
        for (std::size_t b = 0; b < npoints; b += chunk)
            tasks.push_back(std::async(std::launch::async, eval_range, b, std::min(npoints, b + chunk)));
        for (auto &t : tasks)
            t.get();
    }
    return interpolate(samples);
}

/// Fraction-free Bareiss determinant carried out directly over Q[g].
inline GammaPoly det_poly_direct(PolyMatrix a) {
    if (!a.square())
        throw std::invalid_argument("det_poly_direct: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return GammaPoly(1);
    int sign = 1;
    GammaPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero())
            ++p;
        if (p == n)
            return {};
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(p, c), a(k, c));
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c)
                a(r, c) = exact_div(a(k, k) * a(r, c) - a(r, k) * a(k, c), prev);
            a(r, k) = GammaPoly{};
        }
        prev = a(k, k);
    }
    GammaPoly d = a(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

} // namespace nilalg
