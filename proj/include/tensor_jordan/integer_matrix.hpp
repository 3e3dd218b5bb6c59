#pragma once

// Dense matrices over Z with exact fraction-free elimination.

#include <cstddef>
#include <vector>

#include "core.hpp"

namespace tensor_jordan {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<BigInt>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw invalid_input("IntMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Bareiss fraction-free determinant of a square matrix.
inline BigInt determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw invalid_input("determinant: matrix must be square");
    const auto n = m.rows();
    if (n == 0) return 1;
    BigInt prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
            }
            m(i, k) = 0;
        }
        prev_pivot = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace detail {

// Calls f(indices) for every strictly increasing k-subset of {0..n-1}
// until f returns false.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline void make_primitive(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& v : row) {
        if (v != 0) g = gcd(g, abs(v));
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& v : row) v /= g;
}

}  // namespace detail

/// gcd of the absolute values of all k x k minors; 0 when no k x k minor
/// exists or all of them vanish. Stops early once the gcd reaches 1.
inline BigInt gcd_of_minors(const IntMatrix& m, std::size_t k) {
    if (k == 0) return 1;
    if (k > m.rows() || k > m.cols()) return 0;
    BigInt g = 0;
    detail::for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        detail::for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            IntMatrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
            g = gcd(g, abs(determinant(std::move(minor))));
            return g != 1;
        });
        return g != 1;
    });
    return g;
}

/// Rank over Q by fraction-free elimination, keeping each row primitive so
/// entries stay near the size of the input.
inline std::size_t rank(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) return 0;
    const auto cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto& prow = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const BigInt g = gcd(prow[c], rows[r][c]);
            const BigInt a = prow[c] / g;
            const BigInt b = rows[r][c] / g;
            for (std::size_t j = c; j < cols; ++j) {
                if (prow[j] == 0) {
                    if (rows[r][j] != 0) rows[r][j] *= a;
                } else {
                    rows[r][j] = rows[r][j] * a - prow[j] * b;
                }
            }
            detail::make_primitive(rows[r]);
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return rank(std::move(rows));
}

}  // namespace tensor_jordan
