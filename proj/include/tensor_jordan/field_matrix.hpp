#pragma once

// Dense matrices over GF(p), or over Q when the characteristic is zero.

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core.hpp"
#include "integer_matrix.hpp"

namespace tensor_jordan {

using Rational = boost::multiprecision::cpp_rational;

/// GF(p) with values kept in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!detail::is_prime(p)) throw invalid_input("PrimeField: modulus must be prime");
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1 % p_; }
    bool is_zero(value_type v) const noexcept { return v == 0; }

    value_type from_int(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type from_big(const BigInt& v) const {
        BigInt r = v % p_;
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }

    value_type add(value_type a, value_type b) const noexcept {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const noexcept {
        return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
    }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>(std::uint64_t{a} * b % p_);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw invalid_input("PrimeField: inverse of zero");
        // a^(p-2)
        std::uint64_t base = a, result = 1;
        for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
        }
        return static_cast<value_type>(result);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// Q with exact rationals in lowest terms.
class RationalField {
public:
    using value_type = Rational;

    std::uint32_t characteristic() const noexcept { return 0; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& v) const { return v == 0; }

    value_type from_int(std::int64_t v) const { return v; }
    value_type from_big(const BigInt& v) const { return Rational(v); }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw invalid_input("RationalField: inverse of zero");
        return 1 / a;
    }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Invokes f with RationalField for characteristic 0, PrimeField otherwise.
template <class F>
decltype(auto) with_field(Characteristic p, F&& f) {
    if (p.is_zero()) return std::forward<F>(f)(RationalField{});
    return std::forward<F>(f)(PrimeField{p.value()});
}

template <class Field>
class FieldMatrix {
public:
    using value_type = typename Field::value_type;

    FieldMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static FieldMatrix identity(Field field, std::size_t n) {
        FieldMatrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
        return m;
    }

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<value_type> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!field_.is_zero(v)) return false;
        return true;
    }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

/// Upper-bidiagonal Jordan block: eigenvalue on the diagonal, 1 above it.
template <class Field>
FieldMatrix<Field> jordan_matrix(const Field& field, const typename Field::value_type& eigenvalue,
                                 std::size_t size) {
    if (size == 0) throw invalid_input("jordan_matrix: size must be at least 1");
    FieldMatrix<Field> m(field, size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = eigenvalue;
        if (i + 1 < size) m(i, i + 1) = field.one();
    }
    return m;
}

template <class Field>
FieldMatrix<Field> kronecker(const FieldMatrix<Field>& a, const FieldMatrix<Field>& b) {
    const auto& f = a.field();
    FieldMatrix<Field> out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (f.is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
        }
    return out;
}

/// Block-diagonal matrix diag(blocks...).
template <class Field>
FieldMatrix<Field> direct_sum(const Field& field, const std::vector<FieldMatrix<Field>>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    FieldMatrix<Field> out(field, rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

template <class Field>
FieldMatrix<Field> multiply(const FieldMatrix<Field>& a, const FieldMatrix<Field>& b) {
    if (a.cols() != b.rows()) throw invalid_input("multiply: dimension mismatch");
    const auto& f = a.field();
    FieldMatrix<Field> out(f, a.rows(), b.cols());
    // Sparse-aware: the operands here are mostly zero.
    std::vector<std::vector<std::size_t>> b_support(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!f.is_zero(b(k, j))) b_support[k].push_back(j);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k))) continue;
            for (auto j : b_support[k]) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
        }
    return out;
}

/// m - lambda * I.
template <class Field>
FieldMatrix<Field> shift_diagonal(FieldMatrix<Field> m, const typename Field::value_type& lambda) {
    if (!m.is_square()) throw invalid_input("shift_diagonal: matrix must be square");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = m.field().sub(m(i, i), lambda);
    return m;
}

namespace detail {

// Row-reduces in place to reduced echelon form; returns pivot columns.
template <class Field>
std::vector<std::size_t> reduce_rows(FieldMatrix<Field>& m) {
    const auto& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && f.is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const auto inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank_mod_p(const FieldMatrix<PrimeField>& m) {
    const auto p = std::uint64_t{m.field().characteristic()};
    const auto cols = m.cols();
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] = m(i, j);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const auto inv = m.field().inv(static_cast<std::uint32_t>(rows[rank][c]));
        for (std::size_t j = c; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv % p;
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            const auto factor = rows[i][c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = (rows[i][j] + (p - factor) * rows[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_over_q(const FieldMatrix<RationalField>& m) {
    // Clear denominators row by row, then eliminate over Z.
    std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigInt d = denominator(m(i, j));
            if (d != 1) l = lcm(l, d);
        }
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
    return rank(std::move(rows));
}

}  // namespace detail

template <class Field>
std::size_t rank(const FieldMatrix<Field>& m) {
    if constexpr (std::is_same_v<Field, PrimeField>) {
        return detail::rank_mod_p(m);
    } else if constexpr (std::is_same_v<Field, RationalField>) {
        return detail::rank_over_q(m);
    } else {
        auto copy = m;
        return detail::reduce_rows(copy).size();
    }
}

/// Basis of {v : m v = 0}, one vector per free column of the reduced form.
template <class Field>
std::vector<std::vector<typename Field::value_type>> nullspace(const FieldMatrix<Field>& m) {
    const auto& f = m.field();
    auto reduced = m;
    const auto pivots = detail::reduce_rows(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename Field::value_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Field::value_type> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(reduced(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Jordan block sizes of a matrix whose only eigenvalue is `eigenvalue`,
/// read off from b_i = rank(N^{i-1}) - rank(N^i) with N = m - eigenvalue*I.
template <class Field>
Partition partition_from_ranks(const FieldMatrix<Field>& m,
                               const typename Field::value_type& eigenvalue) {
    if (!m.is_square()) throw invalid_input("partition_from_ranks: matrix must be square");
    const auto n = m.rows();
    const auto nilpotent = shift_diagonal(m, eigenvalue);
    std::vector<std::int64_t> conj;
    auto power = nilpotent;
    std::size_t prev_rank = n;
    for (std::size_t i = 1; prev_rank > 0; ++i) {
        if (i > n)
            throw consistency_error("partition_from_ranks: m - eigenvalue*I is not nilpotent");
        const auto r = rank(power);
        if (r == prev_rank)
            throw consistency_error("partition_from_ranks: m - eigenvalue*I is not nilpotent");
        conj.push_back(static_cast<std::int64_t>(prev_rank - r));
        prev_rank = r;
        if (r > 0) power = multiply(power, nilpotent);
    }
    return conjugate(Partition(std::move(conj)));
}

}  // namespace tensor_jordan
