#pragma once

// Constructive decomposition R = (+)_{i=0}^{s-1} k[theta] w_i with w_i
// homogeneous of degree i, for R = k[x,y]/(x^s, y^t) and theta = x + y.
//
// Starting from kappa_0 = 1, each leading element kappa contributes the
// modules k[theta] kappa x^j for j = 0..m, where m = (n_prev - 1) - n and n
// is the socle degree of k[theta] kappa. The next leading element is any
// nonzero vector of K(d, n) = ker(theta^{n-d} : R_d -> R_n), d being the
// first degree not yet covered.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "field_matrix.hpp"

namespace tensor_jordan {

/// Monomials x^a y^b (a < s, b < t) grouped by degree a + b; within a degree
/// the x-exponent decreases.
class GradedBasis {
public:
    struct Monomial {
        std::int64_t x = 0;
        std::int64_t y = 0;
        friend bool operator==(const Monomial&, const Monomial&) = default;
    };

    GradedBasis(std::int64_t s, std::int64_t t) : s_(s), t_(t) {
        if (s < 1 || t < 1) throw invalid_input("GradedBasis: sizes must be >= 1");
        index_.assign(static_cast<std::size_t>(s * t), 0);
        for (std::int64_t d = 0; d <= s + t - 2; ++d) {
            offsets_.push_back(monomials_.size());
            for (std::int64_t a = std::min(d, s - 1); a >= std::max<std::int64_t>(0, d - t + 1); --a) {
                index_[static_cast<std::size_t>(a * t + (d - a))] = monomials_.size();
                monomials_.push_back({a, d - a});
            }
        }
        offsets_.push_back(monomials_.size());
    }

    std::int64_t s() const noexcept { return s_; }
    std::int64_t t() const noexcept { return t_; }
    std::int64_t top_degree() const noexcept { return s_ + t_ - 2; }
    std::size_t size() const noexcept { return monomials_.size(); }

    std::size_t dim(std::int64_t d) const {
        check_degree(d);
        return offsets_[static_cast<std::size_t>(d) + 1] - offsets_[static_cast<std::size_t>(d)];
    }
    std::size_t offset(std::int64_t d) const {
        check_degree(d);
        return offsets_[static_cast<std::size_t>(d)];
    }
    const Monomial& monomial(std::size_t global) const { return monomials_.at(global); }

    bool contains(std::int64_t a, std::int64_t b) const noexcept {
        return a >= 0 && b >= 0 && a < s_ && b < t_;
    }
    std::size_t index_of(std::int64_t a, std::int64_t b) const {
        if (!contains(a, b)) throw invalid_input("GradedBasis: monomial is zero in R");
        return index_[static_cast<std::size_t>(a * t_ + b)];
    }

    /// dim R_0, dim R_1, ..., dim R_{s+t-2}.
    std::vector<std::int64_t> dimension_sequence() const {
        std::vector<std::int64_t> out;
        for (std::int64_t d = 0; d <= top_degree(); ++d) out.push_back(static_cast<std::int64_t>(dim(d)));
        return out;
    }

private:
    void check_degree(std::int64_t d) const {
        if (d < 0 || d > top_degree()) throw invalid_input("GradedBasis: degree out of range");
    }

    std::int64_t s_;
    std::int64_t t_;
    std::vector<Monomial> monomials_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> index_;
};

/// Matrix M(i, j) of multiplication by theta^{j-i} from R_i to R_j.
template <class Field>
FieldMatrix<Field> theta_power_matrix(const Field& field, const GradedBasis& basis, std::int64_t i,
                                      std::int64_t j) {
    if (i < 0 || j < i || j > basis.top_degree())
        throw invalid_input("theta_power_matrix: need 0 <= i <= j <= s+t-2");
    const auto e = j - i;
    FieldMatrix<Field> m(field, basis.dim(j), basis.dim(i));
    for (std::size_t col = 0; col < basis.dim(i); ++col) {
        const auto mono = basis.monomial(basis.offset(i) + col);
        for (std::int64_t k = 0; k <= e; ++k) {
            const auto a = mono.x + k, b = mono.y + e - k;
            if (!basis.contains(a, b)) continue;
            const auto row = basis.index_of(a, b) - basis.offset(j);
            m(row, col) = field.add(m(row, col), field.from_big(binomial(e, k)));
        }
    }
    return m;
}

template <class Field>
using RElement = std::vector<typename Field::value_type>;

template <class Field>
RElement<Field> multiply_theta(const Field& field, const GradedBasis& basis, const RElement<Field>& v) {
    RElement<Field> out(basis.size(), field.zero());
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (field.is_zero(v[idx])) continue;
        const auto m = basis.monomial(idx);
        if (basis.contains(m.x + 1, m.y)) {
            auto& slot = out[basis.index_of(m.x + 1, m.y)];
            slot = field.add(slot, v[idx]);
        }
        if (basis.contains(m.x, m.y + 1)) {
            auto& slot = out[basis.index_of(m.x, m.y + 1)];
            slot = field.add(slot, v[idx]);
        }
    }
    return out;
}

template <class Field>
RElement<Field> multiply_x(const Field& field, const GradedBasis& basis, const RElement<Field>& v) {
    RElement<Field> out(basis.size(), field.zero());
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (field.is_zero(v[idx])) continue;
        const auto m = basis.monomial(idx);
        if (basis.contains(m.x + 1, m.y)) out[basis.index_of(m.x + 1, m.y)] = v[idx];
    }
    return out;
}

template <class Field>
bool is_zero_element(const Field& field, const RElement<Field>& v) {
    for (const auto& c : v)
        if (!field.is_zero(c)) return false;
    return true;
}

/// dim k[theta] v: the number of nonzero theta^j v.
template <class Field>
std::int64_t chain_length(const Field& field, const GradedBasis& basis, RElement<Field> v) {
    std::int64_t len = 0;
    while (!is_zero_element(field, v)) {
        ++len;
        v = multiply_theta(field, basis, v);
    }
    return len;
}

template <class Field>
struct Generator {
    std::int64_t degree = 0;
    RElement<Field> element;  // coordinates over the whole graded basis
    std::int64_t chain_length = 0;
    std::int64_t leading_index = 0;  // j such that this is kappa_j x^shift
    std::int64_t x_shift = 0;

    bool is_leading() const noexcept { return x_shift == 0; }
};

template <class Field>
struct GeneratingSet {
    Field field;
    GradedBasis basis;
    std::vector<Generator<Field>> generators;
    std::vector<std::int64_t> socle_degrees;  // n_0, n_1, ... of the leading modules

    Partition chain_lengths() const {
        std::vector<std::int64_t> lens;
        for (const auto& g : generators) lens.push_back(g.chain_length);
        return Partition::from_unsorted(std::move(lens));
    }
};

template <class Field>
GeneratingSet<Field> build_generating_set(const Field& field, std::int64_t s, std::int64_t t) {
    if (s < 1 || t < 1) throw invalid_input("build_generating_set: sizes must be >= 1");
    if (s > t) throw invalid_input("build_generating_set: requires s <= t");
    GeneratingSet<Field> set{field, GradedBasis(s, t), {}, {}};
    const auto& basis = set.basis;
    const auto embed = [&](const std::vector<typename Field::value_type>& local, std::int64_t d) {
        RElement<Field> v(basis.size(), field.zero());
        for (std::size_t k = 0; k < local.size(); ++k) v[basis.offset(d) + k] = local[k];
        return v;
    };

    RElement<Field> kappa(basis.size(), field.zero());
    kappa[basis.index_of(0, 0)] = field.one();
    std::int64_t degree = 0;
    std::int64_t prev_socle = s + t - 1;
    for (std::int64_t lead = 0;; ++lead) {
        const auto socle = degree + chain_length(field, basis, kappa) - 1;
        if (socle >= prev_socle)
            throw consistency_error("build_generating_set: socle degrees must strictly decrease");
        set.socle_degrees.push_back(socle);
        const auto shifts = (prev_socle - 1) - socle;
        auto shifted = kappa;
        for (std::int64_t j = 0; j <= shifts; ++j) {
            if (static_cast<std::int64_t>(set.generators.size()) == s)
                throw consistency_error("build_generating_set: more than s generators");
            const auto len = chain_length(field, basis, shifted);
            set.generators.push_back({degree + j, shifted, len, lead, j});
            shifted = multiply_x(field, basis, shifted);
        }
        degree += shifts + 1;
        prev_socle = socle;
        if (static_cast<std::int64_t>(set.generators.size()) == s) break;
        if (degree > prev_socle)
            throw consistency_error("build_generating_set: kernel degree beyond socle");

        const auto kernel = nullspace(theta_power_matrix(field, basis, degree, prev_socle));
        if (kernel.empty()) throw consistency_error("build_generating_set: required kernel is zero");
        kappa = embed(kernel.front(), degree);

        // Any other kernel vector must give the same socle degree.
        std::vector<typename Field::value_type> other(kernel.front().size(), field.zero());
        for (const auto& v : kernel)
            for (std::size_t k = 0; k < v.size(); ++k) other[k] = field.add(other[k], v[k]);
        if (chain_length(field, basis, embed(other, degree)) != chain_length(field, basis, kappa))
            throw consistency_error("build_generating_set: socle degree depends on kernel choice");
    }

    // Directness: the chains must span R.
    FieldMatrix<Field> span(field, basis.size(), basis.size());
    std::size_t row = 0;
    for (const auto& g : set.generators) {
        auto v = g.element;
        for (std::int64_t k = 0; k < g.chain_length; ++k) {
            if (row == basis.size()) throw consistency_error("build_generating_set: chains exceed dim R");
            for (std::size_t c = 0; c < v.size(); ++c) span(row, c) = v[c];
            ++row;
            v = multiply_theta(field, basis, v);
        }
    }
    if (row != basis.size() || rank(span) != basis.size())
        throw consistency_error("build_generating_set: sum of chains is not direct and spanning");
    for (std::size_t i = 0; i < set.generators.size(); ++i)
        if (set.generators[i].degree != static_cast<std::int64_t>(i))
            throw consistency_error("build_generating_set: generator degrees are not 0..s-1");
    return set;
}

}  // namespace tensor_jordan
