#pragma once

// Dimension sweep through gcds of minors.
//
// For each u, dim k[x,y]/(x^s, y^t, (x+y)^u) follows from the degrees
// a + b = s + t + u of the two syzygies of (x^s, y^t, (x+y)^u). The lower
// degree is a = u + i0, where i0 is the first i such that multiplication by
// (x+y)^u fails to be injective on degree-i forms, i.e. the gcd delta_i of
// the (i+1)-minors of the banded matrix H_i vanishes mod p.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "core.hpp"
#include "integer_matrix.hpp"

namespace tensor_jordan {

/// (s, t, u) sorted ascending, with r = s + t - 1 - u.
struct SortedTriple {
    std::int64_t s = 1;
    std::int64_t t = 1;
    std::int64_t u = 1;

    static SortedTriple from(std::int64_t a, std::int64_t b, std::int64_t c) {
        if (a < 1 || b < 1 || c < 1) throw invalid_input("SortedTriple: entries must be >= 1");
        std::array<std::int64_t, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        return {v[0], v[1], v[2]};
    }

    std::int64_t r() const noexcept { return s + t - 1 - u; }
    /// Third generator lies in (x^s, y^t).
    bool redundant() const noexcept { return r() <= 0; }

    friend bool operator==(const SortedTriple&, const SortedTriple&) = default;
};

struct SyzygyReport {
    SortedTriple triple;
    std::vector<BigInt> q;
    std::vector<BigInt> deltas;  // delta_0 .. delta_{i0}
    std::int64_t i0 = 0;
    std::int64_t a_deg = 0;
    std::int64_t b_deg = 0;
    std::int64_t dim = 0;
};

/// Coefficients C(u, s-1), C(u, s-2), ..., C(u, u-t+1) of (x+y)^u modulo
/// (x^s, y^t).
inline std::vector<BigInt> q_coefficients(const SortedTriple& triple) {
    const auto r = triple.r();
    if (r < 1) throw invalid_input("q_coefficients: requires u <= s + t - 2");
    std::vector<BigInt> q;
    q.reserve(static_cast<std::size_t>(r));
    for (std::int64_t j = 1; j <= r; ++j) q.push_back(binomial(triple.u, triple.s - j));
    return q;
}

/// (r-i) x (i+1) matrix with entry (row a, col b) = q_{i+1+a-b} (1-based q).
inline IntMatrix build_H(const std::vector<BigInt>& q, std::int64_t i) {
    const auto r = static_cast<std::int64_t>(q.size());
    if (i < 0 || i >= r) throw invalid_input("build_H: index outside 0..r-1");
    IntMatrix h(static_cast<std::size_t>(r - i), static_cast<std::size_t>(i + 1));
    for (std::int64_t a = 0; a < r - i; ++a)
        for (std::int64_t b = 0; b <= i; ++b)
            h(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
                q[static_cast<std::size_t>(i + a - b)];
    return h;
}

/// Generator of the ideal of minor_size-minors of h.
inline BigInt delta(const IntMatrix& h, std::int64_t minor_size) {
    if (minor_size < 0) throw invalid_input("delta: negative minor size");
    return gcd_of_minors(h, static_cast<std::size_t>(minor_size));
}

/// delta_i for the sweep, with delta_i = 0 once (i+1)-minors cannot exist.
inline BigInt delta_at(const std::vector<BigInt>& q, std::int64_t i) {
    const auto r = static_cast<std::int64_t>(q.size());
    if (i + 1 > r - i) return 0;
    return delta(build_H(q, i), i + 1);
}

namespace detail {

inline bool divisible(const BigInt& v, std::uint32_t p) {
    return p == 0 ? v == 0 : v % p == 0;
}

}  // namespace detail

/// Smallest i with delta_i = 0 mod p (delta_i = 0 literally when p = 0).
/// `delta_of(i)` is evaluated lazily, in order; the values seen are appended
/// to `seen` when given.
template <class DeltaFn>
std::int64_t i0_index(DeltaFn&& delta_of, Characteristic p, std::int64_t r,
                      std::vector<BigInt>* seen = nullptr) {
    if (r < 1) throw invalid_input("i0_index: requires r >= 1");
    for (std::int64_t i = 0;; ++i) {
        BigInt d = i + 1 > r - i ? BigInt(0) : BigInt(delta_of(i));
        const bool hit = detail::divisible(d, p.value());
        if (seen) seen->push_back(std::move(d));
        if (hit) return i;
    }
}

/// Coefficients of (1 - w^s - w^t - w^u + w^a + w^b) / (1 - w)^2.
inline std::vector<std::int64_t> hilbert_coeffs(std::int64_t s, std::int64_t t, std::int64_t u,
                                                std::int64_t a_deg, std::int64_t b_deg) {
    if (a_deg + b_deg != s + t + u)
        throw invalid_input("hilbert_coeffs: syzygy degrees must sum to s + t + u");
    const auto top = std::max({s, t, u, a_deg, b_deg});
    std::vector<std::int64_t> num(static_cast<std::size_t>(top + 1), 0);
    num[0] += 1;
    for (auto d : {s, t, u}) num[static_cast<std::size_t>(d)] -= 1;
    for (auto d : {a_deg, b_deg}) num[static_cast<std::size_t>(d)] += 1;
    // Dividing by (1 - w) is a prefix sum; the remainder must vanish.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 1; k < num.size(); ++k) num[k] += num[k - 1];
        if (num.back() != 0) throw consistency_error("hilbert_coeffs: inexact division");
        num.pop_back();
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    for (auto c : num)
        if (c < 0) throw consistency_error("hilbert_coeffs: negative coefficient");
    return num;
}

/// Full syzygy bookkeeping for one u.
inline SyzygyReport syzygy_report(std::int64_t s, std::int64_t t, std::int64_t u,
                                  Characteristic p) {
    SyzygyReport rep;
    rep.triple = SortedTriple::from(s, t, u);
    const auto& tr = rep.triple;
    if (tr.redundant()) {
        // (x+y)^u already lies in (x^s, y^t): a non-minimal resolution with a
        // degree-u trivial relation and the Koszul relation.
        rep.i0 = 0;
        rep.a_deg = tr.u;
        rep.b_deg = tr.s + tr.t;
    } else {
        rep.q = q_coefficients(tr);
        rep.i0 = i0_index([&](std::int64_t i) { return delta_at(rep.q, i); }, p, tr.r(),
                          &rep.deltas);
        rep.a_deg = tr.u + rep.i0;
        rep.b_deg = tr.s + tr.t - rep.i0;
    }
    rep.dim = tr.s * tr.t + tr.s * tr.u + tr.t * tr.u - rep.a_deg * rep.b_deg;

    if (rep.a_deg + rep.b_deg != tr.s + tr.t + tr.u)
        throw consistency_error("syzygy degrees violate a + b = s + t + u");
    if (rep.dim < 0 || rep.dim > tr.s * tr.t)
        throw consistency_error("quotient dimension out of range");
    const auto h = hilbert_coeffs(tr.s, tr.t, tr.u, rep.a_deg, rep.b_deg);
    std::int64_t sum = 0;
    for (auto c : h) sum += c;
    if (sum != rep.dim) throw consistency_error("Hilbert series does not sum to dimension");
    return rep;
}

/// dim_k k[x,y]/(x^s, y^t, (x+y)^u) in characteristic p.
inline std::int64_t quotient_dimension(std::int64_t s, std::int64_t t, std::int64_t u,
                                       Characteristic p) {
    return syzygy_report(s, t, u, p).dim;
}

/// Reports for u = 1, 2, ... up to the first u with a_u = s*t.
inline std::vector<SyzygyReport> dimension_sweep(std::int64_t s, std::int64_t t, Characteristic p) {
    if (s < 1 || t < 1) throw invalid_input("dimension_sweep: sizes must be >= 1");
    std::vector<SyzygyReport> out;
    for (std::int64_t u = 1;; ++u) {
        if (u > s + t) throw consistency_error("dimension sweep did not saturate");
        out.push_back(syzygy_report(s, t, u, p));
        if (out.back().dim == s * t) return out;
    }
}

inline Decomposition decompose_via_minors(const BlockSpec& spec) {
    if (spec.product_zero())
        throw invalid_input("decompose_via_minors: requires both eigenvalues nonzero");
    const auto sweep = dimension_sweep(spec.s, spec.t, spec.characteristic);
    std::vector<std::int64_t> dims;
    dims.reserve(sweep.size());
    for (const auto& rep : sweep) dims.push_back(rep.dim);
    auto blocks = partition_from_dims(dims, spec.s * spec.t);
    if (static_cast<std::int64_t>(blocks.length()) != std::min(spec.s, spec.t))
        throw consistency_error("decompose_via_minors: block count is not min(s, t)");
    return {EigenvalueClass::nonzero_product, std::move(blocks)};
}

/// S_lambda(1, ..., 1) with u ones, by the hook-content formula.
inline BigInt schur_eval_ones(const Partition& lambda, std::int64_t u) {
    if (u < 1) throw invalid_input("schur_eval_ones: u must be >= 1");
    const auto conj = conjugate(lambda);
    BigInt num = 1, den = 1;
    for (std::size_t row = 0; row < lambda.length(); ++row)
        for (std::int64_t col = 0; col < lambda[row]; ++col) {
            const auto content = col - static_cast<std::int64_t>(row);
            const auto hook = (lambda[row] - col - 1) +
                              (conj[static_cast<std::size_t>(col)] - static_cast<std::int64_t>(row) - 1) + 1;
            num *= u + content;
            den *= hook;
        }
    if (num % den != 0) throw consistency_error("schur_eval_ones: inexact hook quotient");
    return num / den;
}

/// delta_i recomputed as a gcd of Schur polynomial values. The row subset
/// j_1 < ... < j_{i+1} of H_i is, by the dual Jacobi-Trudi identity,
/// S_{lambda}(1^u) with lambda conjugate to
/// mu = (s-i-j_1, s-i-j_2+1, ..., s-j_{i+1}).
inline BigInt delta_via_schur(const SortedTriple& triple, std::int64_t i) {
    const auto r = triple.r();
    if (r < 1 || i < 0 || i > (r - 1) / 2)
        throw invalid_input("delta_via_schur: requires 0 <= i <= floor((r-1)/2)");
    const auto rows = static_cast<std::size_t>(r - i);
    const auto k = static_cast<std::size_t>(i + 1);
    BigInt g = 0;
    detail::for_each_subset(rows, k, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::int64_t> mu;
        for (std::size_t m = 0; m < k; ++m) {
            const auto j = static_cast<std::int64_t>(idx[m]) + 1;
            const auto part = triple.s - i - j + static_cast<std::int64_t>(m);
            if (part < 0) throw consistency_error("delta_via_schur: negative part in mu");
            if (part > 0) mu.push_back(part);
        }
        g = gcd(g, schur_eval_ones(conjugate(Partition(std::move(mu))), triple.u));
        return g != 1;
    });
    return g;
}

}  // namespace tensor_jordan
