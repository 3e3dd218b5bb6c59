#pragma once

// Jordan type from the bijectivity flags of theta^{s+t-2-2i} : R_i -> R_{s+t-2-i}
// on R = k[x,y]/(x^s, y^t), theta = x + y.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "core.hpp"

namespace tensor_jordan {

/// (D_p(0), ..., D_p(s-1)); 1 marks a non-bijective map.
struct DeltaSequence {
    std::vector<int> flags;

    friend bool operator==(const DeltaSequence&, const DeltaSequence&) = default;
};

struct LeadingModule {
    std::int64_t length = 0;
    std::int64_t degree = 0;  // how many summands share this length

    friend bool operator==(const LeadingModule&, const LeadingModule&) = default;
};

struct LeadingModuleReport {
    std::vector<LeadingModule> modules;

    friend bool operator==(const LeadingModuleReport&, const LeadingModuleReport&) = default;
};

namespace detail {

inline void check_sizes(std::int64_t s, std::int64_t t) {
    if (s < 1 || t < 1) throw invalid_input("block sizes must be at least 1");
    if (s > t) throw invalid_input("requires s <= t");
}

inline void check_index(std::int64_t s, std::int64_t i) {
    if (i < 0 || i >= s) throw invalid_input("index must lie in 0..s-1");
}

}  // namespace detail

/// D(i) = prod_{j=0}^{i} C(s+t-2-2i+j, t-1-i) / C(t-1-i+j, t-1-i).
inline BigInt roberts_determinant(std::int64_t s, std::int64_t t, std::int64_t i) {
    detail::check_sizes(s, t);
    detail::check_index(s, i);
    BigInt num = 1, den = 1;
    for (std::int64_t j = 0; j <= i; ++j) {
        num *= binomial(s + t - 2 - 2 * i + j, t - 1 - i);
        den *= binomial(t - 1 - i + j, t - 1 - i);
    }
    if (num % den != 0) throw consistency_error("roberts_determinant: quotient is not an integer");
    return num / den;
}

/// v_p(D(i)) assembled from Kummer valuations of the binomial factors.
inline std::int64_t roberts_valuation(std::int64_t s, std::int64_t t, std::int64_t i,
                                      std::uint32_t p) {
    detail::check_sizes(s, t);
    detail::check_index(s, i);
    std::int64_t v = 0;
    for (std::int64_t j = 0; j <= i; ++j) {
        v += padic_valuation_binomial(s + t - 2 - 2 * i + j, t - 1 - i, p);
        v -= padic_valuation_binomial(t - 1 - i + j, t - 1 - i, p);
    }
    if (v < 0) throw consistency_error("roberts_valuation: negative valuation");
    return v;
}

inline DeltaSequence delta_sequence(std::int64_t s, std::int64_t t, Characteristic p) {
    detail::check_sizes(s, t);
    DeltaSequence out;
    out.flags.reserve(static_cast<std::size_t>(s));
    for (std::int64_t i = 0; i < s; ++i)
        out.flags.push_back(p.is_zero() ? 0 : roberts_valuation(s, t, i, p.value()) > 0 ? 1 : 0);
    if (out.flags.back() != 0)
        throw consistency_error("delta_sequence: R_{s-1} -> R_{t-1} must be bijective");
    return out;
}

/// Same flags decided from the exact integers D(i); small sizes only.
inline DeltaSequence delta_sequence_exact(std::int64_t s, std::int64_t t, Characteristic p) {
    detail::check_sizes(s, t);
    DeltaSequence out;
    for (std::int64_t i = 0; i < s; ++i) {
        const auto d = roberts_determinant(s, t, i);
        out.flags.push_back(p.is_zero() ? (d == 0 ? 1 : 0) : (d % p.value() == 0 ? 1 : 0));
    }
    return out;
}

/// Left-to-right scan: a 0 at a leading index i gives one block of length
/// s+t-1-2i; a run of f ones starting at i, closed by a 0, gives f+1 blocks
/// of length s+t-1-2i-f.
inline LeadingModuleReport scan_leading_modules(const DeltaSequence& delta, std::int64_t s,
                                                std::int64_t t) {
    detail::check_sizes(s, t);
    const auto& flags = delta.flags;
    if (static_cast<std::int64_t>(flags.size()) != s)
        throw invalid_input("scan_leading_modules: sequence length must equal s");
    if (flags.back() != 0) throw invalid_input("scan_leading_modules: last flag must be 0");
    LeadingModuleReport rep;
    std::int64_t i = 0;
    while (i < s) {
        std::int64_t f = 0;
        while (flags[static_cast<std::size_t>(i + f)] != 0) ++f;
        rep.modules.push_back({s + t - 1 - 2 * i - f, f + 1});
        i += f + 1;
    }

    std::int64_t count = 0, weight = 0;
    for (const auto& m : rep.modules) {
        count += m.degree;
        weight += m.length * m.degree;
    }
    if (count != s || weight != s * t)
        throw consistency_error("scan_leading_modules: block totals do not match s and s*t");
    return rep;
}

inline Partition expand(const LeadingModuleReport& rep) {
    std::vector<std::int64_t> parts;
    for (const auto& m : rep.modules) parts.insert(parts.end(), static_cast<std::size_t>(m.degree), m.length);
    return Partition(std::move(parts));
}

inline Decomposition decompose_via_delta(const BlockSpec& spec) {
    if (spec.product_zero())
        throw invalid_input("decompose_via_delta: requires both eigenvalues nonzero");
    const auto n = spec.normalized();
    const auto delta = delta_sequence(n.s, n.t, n.characteristic);
    return {EigenvalueClass::nonzero_product, expand(scan_leading_modules(delta, n.s, n.t))};
}

/// Largest n with theta^n != 0 in k[x,y]/(x^s, y^t).
inline std::int64_t nilpotency(std::int64_t s, std::int64_t t, Characteristic p) {
    detail::check_sizes(s, t);
    if (p.is_zero()) return s + t - 2;
    for (std::int64_t n = s + t - 2; n >= 0; --n) {
        const auto lo = std::max<std::int64_t>(0, n - t + 1);
        const auto hi = std::min(s - 1, n);
        for (std::int64_t k = lo; k <= hi; ++k)
            if (padic_valuation_binomial(n, k, p.value()) == 0) return n;
    }
    throw consistency_error("nilpotency: theta^0 vanished");
}

}  // namespace tensor_jordan
