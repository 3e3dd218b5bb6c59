#pragma once

// Closed-form answers: the characteristic-zero four-case formula, the
// zero-eigenvalue dimension formulas (valid in every characteristic), and
// the test for when a positive characteristic still gives the generic answer.

#include <cstdint>
#include <vector>

#include "core.hpp"
#include "minors.hpp"

namespace tensor_jordan {

inline Decomposition decompose_char0(const BlockSpec& spec) {
    const auto n = spec.normalized();
    const auto s = n.s, t = n.t;
    std::vector<std::int64_t> parts;
    if (n.alpha_zero && n.beta_zero) {
        parts.assign(static_cast<std::size_t>(t - s + 1), s);
        for (std::int64_t i = 1; i <= 2 * s - 2; ++i) parts.push_back(s - (i + 1) / 2);
    } else if (n.alpha_zero) {
        parts.assign(static_cast<std::size_t>(t), s);
    } else if (n.beta_zero) {
        parts.assign(static_cast<std::size_t>(s), t);
    } else {
        for (std::int64_t i = 1; i <= s; ++i) parts.push_back(s + t + 1 - 2 * i);
    }
    return {eigenvalue_class_of(spec), Partition::from_unsorted(std::move(parts))};
}

/// a_i = dim R/z^i R for a zero-eigenvalue instance, i = 1 .. saturation.
inline std::vector<std::int64_t> zero_eigenvalue_dims(const BlockSpec& spec) {
    if (!spec.product_zero())
        throw invalid_input("zero_eigenvalue_dims: requires a zero eigenvalue");
    const auto n = spec.normalized();
    const auto s = n.s, t = n.t;
    std::vector<std::int64_t> a;
    if (n.alpha_zero && n.beta_zero) {
        for (std::int64_t i = 1; i <= s; ++i) a.push_back((s + t) * i - i * i);
    } else if (n.alpha_zero) {
        for (std::int64_t i = 1; i <= s; ++i) a.push_back(t * i);
    } else {
        for (std::int64_t i = 1; i <= t; ++i) a.push_back(s * i);
    }
    return a;
}

inline Decomposition decompose_zero_eigenvalue(const BlockSpec& spec) {
    const auto a = zero_eigenvalue_dims(spec);
    return {EigenvalueClass::zero, partition_from_dims(a, spec.s * spec.t)};
}

/// True when every characteristic-zero syzygy degree survives reduction
/// mod p, so that every pipeline returns decompose_char0's answer.
inline bool is_generic(const BlockSpec& spec) {
    if (spec.product_zero()) return true;
    const auto p = spec.characteristic;
    if (p.is_zero() || p.value() >= static_cast<std::uint64_t>(spec.s + spec.t - 1)) return true;
    for (std::int64_t u = 1; u <= spec.s + spec.t - 2; ++u) {
        const auto generic = syzygy_report(spec.s, spec.t, u, Characteristic::zero());
        const auto actual = syzygy_report(spec.s, spec.t, u, p);
        if (generic.i0 != actual.i0) return false;
    }
    return true;
}

}  // namespace tensor_jordan
