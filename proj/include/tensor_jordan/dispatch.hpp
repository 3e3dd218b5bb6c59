#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "closed_form.hpp"
#include "core.hpp"
#include "delta.hpp"
#include "minors.hpp"
#include "oracle.hpp"

namespace tensor_jordan {

enum class Method { automatic, delta, minors, oracle, char0 };

inline std::string_view to_string(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::delta: return "delta";
        case Method::minors: return "minors";
        case Method::oracle: return "oracle";
        case Method::char0: return "char0";
    }
    return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
    for (auto m : {Method::automatic, Method::delta, Method::minors, Method::oracle, Method::char0})
        if (to_string(m) == name) return m;
    return std::nullopt;
}

struct DecomposeResult {
    Decomposition decomposition;
    std::string pipeline;  // what actually produced the answer
};

/// Zero-eigenvalue instances go to the closed form unless the oracle or
/// the char-0 formula is requested explicitly. `automatic` runs the delta
/// algorithm and cross-checks it against the minor sweep.
inline DecomposeResult decompose(const BlockSpec& spec, Method method) {
    const auto n = spec.normalized();
    if (method == Method::oracle) return {decompose_via_oracle(n), "oracle"};
    if (method == Method::char0) return {decompose_char0(n), "char0"};
    if (n.product_zero()) return {decompose_zero_eigenvalue(n), "closed-form"};
    switch (method) {
        case Method::delta: return {decompose_via_delta(n), "delta"};
        case Method::minors: return {decompose_via_minors(n), "minors"};
        default: break;
    }
    auto primary = decompose_via_delta(n);
    if (primary != decompose_via_minors(n))
        throw consistency_error("delta and minor algorithms disagree for s=" + std::to_string(n.s) +
                                " t=" + std::to_string(n.t) + " p=" + std::to_string(n.p()));
    return {std::move(primary), "delta"};
}

}  // namespace tensor_jordan
