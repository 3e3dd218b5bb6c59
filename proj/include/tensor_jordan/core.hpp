#pragma once

// Shared exact primitives: characteristic, partitions, problem specs,
// big-integer binomials and p-adic valuations.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tensor_jordan {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for arguments that violate an operation's preconditions
/// (bad characteristic, sizes < 1, out-of-range indices).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computations disagree or an invariant that
/// the mathematics guarantees fails. Always indicates a bug.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

/// Characteristic of the base field: 0 or a prime below 2^31.
class Characteristic {
public:
    constexpr Characteristic() = default;

    explicit Characteristic(std::int64_t value) {
        if (value < 0) throw invalid_input("characteristic must be non-negative");
        if (value > (std::int64_t{1} << 31))
            throw invalid_input("characteristic " + std::to_string(value) + " exceeds 2^31");
        if (value != 0 && !detail::is_prime(static_cast<std::uint64_t>(value)))
            throw invalid_input("characteristic " + std::to_string(value) + " is not prime");
        value_ = static_cast<std::uint32_t>(value);
    }

    static Characteristic zero() { return Characteristic{}; }

    constexpr std::uint32_t value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }

    friend constexpr auto operator<=>(Characteristic, Characteristic) = default;

private:
    std::uint32_t value_ = 0;
};

/// Weakly decreasing sequence of positive integers; the empty partition
/// has weight 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw invalid_input("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw invalid_input("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<std::int64_t> parts)
        : Partition(std::vector<std::int64_t>(parts)) {}

    /// Sorts descending and drops zero entries.
    static Partition from_unsorted(std::vector<std::int64_t> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>{});
        return Partition(std::move(parts));
    }

    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    std::int64_t operator[](std::size_t i) const { return parts_[i]; }

    std::int64_t weight() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
    }

    /// (size, multiplicity) pairs, sizes descending.
    std::vector<std::pair<std::int64_t, std::int64_t>> multiplicities() const {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (auto p : parts_) {
            if (!out.empty() && out.back().first == p)
                ++out.back().second;
            else
                out.emplace_back(p, 1);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Conjugate partition: the transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(p.largest()), 0);
    for (auto part : p.parts())
        for (std::int64_t j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// Recovers the block partition c from the dimension sequence
/// a_1, a_2, ... (with a_0 = 0) whose differences form the conjugate b.
/// Trailing entries equal to `total` are allowed.
inline Partition partition_from_dims(const std::vector<std::int64_t>& dims, std::int64_t total) {
    std::vector<std::int64_t> diffs;
    std::int64_t prev = 0;
    bool saturated = total == 0;
    for (auto a : dims) {
        const auto b = a - prev;
        if (saturated) {
            if (b != 0) throw consistency_error("dimension sequence changes after reaching total");
            continue;
        }
        if (b <= 0) throw consistency_error("dimension sequence is not strictly increasing");
        if (!diffs.empty() && b > diffs.back())
            throw consistency_error("dimension differences are not weakly decreasing");
        diffs.push_back(b);
        prev = a;
        if (a > total) throw consistency_error("dimension sequence exceeds total");
        if (a == total) saturated = true;
    }
    if (!saturated) throw consistency_error("dimension sequence does not reach total");
    return conjugate(Partition(std::move(diffs)));
}

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw invalid_input("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// v_p(C(n, k)) by Kummer's theorem: the number of carries when adding
/// k and n - k in base p.
inline std::int64_t padic_valuation_binomial(std::int64_t n, std::int64_t k, std::uint32_t p) {
    if (n < 0 || k < 0 || k > n)
        throw invalid_input("padic_valuation_binomial: need 0 <= k <= n");
    if (!detail::is_prime(p)) throw invalid_input("padic_valuation_binomial: p must be prime");
    std::int64_t x = k, y = n - k, carry = 0, carries = 0;
    while (x > 0 || y > 0 || carry > 0) {
        const auto digit = x % p + y % p + carry;
        carry = digit >= static_cast<std::int64_t>(p) ? 1 : 0;
        carries += carry;
        x /= p;
        y /= p;
    }
    return carries;
}

enum class EigenvalueClass { zero, nonzero_product };

inline const char* to_string(EigenvalueClass c) {
    return c == EigenvalueClass::zero ? "zero" : "nonzero-product";
}

/// One instance J(alpha, s) (x) J(beta, t). Only the zero/nonzero class of
/// each eigenvalue enters the answer.
struct BlockSpec {
    std::int64_t s = 1;
    std::int64_t t = 1;
    bool alpha_zero = false;
    bool beta_zero = false;
    Characteristic characteristic;

    BlockSpec() = default;
    BlockSpec(std::int64_t s_, std::int64_t t_, bool alpha_zero_, bool beta_zero_,
              Characteristic p)
        : s(s_), t(t_), alpha_zero(alpha_zero_), beta_zero(beta_zero_), characteristic(p) {
        if (s < 1 || t < 1) throw invalid_input("block sizes must be at least 1");
    }

    /// Nonzero-eigenvalue instance, the case the general algorithms handle.
    static BlockSpec nonzero(std::int64_t s, std::int64_t t, Characteristic p) {
        return {s, t, false, false, p};
    }

    std::uint32_t p() const noexcept { return characteristic.value(); }
    bool product_zero() const noexcept { return alpha_zero || beta_zero; }
    bool is_normalized() const noexcept { return s <= t; }

    /// Swaps the factors (sizes and flags together) so that s <= t.
    BlockSpec normalized() const {
        if (s <= t) return *this;
        return {t, s, beta_zero, alpha_zero, characteristic};
    }

    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// J(alpha, s) (x) J(beta, t) = (+)_i J(alpha*beta, c_i).
struct Decomposition {
    EigenvalueClass eigenvalue_class = EigenvalueClass::nonzero_product;
    Partition blocks;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline EigenvalueClass eigenvalue_class_of(const BlockSpec& spec) {
    return spec.product_zero() ? EigenvalueClass::zero : EigenvalueClass::nonzero_product;
}

/// "8^1+4^3" style rendering, sizes descending.
inline std::string format_blocks(const Partition& blocks) {
    std::string out;
    for (auto [size, mult] : blocks.multiplicities()) {
        if (!out.empty()) out += '+';
        out += std::to_string(size) + '^' + std::to_string(mult);
    }
    return out;
}

}  // namespace tensor_jordan
