#pragma once

// Brute-force ground truth: build the tensored matrix explicitly and read
// its Jordan type from ranks of powers of the nilpotent part.

#include "core.hpp"
#include "field_matrix.hpp"

namespace tensor_jordan {

template <class Field>
FieldMatrix<Field> tensored_jordan_matrix(const Field& field,
                                          const typename Field::value_type& alpha, std::int64_t s,
                                          const typename Field::value_type& beta, std::int64_t t) {
    return kronecker(jordan_matrix(field, alpha, static_cast<std::size_t>(s)),
                     jordan_matrix(field, beta, static_cast<std::size_t>(t)));
}

/// Oracle with explicit eigenvalues in the given field.
template <class Field>
Partition oracle_partition(const Field& field, const typename Field::value_type& alpha,
                           std::int64_t s, const typename Field::value_type& beta, std::int64_t t) {
    const auto m = tensored_jordan_matrix(field, alpha, s, beta, t);
    return partition_from_ranks(m, field.mul(alpha, beta));
}

/// Uses eigenvalue 0 for a zero flag and 1 otherwise; characteristic 0 runs
/// over exact rationals.
inline Decomposition decompose_via_oracle(const BlockSpec& spec) {
    return with_field(spec.characteristic, [&](const auto& field) {
        const auto alpha = spec.alpha_zero ? field.zero() : field.one();
        const auto beta = spec.beta_zero ? field.zero() : field.one();
        return Decomposition{eigenvalue_class_of(spec),
                             oracle_partition(field, alpha, spec.s, beta, spec.t)};
    });
}

}  // namespace tensor_jordan
