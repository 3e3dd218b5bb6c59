#include <catch_amalgamated.hpp>

#include <tensor_jordan/delta.hpp>
#include <tensor_jordan/field_matrix.hpp>
#include <tensor_jordan/oracle.hpp>
#include <tensor_jordan/structure.hpp>

using namespace tensor_jordan;

namespace {

template <class Field>
Partition lengths_from(const Field& f, std::int64_t s, std::int64_t t) {
    return build_generating_set(f, s, t).chain_lengths();
}

}  // namespace

TEST_CASE("graded basis dimensions") {
    const GradedBasis b(3, 5);
    CHECK(b.dimension_sequence() == std::vector<std::int64_t>{1, 2, 3, 3, 3, 2, 1});
    CHECK(b.size() == 15);
    CHECK(b.top_degree() == 6);
    CHECK(b.monomial(b.offset(2)) == GradedBasis::Monomial{2, 0});
    CHECK(b.index_of(0, 0) == 0);
    CHECK_FALSE(b.contains(3, 0));
    CHECK_THROWS_AS(b.index_of(0, 5), invalid_input);
    CHECK_THROWS_AS(GradedBasis(0, 3), invalid_input);

    for (std::int64_t s = 1; s <= 8; ++s)
        for (std::int64_t t = s; t <= 8; ++t) {
            const GradedBasis g(s, t);
            const auto d = g.dimension_sequence();
            for (std::int64_t k = 0; k <= s + t - 2; ++k) {
                const auto expected = std::min({k + 1, s, s + t - 1 - k});
                REQUIRE(d[static_cast<std::size_t>(k)] == expected);
            }
        }
}

TEST_CASE("multiplication matrices between graded pieces") {
    const RationalField q;
    const GradedBasis b22(2, 2);
    const auto m = theta_power_matrix(q, b22, 0, 2);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 1);
    CHECK(m(0, 0) == Rational(2));
    CHECK(theta_power_matrix(PrimeField(2), b22, 0, 2).is_zero());
    CHECK_THROWS_AS(theta_power_matrix(q, b22, 2, 1), invalid_input);
    CHECK_THROWS_AS(theta_power_matrix(q, b22, 0, 3), invalid_input);

    for (std::int64_t s = 1; s <= 7; ++s)
        for (std::int64_t t = s; t <= 7; ++t) {
            const GradedBasis b(s, t);
            for (std::int64_t i = 0; i < s; ++i) {
                // into the middle degree t-1: injective in characteristic 0
                REQUIRE(rank(theta_power_matrix(q, b, i, t - 1)) == static_cast<std::size_t>(i + 1));
                const auto j = s + t - 1 - i;
                if (i >= 1 && j >= i && j <= s + t - 2)
                    REQUIRE(rank(theta_power_matrix(q, b, i, j)) < b.dim(i));
            }
        }
}

TEST_CASE("generating set examples") {
    CHECK(lengths_from(PrimeField(2), 1, 6) == Partition{6});
    CHECK(lengths_from(RationalField{}, 1, 1) == Partition{1});
    CHECK(lengths_from(RationalField{}, 2, 2) == Partition{3, 1});
    CHECK(lengths_from(PrimeField(2), 2, 2) == Partition{2, 2});
    CHECK(lengths_from(PrimeField(3), 2, 2) == Partition{3, 1});
    CHECK_THROWS_AS(build_generating_set(PrimeField(2), 5, 4), invalid_input);

    const auto set = build_generating_set(PrimeField(2), 4, 5);
    CHECK(set.chain_lengths() == Partition{8, 4, 4, 4});
    REQUIRE(set.generators.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(set.generators[i].degree == static_cast<std::int64_t>(i));
    CHECK(set.generators[0].is_leading());
    CHECK(set.socle_degrees.front() == 7);
}

TEST_CASE("generating set chain lengths match the oracle and the delta scan") {
    for (std::int64_t p : {0, 2, 3, 5, 7})
        for (std::int64_t s = 1; s <= 7; ++s)
            for (std::int64_t t = s; t <= 7; ++t) {
                const Characteristic ch(p);
                const auto spec = BlockSpec::nonzero(s, t, ch);
                const auto lengths = with_field(ch, [&](const auto& f) { return lengths_from(f, s, t); });
                REQUIRE(lengths == decompose_via_oracle(spec).blocks);

                // leading generators carry the scan's module lengths
                const auto rep = scan_leading_modules(delta_sequence(s, t, ch), s, t);
                const auto socles = with_field(ch, [&](const auto& f) {
                    return build_generating_set(f, s, t).socle_degrees;
                });
                REQUIRE(socles.size() == rep.modules.size());
                std::int64_t degree = 0;
                for (std::size_t k = 0; k < socles.size(); ++k) {
                    REQUIRE(socles[k] - degree + 1 == rep.modules[k].length);
                    degree += rep.modules[k].degree;
                }
            }
}
