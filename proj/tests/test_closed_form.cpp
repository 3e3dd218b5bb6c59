#include <catch_amalgamated.hpp>

#include <tensor_jordan/closed_form.hpp>
#include <tensor_jordan/oracle.hpp>

using namespace tensor_jordan;

namespace {

BlockSpec spec(std::int64_t s, std::int64_t t, bool az, bool bz, std::int64_t p) {
    return {s, t, az, bz, Characteristic(p)};
}

}  // namespace

TEST_CASE("four-case characteristic-zero formula") {
    CHECK(decompose_char0(spec(4, 5, false, false, 0)).blocks == Partition{8, 6, 4, 2});
    CHECK(decompose_char0(spec(2, 3, true, true, 0)).blocks == Partition{2, 2, 1, 1});
    CHECK(decompose_char0(spec(1, 7, false, false, 0)).blocks == Partition{7});
    CHECK(decompose_char0(spec(3, 4, true, false, 0)).blocks == Partition{3, 3, 3, 3});
    CHECK(decompose_char0(spec(3, 4, false, true, 0)).blocks == Partition{4, 4, 4});

    CHECK(decompose_char0(spec(2, 3, true, true, 0)).eigenvalue_class == EigenvalueClass::zero);
    CHECK(decompose_char0(spec(2, 3, false, false, 0)).eigenvalue_class ==
          EigenvalueClass::nonzero_product);
}

TEST_CASE("char-0 formula is symmetric under swapping the factors") {
    for (std::int64_t s = 1; s <= 6; ++s)
        for (std::int64_t t = 1; t <= 6; ++t)
            for (int flags = 0; flags < 4; ++flags) {
                const bool az = flags & 1, bz = flags & 2;
                REQUIRE(decompose_char0(spec(s, t, az, bz, 0)) ==
                        decompose_char0(spec(t, s, bz, az, 0)));
            }
}

TEST_CASE("zero-eigenvalue formulas") {
    CHECK(decompose_zero_eigenvalue(spec(3, 4, true, false, 2)).blocks == Partition{3, 3, 3, 3});
    CHECK(zero_eigenvalue_dims(spec(2, 3, true, true, 5)) == std::vector<std::int64_t>{4, 6});
    CHECK(decompose_zero_eigenvalue(spec(2, 3, true, true, 5)).blocks == Partition{2, 2, 1, 1});
    CHECK(decompose_zero_eigenvalue(spec(1, 1, true, true, 0)).blocks == Partition{1});
    CHECK_THROWS_AS(decompose_zero_eigenvalue(spec(2, 3, false, false, 5)), invalid_input);
}

TEST_CASE("zero-eigenvalue answer is characteristic independent and matches the oracle") {
    for (std::int64_t p : {0, 2, 3, 5, 7, 11, 13})
        for (std::int64_t s = 1; s <= 7; ++s)
            for (std::int64_t t = s; t <= 7; ++t)
                for (auto [az, bz] : {std::pair{true, true}, std::pair{true, false}, std::pair{false, true}}) {
                    const auto sp = spec(s, t, az, bz, p);
                    const auto closed = decompose_zero_eigenvalue(sp);
                    REQUIRE(closed == decompose_char0(sp));
                    REQUIRE(closed.blocks.weight() == s * t);
                    REQUIRE(closed == decompose_via_oracle(sp));
                }
}

TEST_CASE("genericity predicate") {
    CHECK(is_generic(spec(4, 5, false, false, 11)));
    CHECK_FALSE(is_generic(spec(4, 5, false, false, 2)));
    CHECK(is_generic(spec(1, 9, false, false, 2)));
    CHECK(is_generic(spec(4, 5, false, false, 0)));
    CHECK(is_generic(spec(4, 5, true, false, 2)));
    CHECK(is_generic(spec(4, 5, false, false, 3)));
    CHECK_FALSE(is_generic(spec(4, 5, false, false, 5)));
    CHECK_FALSE(is_generic(spec(4, 5, false, false, 7)));
}

TEST_CASE("generic instances return the char-0 answer") {
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t s = 1; s <= 7; ++s)
            for (std::int64_t t = s; t <= 7; ++t) {
                const auto sp = spec(s, t, false, false, p);
                const bool same = decompose_via_oracle(sp) == decompose_char0(sp);
                REQUIRE(is_generic(sp) == same);
            }
}
