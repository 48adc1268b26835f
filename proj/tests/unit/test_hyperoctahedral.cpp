#include <doctest.h>

#include <set>

#include "hplus/hyperoctahedral.hpp"
#include "hplus/weingarten.hpp"

using namespace hplus;

TEST_SUITE("classical_oracle") {

TEST_CASE("signed permutations") {
    CHECK_THROWS(SignedPermutation({1, 1}, {1, 1}));
    CHECK_THROWS(SignedPermutation({1, 2}, {1, 0}));
    CHECK_THROWS(SignedPermutation({1, 2}, {1}));
    const SignedPermutation g({2, 1, 3}, {-1, 1, -1});
    CHECK(coordinate(g, 2, 1) == -1);
    CHECK(coordinate(g, 1, 2) == 1);
    CHECK(coordinate(g, 1, 1) == 0);
    CHECK(truncated_character(g, 3) == -1);
    CHECK(truncated_character(g, 2) == 0);
    CHECK(truncated_character(SignedPermutation::identity(4), 3) == 3);
    CHECK(truncated_character(SignedPermutation::reflection(4, 2), 4) == 2);
}

TEST_CASE("exact laws for H_2") {
    const auto full = exact_character_law(2, 2);
    CHECK(full.weight(2) == Rational(1, 8));
    CHECK(full.weight(0) == Rational(3, 4));
    CHECK(full.weight(-2) == Rational(1, 8));
    const auto corner = exact_character_law(2, 1);
    CHECK(corner.weight(1) == Rational(1, 4));
    CHECK(corner.weight(0) == Rational(1, 2));
    CHECK(corner.total_mass() == Rational(1));
    CHECK_THROWS_AS(exact_character_law(kMaxEnumerationDimension + 1, 1), std::domain_error);
}

TEST_CASE("second moments agree with the quantum group") {
    // Every partition of two points is non-crossing, so the classical and
    // quantum second moments coincide.
    for (int n = 4; n <= kMaxEnumerationDimension; ++n)
        for (int s = 0; s <= n; ++s) CHECK(exact_character_law(n, s).moment(2) == character_moment(2, n, s, Flavor::H));
    // The crossing pairing contributes classically from order four on.
    CHECK(exact_character_law(6, 6).moment(4) == Rational(4));
    CHECK(character_moment(4, 6, 6, Flavor::H) == Rational(3));
}

TEST_CASE("sampler output is valid and reproducible") {
    const auto a = sample_hn(7, 42, 500);
    const auto b = sample_hn(7, 42, 500);
    CHECK(a == b);
    CHECK(a != sample_hn(7, 43, 500));
    std::set<std::vector<int>> distinct;
    for (const auto& g : a) {
        CHECK(g.size() == 7);
        distinct.insert(g.images());
    }
    CHECK(distinct.size() > 400);
}

TEST_CASE("estimates do not depend on the thread count") {
    const std::uint64_t samples = 3 * kSamplerChunk + 17;
    const auto one = sample_character_law(9, 4, 5, samples, 1);
    const auto three = sample_character_law(9, 4, 5, samples, 3);
    CHECK(one.counts == three.counts);
    std::uint64_t total = 0;
    for (const auto& [x, c] : one.counts) total += c;
    CHECK(total == samples);
}

TEST_CASE("fixed points of a random permutation are nearly Poisson") {
    const auto report = poisson_fixedpoint_check(60, 60, 11, 200000, 0);
    CHECK(report.t == 1.0);
    CHECK(report.tv_distance < 0.01);
    CHECK(report.p_zero == doctest::Approx(std::exp(-1.0)).epsilon(0.02));
    CHECK_THROWS(poisson_fixedpoint_check(5, 6, 1, 10, 0));
}

}
