#include <doctest.h>

#include <functional>

#include "hplus/weingarten.hpp"
#include "hplus/verify/oracles.hpp"

using namespace hplus;

TEST_SUITE("weingarten") {

TEST_CASE("moment examples") {
    CHECK(character_moment(4, 4, 2, Flavor::H) == Rational(5, 6));
    CHECK(character_moment(6, 5, 5, Flavor::H) == Rational(12));
    CHECK(character_moment(2, 7, 3, Flavor::H) == Rational(3, 7));
    CHECK(character_moment(3, 6, 4, Flavor::H) == Rational(0));
    CHECK(character_moment(4, 6, 0, Flavor::H) == Rational(0));
    CHECK_THROWS_AS(character_moment(2, 6, 7, Flavor::H), std::invalid_argument);
    CHECK_THROWS_AS(character_moment(2, 3, 1, Flavor::H), std::invalid_argument);
}

TEST_CASE("full character moments count diagrams") {
    for (Flavor f : {Flavor::O, Flavor::H, Flavor::S})
        for (int k = 1; k <= 6; ++k)
            CHECK(character_moment(k, 9, 9, f) == Rational(static_cast<long>(enumerate_nc(k, f).size())));
}

TEST_CASE("Gram times Weingarten is the identity") {
    for (Flavor f : {Flavor::O, Flavor::H, Flavor::S})
        for (int k = 1; k <= 6; ++k)
            for (long n = 4; n <= 7; ++n) {
                const auto pair = weingarten_matrix(k, n, f);
                CHECK(pair->gram * *pair->weingarten == RationalMatrix::identity(pair->basis.size()));
            }
}

TEST_CASE("memoized Weingarten matrices are shared") {
    const auto a = weingarten_matrix(4, 5, Flavor::H);
    CHECK(a == weingarten_matrix(4, 5, Flavor::H));
    clear_weingarten_cache();
    const auto b = weingarten_matrix(4, 5, Flavor::H);
    CHECK(*a->weingarten == *b->weingarten);
}

TEST_CASE("small dimensions need the override and singularity is detected") {
    CHECK_THROWS_AS(gram_matrix(4, 3, Flavor::H), std::invalid_argument);
    CHECK_NOTHROW(weingarten_matrix(4, 3, Flavor::H, GramOptions{true}));
    CHECK_THROWS_AS(weingarten_matrix(4, 1, Flavor::H, GramOptions{true}), SingularGramError);
}

TEST_CASE("integrals agree with the orthogonal projection onto fixed vectors") {
    const long n = 4;
    for (Flavor f : {Flavor::H, Flavor::O}) {
        const auto basis = enumerate_nc(4, f);
        std::vector<int> i(4), j(4);
        int checked = 0;
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 16; b += 3) {
                for (int x = 0; x < 4; ++x) {
                    i[static_cast<std::size_t>(x)] = 1 + ((a >> x) & 1);
                    j[static_cast<std::size_t>(x)] = 1 + ((b >> x) & 1) * (x % 2 ? 3 : 1);
                }
                CHECK(integrate_monomial(i, j, n, f) == oracle::projection_integral(basis, i, j, n));
                ++checked;
            }
        CHECK(checked == 96);
    }
    CHECK_THROWS_AS(integrate_monomial(std::vector<int>{1, 5}, std::vector<int>{1, 1}, 4, Flavor::H), std::out_of_range);
}

TEST_CASE("asymptotic moment polynomials") {
    const auto t = RationalPolynomial::variable();
    CHECK(asymptotic_moment_polynomial(2, Flavor::H) == t);
    CHECK(asymptotic_moment_polynomial(4, Flavor::H) == t + RationalPolynomial(2) * t * t);
    CHECK(asymptotic_moment_polynomial(6, Flavor::H) == t + RationalPolynomial(6) * t * t + RationalPolynomial(5) * t * t * t);
    CHECK(asymptotic_moment_polynomial(5, Flavor::H).is_zero());
    CHECK(asymptotic_moment(6, Rational(1, 2), Flavor::H).value == Rational(21, 8));
    CHECK_THROWS(asymptotic_moment(4, Rational(3, 2), Flavor::H));
    CHECK_THROWS(asymptotic_moment(4, Rational(0), Flavor::H));
    CHECK(truncation_size(10, Rational(1, 3)) == 3);
}

TEST_CASE("mixed moments agree with summation over coloured indices") {
    const long n = 8;
    const std::vector<IndexInterval> intervals{{1, 2}, {3, 5}};
    for (const std::vector<int>& pattern :
         {std::vector<int>{0, 0}, {0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 1, 0}}) {
        std::vector<int> index(pattern.size());
        Rational expected;
        std::function<void(std::size_t)> visit = [&](std::size_t pos) {
            if (pos == pattern.size()) {
                expected += integrate_monomial(index, index, n, Flavor::H);
                return;
            }
            const auto& r = intervals[static_cast<std::size_t>(pattern[pos])];
            for (long v = r.first; v <= r.last; ++v) {
                index[pos] = static_cast<int>(v);
                visit(pos + 1);
            }
        };
        visit(0);
        CHECK(mixed_character_moment(pattern, intervals, n, Flavor::H) == expected);
    }
    CHECK(mixed_character_moment(std::vector<int>{0, 0}, intervals, n, Flavor::H) ==
          character_moment(2, n, 2, Flavor::H));
    const std::vector<IndexInterval> overlapping{{1, 3}, {3, 4}};
    CHECK_THROWS(mixed_character_moment(std::vector<int>{0, 1}, overlapping, n, Flavor::H));
}

TEST_CASE("even moments are nonnegative") {
    for (long n = 4; n <= 9; ++n)
        for (long s = 0; s <= n; ++s)
            for (int k : {2, 4, 6}) CHECK(character_moment(k, n, s, Flavor::H).sign() >= 0);
}

}
