#include <doctest.h>

#include <gmpxx.h>

#include "hplus/partition.hpp"
#include "hplus/verify/oracles.hpp"

using namespace hplus;

namespace {

Rational fuss_catalan_count(int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(3 * k), static_cast<unsigned long>(k));
    return Rational(b, mpz_class(2 * k + 1));
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("enumeration counts") {
    for (int k = 1; k <= 12; ++k) {
        CHECK(Rational(static_cast<long>(enumerate_nc(k, Flavor::S).size())) == oracle::catalan(k));
        CHECK(enumerate_nc(k, Flavor::O).size() == (k % 2 ? 0u : enumerate_nc(k / 2, Flavor::S).size()));
    }
    for (int k = 1; k <= 6; ++k)
        CHECK(Rational(static_cast<long>(enumerate_nc(2 * k, Flavor::H).size())) == fuss_catalan_count(k));
    CHECK(enumerate_nc(3, Flavor::H).empty());
}

TEST_CASE("every enumerated partition is non-crossing, admissible and distinct") {
    for (Flavor f : {Flavor::O, Flavor::H, Flavor::S}) {
        const auto list = enumerate_nc(8, f);
        for (std::size_t a = 0; a < list.size(); ++a) {
            CHECK(is_noncrossing(list[a]));
            CHECK(admits(f, list[a]));
            if (a > 0) CHECK(list[a - 1] < list[a]);
        }
    }
}

TEST_CASE("canonical order for four points") {
    const auto h = enumerate_nc(4, Flavor::H);
    REQUIRE(h.size() == 3);
    CHECK(h[0].str() == "[[1,2],[3,4]]");
    CHECK(h[1].str() == "[[1,4],[2,3]]");
    CHECK(h[2].str() == "[[1,2,3,4]]");
    CHECK(enumerate_nc(4, Flavor::H) == h);
}

TEST_CASE("construction and validation") {
    const SetPartition p(4, {{3, 1}, {4, 2}});
    CHECK(p.str() == "[[1,3],[2,4]]");
    CHECK_FALSE(is_noncrossing(p));
    CHECK(admits(Flavor::O, p));
    CHECK(SetPartition::from_labels(std::vector<int>{7, 7, 2, 2}) == SetPartition(4, {{1, 2}, {3, 4}}));
    CHECK_THROWS(SetPartition(3, {{1, 2}}));
    CHECK_THROWS(SetPartition(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS(SetPartition(2, {{1, 3}}));
}

TEST_CASE("delta") {
    const SetPartition pairs(4, {{1, 2}, {3, 4}});
    CHECK(delta(pairs, std::vector<int>{5, 5, 2, 2}) == 1);
    CHECK(delta(pairs, std::vector<int>{5, 5, 2, 3}) == 0);
    CHECK(delta(SetPartition::one_block(4), std::vector<int>{1, 2, 1, 1}) == 0);
    CHECK_THROWS(delta(pairs, std::vector<int>{1, 1}));
    // One block against two singletons over {1,2}^2.
    int sum = 0;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            const std::vector<int> i{a, b};
            sum += delta(SetPartition::one_block(2), i) * delta(SetPartition::singletons(2), i);
        }
    CHECK(sum == 2);
}

TEST_CASE("join is a commutative, associative, idempotent coarsening") {
    const auto list = enumerate_nc(4, Flavor::S);
    for (const auto& p : list) {
        CHECK(join(p, p) == p);
        for (const auto& q : list) {
            const auto pq = join(p, q);
            CHECK(pq == join(q, p));
            CHECK(join_block_count(p, q) == pq.block_count());
            CHECK(pq.block_count() <= std::min(p.block_count(), q.block_count()));
            for (const auto& r : list) CHECK(join(pq, r) == join(p, join(q, r)));
        }
    }
}

TEST_CASE("sum of delta products counts join blocks") {
    for (int k = 1; k <= 4; ++k)
        for (long n = 1; n <= 4; ++n) {
            const auto list = enumerate_nc(k, Flavor::S);
            for (const auto& p : list)
                for (const auto& q : list)
                    CHECK(oracle::brute_force_gram_entry(p, q, n) ==
                          integer_power(n, static_cast<unsigned>(join_block_count(p, q))));
        }
}

TEST_CASE("flavor parsing") {
    CHECK(parse_flavor("h") == Flavor::H);
    CHECK(flavor_letter(Flavor::O) == 'o');
    CHECK_THROWS(parse_flavor("x"));
}

}
