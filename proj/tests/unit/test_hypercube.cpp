#include <doctest.h>

#include "hplus/hypercube.hpp"

using namespace hplus;

TEST_SUITE("hypercube") {

TEST_CASE("cube graph") {
    const CubeGraph g(3);
    CHECK(g.vertex_count() == 8);
    for (std::size_t v = 0; v < 8; ++v) {
        CHECK(g.neighbors(v).size() == 3);
        for (auto w : g.neighbors(v)) CHECK(__builtin_popcount(static_cast<unsigned>(v ^ w)) == 1);
    }
    CHECK(g.adjacency() == g.adjacency().transposed());
}

TEST_CASE("spectrum of the 4-cube") {
    const auto r = spectrum_check(4);
    CHECK(r.vectors_checked == 16);
    CHECK(r.eigen_equations_hold);
    const std::map<int, std::int64_t> expected{{-4, 1}, {-2, 4}, {0, 6}, {2, 4}, {4, 1}};
    CHECK(r.multiplicities == expected);
    CHECK(r.multiplicities_binomial);
    CHECK_THROWS(spectrum_check(kMaxSpectrumDimension + 1));
}

TEST_CASE("distance algebra expansions") {
    const auto square = distance_algebra_check(2);
    REQUIRE(square.coefficients.size() == 2);
    CHECK(square.coefficients[1] == std::vector<std::int64_t>{2, 0, 2});
    const auto cube = distance_algebra_check(3);
    CHECK(cube.coefficients[1] == std::vector<std::int64_t>{3, 0, 2, 0});
    CHECK(cube.coefficients[2] == std::vector<std::int64_t>{0, 7, 0, 6});
    CHECK(cube.spans_equal);
    CHECK(cube.distance_eigenvalues_distinct);
    CHECK_THROWS(distance_algebra_check(1));
    CHECK_THROWS(distance_algebra_check(kMaxDistanceAlgebraDimension + 1));
}

}
