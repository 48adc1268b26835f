#include <doctest.h>

#include <random>

#include "hplus/matrix.hpp"
#include "hplus/polynomial.hpp"
#include "hplus/rational.hpp"
#include "hplus/series.hpp"

using namespace hplus;

TEST_SUITE("exactalg") {

TEST_CASE("rationals are canonical and print as p/q") {
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("5").str() == "5/1");
    CHECK(Rational().str() == "0/1");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK((Rational(3, 4) / Rational(-3, 8)).str() == "-2/1");
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(integer_power(-3, 3) == Rational(-27));
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1) / Rational(), std::domain_error);
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("polynomials in t") {
    const auto t = RationalPolynomial::variable();
    const auto p = (t + RationalPolynomial(1)) * (t + RationalPolynomial(1));
    CHECK(p.degree() == 2);
    CHECK(p.coefficient(1) == Rational(2));
    CHECK(p.evaluate(Rational(1, 2)) == Rational(9, 4));
    CHECK((t * t).shifted(Rational(1)) == p);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK((t + RationalPolynomial(2) * t * t).str() == "t + 2t^2");
}

TEST_CASE("Hilbert matrix inverse and determinant") {
    RationalMatrix h(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) h(i, j) = Rational(1, static_cast<long>(i + j + 1));
    const auto expected = RationalMatrix::from_rows({{Rational(9), Rational(-36), Rational(30)},
                                                     {Rational(-36), Rational(192), Rational(-180)},
                                                     {Rational(30), Rational(-180), Rational(180)}});
    CHECK(inverse(h) == expected);
    CHECK(determinant(h) == Rational(1, 2160));
    CHECK(rank(h) == 3);
}

TEST_CASE("inverse property on random integer matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-5, 5);
    int invertible = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        RationalMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(entry(rng));
        if (determinant(a).is_zero()) {
            CHECK(rank(a) < n);
            CHECK_THROWS_AS(inverse(a), SingularMatrixError);
            continue;
        }
        ++invertible;
        const auto b = inverse(a);
        CHECK(a * b == RationalMatrix::identity(n));
        CHECK(b * a == RationalMatrix::identity(n));
        CHECK(determinant(a) * determinant(b) == Rational(1));
    }
    CHECK(invertible > 40);
}

TEST_CASE("singular matrices report the failing stage") {
    const auto a = RationalMatrix::from_rows(
        {{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}, {Rational(1), Rational(0), Rational(1)}});
    CHECK(rank(a) == 2);
    try {
        inverse(a);
        FAIL("expected a singular matrix");
    } catch (const SingularMatrixError& e) {
        CHECK(e.stage() < 3);
    }
    CHECK(inverse(RationalMatrix()).empty());
}

TEST_CASE("simultaneous permutation search") {
    const auto a = RationalMatrix::from_rows(
        {{Rational(1), Rational(2), Rational(0)}, {Rational(2), Rational(3), Rational(4)}, {Rational(0), Rational(4), Rational(5)}});
    const std::vector<std::size_t> perm{2, 0, 1};
    RationalMatrix b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) b(perm[i], perm[j]) = a(i, j);
    const auto found = find_simultaneous_permutation(a, b);
    REQUIRE(found);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(b((*found)[i], (*found)[j]) == a(i, j));
    b(0, 0) = Rational(7);
    CHECK_FALSE(find_simultaneous_permutation(a, b));
}

TEST_CASE("series inversion of z + z^2") {
    FormalSeries g(8);
    g[1] = RationalPolynomial(1);
    g[2] = RationalPolynomial(1);
    const auto inv = compose_inverse(g);
    const std::vector<long> expected{0, 1, -1, 2, -5, 14, -42, 132, -429};
    for (int d = 0; d <= 8; ++d) CHECK(inv[d] == RationalPolynomial(expected[static_cast<std::size_t>(d)]));
    const auto id = compose(g, inv);
    CHECK(id == FormalSeries::identity(8));
}

TEST_CASE("series reciprocal and products") {
    FormalSeries a(6);
    a[0] = RationalPolynomial(1);
    a[1] = RationalPolynomial(-1);
    const auto r = reciprocal(a);
    for (int d = 0; d <= 6; ++d) CHECK(r[d] == RationalPolynomial(1));
    CHECK(a * r == FormalSeries::one(6));
    CHECK_THROWS(reciprocal(FormalSeries::identity(6)));
    CHECK_THROWS(compose(a, a));
    CHECK_THROWS(a[7]);
    const auto z = FormalSeries::identity(6);
    CHECK(z.dilated(2)[2] == RationalPolynomial(1));
    CHECK(z.shifted_up()[2] == RationalPolynomial(1));
    CHECK(z.shifted_down()[0] == RationalPolynomial(1));
}

}
