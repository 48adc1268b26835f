#include <doctest.h>

#include <cmath>
#include <random>

#include "hplus/bessel.hpp"
#include "hplus/free_bessel.hpp"
#include "hplus/verify/oracles.hpp"

using namespace hplus;

namespace {

MomentSequence constant_moments(const std::vector<Rational>& values) {
    std::vector<RationalPolynomial> out;
    for (const auto& v : values) out.emplace_back(v);
    return MomentSequence(std::move(out));
}

CumulantSequence constant_cumulants(const std::vector<Rational>& values) {
    std::vector<RationalPolynomial> out;
    for (const auto& v : values) out.emplace_back(v);
    return CumulantSequence(std::move(out));
}

// Semicircle of variance v: m_{2k} = Catalan(k) v^k.
std::vector<Rational> semicircle_moments(int order, const Rational& v) {
    std::vector<Rational> m;
    for (int j = 1; j <= order; ++j) m.push_back(j % 2 ? Rational() : oracle::catalan(j / 2) * v.pow(j / 2));
    return m;
}

}  // namespace

TEST_SUITE("laws") {

TEST_CASE("series f_k against the modified Bessel function") {
    for (int k = 0; k <= 6; ++k)
        for (double t : {0.1, 0.5, 1.0, 2.0}) {
            const double expected = std::cyl_bessel_i(static_cast<double>(k), t);
            CHECK(bessel_f(k, t / 2.0, 40) == doctest::Approx(expected).epsilon(1e-13));
            CHECK(bessel_f(-k, t / 2.0, 40) == bessel_f(k, t / 2.0, 40));
        }
}

TEST_CASE("classical Bessel law") {
    const auto beta = classical_bessel(1.0, 40, 40);
    CHECK(beta.weight(0) == doctest::Approx(0.46576).epsilon(1e-5));
    CHECK(beta.weight(0) == doctest::Approx(std::exp(-1.0) * std::cyl_bessel_i(0.0, 1.0)).epsilon(1e-14));
    for (long k = 1; k <= 5; ++k) CHECK(beta.weight(k) == beta.weight(-k));
    CHECK(beta.total_mass() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta.moment(1) == doctest::Approx(0.0));
    // Difference of two independent Poisson(t/2) variables.
    CHECK(beta.moment(2) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beta.moment(4) == doctest::Approx(1.0 + 3.0).epsilon(1e-13));
    const auto coarse = classical_bessel(1.0, 2, 40);
    CHECK(coarse.mass_deficit() == doctest::Approx(1.0 - coarse.total_mass()).epsilon(1e-12));
    CHECK_THROWS(classical_bessel(-1.0, 10, 10));
}

TEST_CASE("atomic measures") {
    AtomicMeasure m;
    CHECK_THROWS(m.set_weight(0, -0.5));
    m.set_weight(1, 0.25);
    m.add_weight(1, 0.25);
    m.set_weight(-1, 0.5);
    CHECK(m.weight(1) == 0.5);
    CHECK(m.weight(3) == 0.0);
    const auto c = convolve(m, AtomicMeasure::dirac(2));
    CHECK(c.weight(3) == 0.5);
    CHECK(c.weight(1) == 0.5);
    CHECK(fourier(m, 0.7) == doctest::Approx(std::cosh(0.7)));
    CHECK(sup_distance(m, c) == 0.5);
}

TEST_CASE("Fuss-Narayana numbers") {
    CHECK(fuss_narayana(1, 1) == 1);
    CHECK(fuss_narayana(2, 1) == 1);
    CHECK(fuss_narayana(2, 2) == 2);
    CHECK(fuss_narayana(3, 2) == 6);
    CHECK(fuss_narayana(3, 3) == 5);
    CHECK(fuss_catalan(4) == 55);
    CHECK_THROWS_AS(fuss_narayana(3, 4), std::out_of_range);
    CHECK_THROWS_AS(fuss_narayana(3, 0), std::out_of_range);
    const auto t = RationalPolynomial::variable();
    CHECK(free_bessel_moment(4) == t + RationalPolynomial(2) * t * t);
    CHECK(free_bessel_moment(5).is_zero());
    for (int k = 1; k <= 6; ++k) CHECK(free_bessel_moment(2 * k).evaluate(Rational(1)) == Rational(fuss_catalan(k)));
}

TEST_CASE("free cumulants of the semicircle law") {
    const auto kappa = moments_to_free_cumulants(constant_moments(semicircle_moments(10, Rational(1))));
    for (int j = 1; j <= 10; ++j) CHECK(kappa.at(j) == RationalPolynomial(j == 2 ? 1 : 0));
    const auto r = r_transform(constant_moments(semicircle_moments(9, Rational(1))), 8);
    for (int j = 0; j <= 8; ++j) CHECK(r[j] == RationalPolynomial(j == 1 ? 1 : 0));
    CHECK_THROWS_AS(r_transform(constant_moments(semicircle_moments(5, Rational(1))), 8), std::domain_error);
}

TEST_CASE("moment-cumulant recursion against enumeration of non-crossing partitions") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> kappa;
    for (int j = 1; j <= 9; ++j) kappa.emplace_back(num(rng), den(rng));
    const auto moments = free_cumulants_to_moments(constant_cumulants(kappa));
    for (int k = 1; k <= 9; ++k)
        CHECK(moments.at(k) == RationalPolynomial(oracle::moment_from_cumulants_by_enumeration(k, kappa)));
    CHECK(moments_to_free_cumulants(moments) == constant_cumulants(kappa));
}

TEST_CASE("free convolution adds variances of semicircles") {
    const auto a = constant_cumulants({Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)});
    const auto sum = free_convolve(a, a);
    const auto expected = semicircle_moments(6, Rational(2));
    for (int j = 1; j <= 6; ++j) CHECK(sum.at(j) == RationalPolynomial(expected[static_cast<std::size_t>(j - 1)]));
}

TEST_CASE("free Bessel cumulants and generating series") {
    const auto t = RationalPolynomial::variable();
    const auto kappa = moments_to_free_cumulants(free_bessel_moments(10));
    for (int j = 1; j <= 10; ++j) CHECK(kappa.at(j) == (j % 2 ? RationalPolynomial() : t));
    const auto report = free_bessel_generating(8);
    CHECK(report.cubic_residual_vanishes);
    CHECK(report.moment_residual_vanishes);
    CHECK(report.g[3] == free_bessel_moment(6));
}

}
