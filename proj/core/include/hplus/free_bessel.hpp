#pragma once

#include <vector>

#include <gmpxx.h>

#include "hplus/polynomial.hpp"
#include "hplus/series.hpp"

namespace hplus {

/// Values indexed 1..order, each a polynomial in t.
template <typename Tag>
class PolynomialSequence {
public:
    PolynomialSequence() = default;
    explicit PolynomialSequence(std::vector<RationalPolynomial> values) : values_(std::move(values)) {}

    int order() const { return static_cast<int>(values_.size()); }
    /// 1-based access.
    const RationalPolynomial& at(int index) const { return values_.at(static_cast<std::size_t>(index - 1)); }
    RationalPolynomial& at(int index) { return values_.at(static_cast<std::size_t>(index - 1)); }
    const std::vector<RationalPolynomial>& values() const { return values_; }

    friend bool operator==(const PolynomialSequence&, const PolynomialSequence&) = default;

private:
    std::vector<RationalPolynomial> values_;
};

struct MomentTag {};
struct CumulantTag {};
using MomentSequence = PolynomialSequence<MomentTag>;
using CumulantSequence = PolynomialSequence<CumulantTag>;

/// F_{kb} = (1/b) C(k-1, b-1) C(2k, b-1), for 1 <= b <= k. Throws std::out_of_range.
mpz_class fuss_narayana(int k, int b);

/// Fuss-Catalan number C(3k, k) / (2k + 1).
mpz_class fuss_catalan(int k);

/// Moment of order m of the free Bessel law mu_t, as a polynomial in t.
RationalPolynomial free_bessel_moment(int m);

/// Moments 1..order of mu_t.
MomentSequence free_bessel_moments(int order);

/// Free cumulants via the non-crossing first-block recursion
/// m_n = sum_s kappa_s [z^{n-s}] M(z)^s with M = 1 + sum m_j z^j.
CumulantSequence moments_to_free_cumulants(const MomentSequence& moments);
MomentSequence free_cumulants_to_moments(const CumulantSequence& cumulants);

/// R-transform through z^order from moments through at least order + 1.
/// Throws std::domain_error when the moments are too short.
FormalSeries r_transform(const MomentSequence& moments, int order);

/// kappa_k = [z^{k-1}] R(z).
CumulantSequence cumulants_from_r_transform(const FormalSeries& r);

struct GeneratingReport {
    /// g = sum_k P_k z^k built from the first-block recursion, through z^order.
    FormalSeries g;
    /// f(z) = g(z^2), through z^order.
    FormalSeries f;
    /// g - 1 - z g^3 - (t-1) z g^2.
    FormalSeries cubic_residual;
    /// f - 1 - (z f)^2 (f + t - 1).
    FormalSeries moment_residual;
    bool cubic_residual_vanishes = false;
    bool moment_residual_vanishes = false;
};

GeneratingReport free_bessel_generating(int order);

/// Moments of the free convolution: cumulants add.
MomentSequence free_convolve(const CumulantSequence& a, const CumulantSequence& b);

}  // namespace hplus
