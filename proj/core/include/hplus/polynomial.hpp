#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hplus/rational.hpp"

namespace hplus {

/// Univariate polynomial with rational coefficients in a formal variable t.
/// Coefficients are indexed by degree; trailing zeros are always trimmed.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
    RationalPolynomial(long constant) : RationalPolynomial(Rational(constant)) {}  // NOLINT
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    static RationalPolynomial variable() { return monomial(Rational(1), 1); }
    static RationalPolynomial monomial(Rational coefficient, unsigned degree);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coefficient(unsigned d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;

    /// p(t + shift).
    RationalPolynomial shifted(const Rational& shift) const;

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const RationalPolynomial& rhs);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator-(const RationalPolynomial& p);

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// Human-readable form such as "t + 2t^2".
    std::string str(char var = 't') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

}  // namespace hplus
