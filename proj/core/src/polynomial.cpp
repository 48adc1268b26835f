#include "hplus/polynomial.hpp"

#include <ostream>

namespace hplus {

RationalPolynomial::RationalPolynomial(Rational constant) {
    coeffs_.push_back(std::move(constant));
    trim();
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

RationalPolynomial RationalPolynomial::monomial(Rational coefficient, unsigned degree) {
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coefficient);
    return RationalPolynomial(std::move(c));
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double RationalPolynomial::evaluate(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& shift) const {
    // Horner in polynomial arithmetic: p(t+c) = (...(a_d (t+c) + a_{d-1})(t+c) + ...)
    const RationalPolynomial linear(std::vector<Rational>{shift, Rational(1)});
    RationalPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + RationalPolynomial(*it);
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial operator-(const RationalPolynomial& p) {
    RationalPolynomial out = p;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string RationalPolynomial::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const Rational& c = coeffs_[d];
        if (c.is_zero()) continue;
        std::string mag;
        const Rational a = c.abs();
        const std::string a_text = a.is_integer() ? a.numerator().get_str() : a.str();
        if (d == 0 || a != Rational(1)) mag = a_text;
        if (d >= 1) mag += var;
        if (d >= 2) mag += "^" + std::to_string(d);
        if (out.empty()) {
            out = (c.sign() < 0 ? "-" : "") + mag;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + mag;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) { return os << p.str(); }

}  // namespace hplus
