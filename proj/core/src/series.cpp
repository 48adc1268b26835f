#include "hplus/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hplus {

FormalSeries::FormalSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw std::invalid_argument("FormalSeries: negative order");
}

FormalSeries::FormalSeries(int order, std::vector<RationalPolynomial> coefficients) : FormalSeries(order) {
    const std::size_t n = std::min(coefficients.size(), coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coefficients[i]);
}

FormalSeries FormalSeries::one(int order) {
    FormalSeries s(order);
    s.coeffs_[0] = RationalPolynomial(1);
    return s;
}

FormalSeries FormalSeries::identity(int order) {
    FormalSeries s(order);
    if (order >= 1) s.coeffs_[1] = RationalPolynomial(1);
    return s;
}

const RationalPolynomial& FormalSeries::operator[](int power) const {
    if (power < 0 || power > order_) throw std::out_of_range("FormalSeries: coefficient beyond truncation order");
    return coeffs_[static_cast<std::size_t>(power)];
}

RationalPolynomial& FormalSeries::operator[](int power) {
    if (power < 0 || power > order_) throw std::out_of_range("FormalSeries: coefficient beyond truncation order");
    return coeffs_[static_cast<std::size_t>(power)];
}

bool FormalSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

FormalSeries FormalSeries::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("FormalSeries: cannot extend truncation order");
    return FormalSeries(order, coeffs_);
}

FormalSeries FormalSeries::shifted_up() const {
    FormalSeries out(order_ + 1);
    for (int i = 0; i <= order_; ++i) out.coeffs_[static_cast<std::size_t>(i + 1)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

FormalSeries FormalSeries::shifted_down() const {
    if (!coeffs_[0].is_zero()) throw std::domain_error("FormalSeries: division by z needs zero constant term");
    if (order_ == 0) throw std::domain_error("FormalSeries: division by z of an order-0 series");
    FormalSeries out(order_ - 1);
    for (int i = 1; i <= order_; ++i) out.coeffs_[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

FormalSeries FormalSeries::dilated(int m) const {
    if (m < 1) throw std::invalid_argument("FormalSeries: dilation factor must be positive");
    FormalSeries out(m * order_ + m - 1);
    for (int i = 0; i <= order_; ++i) out.coeffs_[static_cast<std::size_t>(m * i)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

FormalSeries FormalSeries::scaled(const RationalPolynomial& c) const {
    FormalSeries out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    const int order = std::min(a.order_, b.order_);
    FormalSeries out(order);
    for (int i = 0; i <= order; ++i) out[i] = a[i] + b[i];
    return out;
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    const int order = std::min(a.order_, b.order_);
    FormalSeries out(order);
    for (int i = 0; i <= order; ++i) out[i] = a[i] - b[i];
    return out;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    const int order = std::min(a.order_, b.order_);
    FormalSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::string FormalSeries::str(char var) const {
    std::string out;
    for (int i = 0; i <= order_; ++i) {
        const auto& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        if (i >= 1) out += std::string(1, var);
        if (i >= 2) out += "^" + std::to_string(i);
    }
    out += (out.empty() ? "O(" : " + O(") + std::string(1, var) + "^" + std::to_string(order_ + 1) + ")";
    return out;
}

FormalSeries compose(const FormalSeries& a, const FormalSeries& b) {
    if (!b[0].is_zero()) throw std::domain_error("compose: inner series must have zero constant term");
    const int order = std::min(a.order(), b.order());
    const FormalSeries inner = b.truncated(order);
    // Horner: a_0 + b(a_1 + b(a_2 + ...)).
    FormalSeries acc(order);
    for (int i = order; i >= 0; --i) {
        acc = acc * inner;
        acc[0] += a[i];
    }
    return acc;
}

FormalSeries reciprocal(const FormalSeries& a) {
    const auto& c0 = a[0];
    if (c0.is_zero() || !c0.is_constant()) {
        throw std::domain_error("reciprocal: constant term must be a nonzero constant");
    }
    const Rational inv0 = Rational(1) / c0.coefficient(0);
    FormalSeries out(a.order());
    out[0] = RationalPolynomial(inv0);
    for (int n = 1; n <= a.order(); ++n) {
        RationalPolynomial acc;
        for (int i = 1; i <= n; ++i) acc += a[i] * out[n - i];
        out[n] = -(acc * RationalPolynomial(inv0));
    }
    return out;
}

FormalSeries compose_inverse(const FormalSeries& g) {
    if (g.order() < 1) throw std::domain_error("compose_inverse: order must be at least 1");
    if (!g[0].is_zero()) throw std::domain_error("compose_inverse: series must vanish at 0");
    const auto& lead = g[1];
    if (lead.is_zero() || !lead.is_constant()) {
        throw std::domain_error("compose_inverse: linear coefficient must be a nonzero constant");
    }
    const RationalPolynomial inv_lead(Rational(1) / lead.coefficient(0));
    const int order = g.order();

    // Term-by-term substitution: fix h_1, then correct h_m so that [z^m] g(h) = 0.
    FormalSeries h(order);
    h[1] = inv_lead;
    for (int m = 2; m <= order; ++m) {
        const FormalSeries current = compose(g.truncated(m), h.truncated(m));
        h[m] = -(current[m] * inv_lead);
    }
    return h;
}

FormalSeries series_arith(const FormalSeries& a, const FormalSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return a + b;
        case SeriesOp::mul: return a * b;
        case SeriesOp::compose: return compose(a, b);
    }
    throw std::invalid_argument("series_arith: unknown operation");
}

}  // namespace hplus
