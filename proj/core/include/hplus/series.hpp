#pragma once

#include <string>
#include <vector>

#include "hplus/polynomial.hpp"

namespace hplus {

inline constexpr int kDefaultSeriesOrder = 16;

/// Power series in z truncated after z^order, with coefficients that are
/// polynomials in t. Coefficients past the recorded order are unknown, so no
/// operation ever reads or produces them.
class FormalSeries {
public:
    explicit FormalSeries(int order = kDefaultSeriesOrder);
    FormalSeries(int order, std::vector<RationalPolynomial> coefficients);

    static FormalSeries zero(int order) { return FormalSeries(order); }
    static FormalSeries one(int order);
    /// The series z.
    static FormalSeries identity(int order);

    int order() const { return order_; }
    const RationalPolynomial& operator[](int power) const;
    RationalPolynomial& operator[](int power);
    const std::vector<RationalPolynomial>& coefficients() const { return coeffs_; }

    bool is_zero() const;

    FormalSeries truncated(int order) const;

    /// Multiplication by z; the order grows by one.
    FormalSeries shifted_up() const;
    /// Division by z; requires a zero constant term, the order drops by one.
    FormalSeries shifted_down() const;
    /// g(z^m), known exactly through z^{m*order + m - 1}.
    FormalSeries dilated(int m) const;

    FormalSeries scaled(const RationalPolynomial& c) const;

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
    friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

    std::string str(char var = 'z') const;

private:
    int order_;
    std::vector<RationalPolynomial> coeffs_;
};

enum class SeriesOp { add, mul, compose };

/// a(b(z)); b must have zero constant term.
FormalSeries compose(const FormalSeries& a, const FormalSeries& b);

/// 1/a; the constant term must be a nonzero constant.
FormalSeries reciprocal(const FormalSeries& a);

/// Compositional inverse h with g(h(z)) = z through the order of g.
/// Requires g(0) = 0 and a nonzero constant linear coefficient.
FormalSeries compose_inverse(const FormalSeries& g);

/// Dispatches one of add / mul / compose.
FormalSeries series_arith(const FormalSeries& a, const FormalSeries& b, SeriesOp op);

}  // namespace hplus
