#include "hplus/free_bessel.hpp"

#include <stdexcept>
#include <string>

namespace hplus {

namespace {

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

mpz_class fuss_narayana(int k, int b) {
    if (k < 1 || b < 1 || b > k) {
        throw std::out_of_range("fuss_narayana: need 1 <= b <= k (k=" + std::to_string(k) + ", b=" + std::to_string(b) +
                                ")");
    }
    mpz_class numerator = binomial(k - 1, b - 1) * binomial(2L * k, b - 1);
    mpz_class out;
    mpz_divexact_ui(out.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(b));
    return out;
}

mpz_class fuss_catalan(int k) {
    if (k < 0) throw std::out_of_range("fuss_catalan: negative k");
    mpz_class out;
    mpz_class c = binomial(3L * k, k);
    mpz_divexact_ui(out.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(2 * k + 1));
    return out;
}

RationalPolynomial free_bessel_moment(int m) {
    if (m < 1) throw std::invalid_argument("free_bessel_moment: order must be positive");
    if (m % 2 == 1) return RationalPolynomial();
    const int k = m / 2;
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
    for (int b = 1; b <= k; ++b) coeffs[static_cast<std::size_t>(b)] = Rational(fuss_narayana(k, b));
    return RationalPolynomial(std::move(coeffs));
}

MomentSequence free_bessel_moments(int order) {
    std::vector<RationalPolynomial> values;
    for (int m = 1; m <= order; ++m) values.push_back(free_bessel_moment(m));
    return MomentSequence(std::move(values));
}

namespace {

// powers[s][j] = [z^j] M(z)^s for 0 <= s, j <= order, with M = 1 + sum m_j z^j
// built from the moments known so far (entries past `known` read as zero).
std::vector<std::vector<RationalPolynomial>> moment_series_powers(const std::vector<RationalPolynomial>& m,
                                                                   int order) {
    std::vector<RationalPolynomial> base(static_cast<std::size_t>(order) + 1);
    base[0] = RationalPolynomial(1);
    for (int j = 1; j <= order && j <= static_cast<int>(m.size()); ++j) base[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j - 1)];
    std::vector<std::vector<RationalPolynomial>> powers(static_cast<std::size_t>(order) + 1,
                                                        std::vector<RationalPolynomial>(static_cast<std::size_t>(order) + 1));
    powers[0][0] = RationalPolynomial(1);
    for (int s = 1; s <= order; ++s) {
        for (int i = 0; i <= order; ++i) {
            const auto& a = powers[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i)];
            if (a.is_zero()) continue;
            for (int j = 0; i + j <= order; ++j) {
                powers[static_cast<std::size_t>(s)][static_cast<std::size_t>(i + j)] += a * base[static_cast<std::size_t>(j)];
            }
        }
    }
    return powers;
}

}  // namespace

CumulantSequence moments_to_free_cumulants(const MomentSequence& moments) {
    const int order = moments.order();
    std::vector<RationalPolynomial> kappa(static_cast<std::size_t>(order));
    if (order == 0) return CumulantSequence();
    // [z^{n-s}] M^s only involves m_1..m_{n-s}, so the full power table is
    // valid for every term of the recursion.
    const auto powers = moment_series_powers(moments.values(), order);
    for (int n = 1; n <= order; ++n) {
        // m_n = kappa_n + sum_{s<n} kappa_s [z^{n-s}] M^s
        RationalPolynomial rest;
        for (int s = 1; s < n; ++s) {
            rest += kappa[static_cast<std::size_t>(s - 1)] * powers[static_cast<std::size_t>(s)][static_cast<std::size_t>(n - s)];
        }
        kappa[static_cast<std::size_t>(n - 1)] = moments.at(n) - rest;
    }
    return CumulantSequence(std::move(kappa));
}

MomentSequence free_cumulants_to_moments(const CumulantSequence& cumulants) {
    const int order = cumulants.order();
    std::vector<RationalPolynomial> m;
    m.reserve(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) {
        // Powers of M only need m_1..m_{n-1}, which are already known.
        const auto powers = moment_series_powers(m, n);
        RationalPolynomial value;
        for (int s = 1; s <= n; ++s) {
            value += cumulants.at(s) * powers[static_cast<std::size_t>(s)][static_cast<std::size_t>(n - s)];
        }
        m.push_back(std::move(value));
    }
    return MomentSequence(std::move(m));
}

FormalSeries r_transform(const MomentSequence& moments, int order) {
    if (order < 0) throw std::invalid_argument("r_transform: negative order");
    if (moments.order() < order + 1) {
        throw std::domain_error("r_transform: need moments through order " + std::to_string(order + 1));
    }
    // With f the moment series, K(z) = h(z)/z where h = 1 + z R. Writing
    // w = z/h, G(K(z)) = z becomes w f(w) = z, so w is the compositional
    // inverse of phi(w) = w f(w) and R = (1/(w/z) - 1)/z.
    const int work = order + 2;
    FormalSeries phi(work);
    phi[1] = RationalPolynomial(1);
    for (int j = 1; j + 1 <= work; ++j) phi[j + 1] = moments.at(j);
    const FormalSeries w = compose_inverse(phi);
    const FormalSeries u = w.shifted_down();          // w / z, u(0) = 1
    const FormalSeries h = reciprocal(u);             // z K(z)
    const FormalSeries zr = h - FormalSeries::one(h.order());
    return zr.shifted_down().truncated(order);
}

CumulantSequence cumulants_from_r_transform(const FormalSeries& r) {
    std::vector<RationalPolynomial> kappa;
    for (int j = 0; j <= r.order(); ++j) kappa.push_back(r[j]);
    return CumulantSequence(std::move(kappa));
}

GeneratingReport free_bessel_generating(int order) {
    if (order < 1) throw std::invalid_argument("free_bessel_generating: order must be positive");
    const RationalPolynomial t = RationalPolynomial::variable();
    const RationalPolynomial t_minus_one = t - RationalPolynomial(1);

    // P_{k+1} = sum_{x0+x1+x2=k} P_{x0} P_{x1} P_{x2} + (t-1) sum_{x1+x2=k} P_{x1} P_{x2}
    std::vector<RationalPolynomial> p{RationalPolynomial(1)};
    for (int k = 0; k < order; ++k) {
        RationalPolynomial cubic;
        RationalPolynomial square;
        for (int x0 = 0; x0 <= k; ++x0) {
            for (int x1 = 0; x0 + x1 <= k; ++x1) {
                const int x2 = k - x0 - x1;
                const auto pair = p[static_cast<std::size_t>(x1)] * p[static_cast<std::size_t>(x2)];
                cubic += p[static_cast<std::size_t>(x0)] * pair;
                if (x0 == 0) square += pair;
            }
        }
        p.push_back(cubic + t_minus_one * square);
    }

    GeneratingReport report;
    report.g = FormalSeries(order, p);
    report.f = report.g.dilated(2).truncated(order);

    const auto& g = report.g;
    const FormalSeries one = FormalSeries::one(order);
    const FormalSeries g2 = g * g;
    report.cubic_residual = g - one - (g2 * g).shifted_up().truncated(order) -
                            g2.scaled(t_minus_one).shifted_up().truncated(order);
    const auto& f = report.f;
    const FormalSeries zf = f.shifted_up().truncated(order);
    const FormalSeries shifted_f = f + FormalSeries(order, {t_minus_one});
    report.moment_residual = f - one - zf * zf * shifted_f;
    report.cubic_residual_vanishes = report.cubic_residual.is_zero();
    report.moment_residual_vanishes = report.moment_residual.is_zero();
    return report;
}

MomentSequence free_convolve(const CumulantSequence& a, const CumulantSequence& b) {
    if (a.order() != b.order()) throw std::invalid_argument("free_convolve: cumulant sequences differ in order");
    std::vector<RationalPolynomial> sum;
    for (int i = 1; i <= a.order(); ++i) sum.push_back(a.at(i) + b.at(i));
    return free_cumulants_to_moments(CumulantSequence(std::move(sum)));
}

}  // namespace hplus
