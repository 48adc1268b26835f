#include "hplus/verify/oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace hplus::oracle {

namespace {

// Decodes a flat index into the tuple (i_1, ..., i_k), entries 1..n.
std::vector<int> decode(long flat, int k, long n) {
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        out[static_cast<std::size_t>(a)] = static_cast<int>(flat % n) + 1;
        flat /= n;
    }
    return out;
}

long encode(std::span<const int> i, long n) {
    long flat = 0;
    for (auto it = i.rbegin(); it != i.rend(); ++it) flat = flat * n + (*it - 1);
    return flat;
}

bool constant_on_blocks(const SetPartition& p, const std::vector<int>& i) {
    for (const auto& block : p.blocks()) {
        for (std::size_t a = 1; a < block.size(); ++a) {
            if (i[static_cast<std::size_t>(block[a] - 1)] != i[static_cast<std::size_t>(block[0] - 1)]) return false;
        }
    }
    return true;
}

long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

Rational brute_force_gram_entry(const SetPartition& p, const SetPartition& q, long n) {
    if (p.size() != q.size()) throw std::invalid_argument("brute_force_gram_entry: size mismatch");
    const int k = p.size();
    long count = 0;
    for (long flat = 0; flat < ipow(n, k); ++flat) {
        const auto i = decode(flat, k, n);
        count += constant_on_blocks(p, i) && constant_on_blocks(q, i);
    }
    return Rational(count);
}

Rational projection_integral(const std::vector<SetPartition>& basis, std::span<const int> i,
                             std::span<const int> j, long n) {
    if (basis.empty()) return Rational(0);
    const int k = basis.front().size();
    const long dim = ipow(n, k);
    std::vector<std::vector<Rational>> orthogonal;
    std::vector<Rational> norms;
    for (const auto& p : basis) {
        std::vector<Rational> v(static_cast<std::size_t>(dim));
        for (long flat = 0; flat < dim; ++flat) v[static_cast<std::size_t>(flat)] = constant_on_blocks(p, decode(flat, k, n)) ? 1 : 0;
        for (std::size_t r = 0; r < orthogonal.size(); ++r) {
            Rational dot;
            for (long x = 0; x < dim; ++x) dot += v[static_cast<std::size_t>(x)] * orthogonal[r][static_cast<std::size_t>(x)];
            if (dot.is_zero()) continue;
            const Rational c = dot / norms[r];
            for (long x = 0; x < dim; ++x) v[static_cast<std::size_t>(x)] -= c * orthogonal[r][static_cast<std::size_t>(x)];
        }
        Rational norm;
        for (const auto& x : v) norm += x * x;
        if (norm.is_zero()) continue;
        orthogonal.push_back(std::move(v));
        norms.push_back(norm);
    }
    const auto a = static_cast<std::size_t>(encode(i, n));
    const auto b = static_cast<std::size_t>(encode(j, n));
    Rational total;
    for (std::size_t r = 0; r < orthogonal.size(); ++r) total += orthogonal[r][a] * orthogonal[r][b] / norms[r];
    return total;
}

Rational symmetric_group_integral(std::span<const int> i, std::span<const int> j, int n) {
    if (i.size() != j.size()) throw std::invalid_argument("symmetric_group_integral: length mismatch");
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    long hits = 0;
    long total = 0;
    do {
        bool all = true;
        for (std::size_t a = 0; a < i.size() && all; ++a) all = sigma[static_cast<std::size_t>(j[a] - 1)] == i[a];
        hits += all;
        ++total;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return Rational(hits, total);
}

Rational hyperoctahedral_moment_closed_form(int k, long n, long s) {
    const Rational N(n);
    const Rational S(s);
    switch (k) {
        case 2: return S / N;
        case 4: return S / N * (N + Rational(2) * S - Rational(3)) / (N - Rational(1));
        case 6: {
            const Rational p = N * N * N + (Rational(6) * S - Rational(10)) * N * N +
                               (Rational(5) * S * S - Rational(30) * S + Rational(30)) * N -
                               (Rational(8) * S * S - Rational(30) * S + Rational(24));
            return S / N * p / ((N - Rational(1)) * (N - Rational(1)) * (N - Rational(2)));
        }
        default: throw std::invalid_argument("closed form known only for k = 2, 4, 6");
    }
}

RationalMatrix reference_gram_4(long n) {
    const Rational N(n);
    const RationalMatrix inner = RationalMatrix::from_rows({{N, 1, 1}, {1, N, 1}, {1, 1, 1}});
    return N * inner;
}

RationalMatrix reference_weingarten_4(long n) {
    const Rational N(n);
    const RationalMatrix inner = RationalMatrix::from_rows({{1, 0, -1}, {0, 1, -1}, {-1, -1, N + Rational(1)}});
    return (Rational(1) / (N * (N - Rational(1)))) * inner;
}

RationalMatrix reference_gram_6(long n) {
    // 2 = n^2, 1 = n, 0 = 1; the whole matrix carries an extra factor n.
    static constexpr std::array<std::array<int, 12>, 12> exponents{{
        {2, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 0},
        {1, 2, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0},
        {1, 0, 2, 0, 1, 1, 0, 0, 0, 0, 1, 0},
        {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 1, 0, 0, 2, 1, 1, 0, 1, 1, 0},
        {1, 0, 0, 0, 0, 1, 2, 1, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},
        {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0},
        {0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    }};
    RationalMatrix out(12, 12);
    for (std::size_t r = 0; r < 12; ++r)
        for (std::size_t c = 0; c < 12; ++c) out(r, c) = Rational(n).pow(exponents[r][c] + 1);
    return out;
}

Rational catalan(int k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    return Rational(c, mpz_class(k + 1));
}

Rational moment_from_cumulants_by_enumeration(int k, std::span<const Rational> kappa) {
    Rational total;
    for (const auto& p : enumerate_nc(k, Flavor::S)) {
        Rational term(1);
        for (const auto& block : p.blocks()) term *= kappa[block.size() - 1];
        total += term;
    }
    return total;
}

}  // namespace hplus::oracle
