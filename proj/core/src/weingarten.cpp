#include "hplus/weingarten.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "hplus/parallel.hpp"

namespace hplus {

SingularGramError::SingularGramError(int k, long n, Flavor flavor, std::size_t stage)
    : std::runtime_error("singular Gram matrix at k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                         ", flavor=" + std::string(1, flavor_letter(flavor)) + " (pivot stage " +
                         std::to_string(stage) + ")"),
      k_(k),
      n_(n),
      flavor_(flavor),
      stage_(stage) {}

namespace {

void check_dimension(long n, GramOptions options) {
    if (n < 1) throw std::invalid_argument("dimension n must be positive");
    if (n < kMinDimension && !options.allow_small_n) {
        throw std::invalid_argument("dimension n=" + std::to_string(n) + " is below 4; pass the small-n override");
    }
}

RationalMatrix powers_of(const Matrix<int>& exponents, long base) {
    if (exponents.empty()) return RationalMatrix();
    int max_exp = 0;
    for (int e : exponents.data()) max_exp = std::max(max_exp, e);
    std::vector<Rational> table;
    table.reserve(static_cast<std::size_t>(max_exp) + 1);
    for (int e = 0; e <= max_exp; ++e) table.push_back(integer_power(base, static_cast<unsigned>(e)));
    RationalMatrix out(exponents.rows(), exponents.cols());
    for (std::size_t i = 0; i < exponents.rows(); ++i)
        for (std::size_t j = 0; j < exponents.cols(); ++j) out(i, j) = table[static_cast<std::size_t>(exponents(i, j))];
    return out;
}

}  // namespace

GramPair gram_matrix(int k, long n, Flavor flavor, GramOptions options) {
    if (k < 1) throw std::invalid_argument("moment order k must be positive");
    check_dimension(n, options);

    GramPair pair;
    pair.k = k;
    pair.n = n;
    pair.flavor = flavor;
    pair.basis = enumerate_nc(k, flavor);
    const std::size_t size = pair.basis.size();
    if (size == 0) return pair;

    pair.join_blocks = Matrix<int>(size, size, 0);
    parallel_for(size, [&](std::size_t i) {
        for (std::size_t j = 0; j < size; ++j) pair.join_blocks(i, j) = join_block_count(pair.basis[i], pair.basis[j]);
    });
    pair.gram = powers_of(pair.join_blocks, n);
    return pair;
}

RationalMatrix gram_at(const GramPair& pair, long s) { return powers_of(pair.join_blocks, s); }

namespace {

using CacheKey = std::tuple<int, long, Flavor>;

std::mutex cache_mutex;
std::map<CacheKey, std::shared_ptr<const GramPair>> cache;

}  // namespace

std::shared_ptr<const GramPair> weingarten_matrix(int k, long n, Flavor flavor, GramOptions options) {
    if (k < 1) throw std::invalid_argument("moment order k must be positive");
    check_dimension(n, options);
    const CacheKey key{k, n, flavor};
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    auto pair = std::make_shared<GramPair>(gram_matrix(k, n, flavor, options));
    try {
        pair->weingarten = inverse(pair->gram);
    } catch (const SingularMatrixError& e) {
        throw SingularGramError(k, n, flavor, e.stage());
    }

    // Concurrent computations of the same key produce identical values; keep the first.
    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = cache.emplace(key, std::move(pair));
    return it->second;
}

void clear_weingarten_cache() {
    std::lock_guard lock(cache_mutex);
    cache.clear();
}

Rational integrate_monomial(std::span<const int> i, std::span<const int> j, long n, Flavor flavor,
                            GramOptions options) {
    if (i.size() != j.size()) throw std::invalid_argument("integrate_monomial: multi-indices differ in length");
    if (i.empty()) throw std::invalid_argument("integrate_monomial: empty multi-index");
    for (auto span : {i, j})
        for (int x : span)
            if (x < 1 || x > n) {
                throw std::out_of_range("integrate_monomial: index " + std::to_string(x) + " outside {1.." +
                                        std::to_string(n) + "}");
            }

    const auto pair = weingarten_matrix(static_cast<int>(i.size()), n, flavor, options);
    const auto& basis = pair->basis;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t p = 0; p < basis.size(); ++p) {
        if (delta(basis[p], i)) rows.push_back(p);
        if (delta(basis[p], j)) cols.push_back(p);
    }
    Rational total;
    for (auto p : rows)
        for (auto q : cols) total += (*pair->weingarten)(p, q);
    return total;
}

Rational character_moment(int k, long n, long s, Flavor flavor, GramOptions options) {
    if (s < 0 || s > n) throw std::invalid_argument("character_moment: s must lie in {0..n}");
    const auto pair = weingarten_matrix(k, n, flavor, options);
    if (pair->basis.empty() || s == 0) return Rational(0);
    const auto& w = *pair->weingarten;
    const RationalMatrix gs = gram_at(*pair, s);
    // Tr(W G_s) = sum_{p,q} W(p,q) G_s(q,p).
    Rational total;
    for (std::size_t p = 0; p < w.rows(); ++p)
        for (std::size_t q = 0; q < w.cols(); ++q) total += w(p, q) * gs(q, p);
    return total;
}

long truncation_size(long n, const Rational& t) { return (t * Rational(n)).floor().get_si(); }

RationalPolynomial asymptotic_moment_polynomial(int k, Flavor flavor) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
    for (const auto& p : enumerate_nc(k, flavor)) coeffs[static_cast<std::size_t>(p.block_count())] += Rational(1);
    return RationalPolynomial(std::move(coeffs));
}

AsymptoticMoment asymptotic_moment(int k, const Rational& t, Flavor flavor) {
    if (t.sign() <= 0 || t > Rational(1)) throw std::invalid_argument("asymptotic_moment: t must lie in (0, 1]");
    AsymptoticMoment out;
    out.polynomial = asymptotic_moment_polynomial(k, flavor);
    out.value = out.polynomial.evaluate(t);
    return out;
}

Rational mixed_character_moment(std::span<const int> pattern, std::span<const IndexInterval> intervals, long n,
                                Flavor flavor, GramOptions options) {
    if (pattern.empty()) throw std::invalid_argument("mixed_character_moment: empty pattern");
    for (const auto& iv : intervals) {
        if (iv.first < 1 || iv.last > n || iv.first > iv.last) {
            throw std::invalid_argument("mixed_character_moment: interval outside {1..n} or empty");
        }
    }
    for (std::size_t a = 0; a < intervals.size(); ++a)
        for (std::size_t b = a + 1; b < intervals.size(); ++b)
            if (intervals[a].first <= intervals[b].last && intervals[b].first <= intervals[a].last) {
                throw std::invalid_argument("mixed_character_moment: intervals overlap");
            }
    for (int c : pattern)
        if (c < 0 || static_cast<std::size_t>(c) >= intervals.size()) {
            throw std::invalid_argument("mixed_character_moment: pattern label without interval");
        }

    const auto pair = weingarten_matrix(static_cast<int>(pattern.size()), n, flavor, options);
    const auto& basis = pair->basis;
    // Sum over admissible diagonal indices of delta_p delta_q factorizes over
    // blocks of p v q: each block must carry a single interval label and then
    // contributes that interval's size.
    Rational total;
    for (std::size_t p = 0; p < basis.size(); ++p) {
        for (std::size_t q = 0; q < basis.size(); ++q) {
            const SetPartition joined = join(basis[p], basis[q]);
            Rational weight(1);
            for (const auto& block : joined.blocks()) {
                const int label = pattern[static_cast<std::size_t>(block.front() - 1)];
                bool uniform = true;
                for (int x : block) uniform = uniform && pattern[static_cast<std::size_t>(x - 1)] == label;
                if (!uniform) {
                    weight = Rational(0);
                    break;
                }
                weight *= Rational(intervals[static_cast<std::size_t>(label)].size());
            }
            if (!weight.is_zero()) total += (*pair->weingarten)(p, q) * weight;
        }
    }
    return total;
}

}  // namespace hplus
