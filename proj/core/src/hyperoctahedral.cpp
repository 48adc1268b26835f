#include "hplus/hyperoctahedral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hplus/parallel.hpp"

namespace hplus {

SignedPermutation::SignedPermutation(std::vector<int> images, std::vector<int> signs)
    : images_(std::move(images)), signs_(std::move(signs)) {
    if (images_.size() != signs_.size()) throw std::invalid_argument("SignedPermutation: length mismatch");
    std::vector<bool> hit(images_.size(), false);
    for (int x : images_) {
        if (x < 1 || x > size() || hit[static_cast<std::size_t>(x - 1)]) {
            throw std::invalid_argument("SignedPermutation: images are not a bijection of {1..n}");
        }
        hit[static_cast<std::size_t>(x - 1)] = true;
    }
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: signs must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return SignedPermutation(std::move(images), std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignedPermutation SignedPermutation::reflection(int n, int i) {
    auto g = identity(n);
    g.signs_.at(static_cast<std::size_t>(i - 1)) = -1;
    return g;
}

int coordinate(const SignedPermutation& g, int i, int j) {
    if (i < 1 || j < 1 || i > g.size() || j > g.size()) throw std::out_of_range("coordinate: index outside {1..n}");
    return g.image(j) == i ? g.sign(j) : 0;
}

int truncated_character(const SignedPermutation& g, int s) {
    int acc = 0;
    for (int i = 1; i <= s; ++i) acc += coordinate(g, i, i);
    return acc;
}

Rational ExactLaw::weight(long location) const {
    auto it = atoms.find(location);
    return it == atoms.end() ? Rational(0) : it->second;
}

Rational ExactLaw::total_mass() const {
    Rational acc;
    for (const auto& [x, w] : atoms) acc += w;
    return acc;
}

Rational ExactLaw::moment(int order) const {
    Rational acc;
    for (const auto& [x, w] : atoms) acc += w * Rational(x).pow(order);
    return acc;
}

AtomicMeasure ExactLaw::approximate() const {
    AtomicMeasure m;
    for (const auto& [x, w] : atoms) m.set_weight(x, w.to_double());
    return m;
}

ExactLaw exact_character_law(int n, int s) {
    if (n < 1) throw std::invalid_argument("exact_character_law: n must be positive");
    if (n > kMaxEnumerationDimension) {
        throw std::domain_error("exact_character_law: n=" + std::to_string(n) + " too large for enumeration (max " +
                                std::to_string(kMaxEnumerationDimension) + ")");
    }
    if (s < 0 || s > n) throw std::invalid_argument("exact_character_law: s must lie in {0..n}");

    std::map<long, long> counts;
    long total = 0;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<int> signs(static_cast<std::size_t>(n));
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int j = 0; j < n; ++j) signs[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? -1 : 1;
            const SignedPermutation g(images, signs);
            ++counts[truncated_character(g, s)];
            ++total;
        }
    } while (std::next_permutation(images.begin(), images.end()));

    ExactLaw law;
    for (const auto& [x, c] : counts) law.atoms[x] = Rational(c, total);
    return law;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

HnSampler::HnSampler(int n, std::uint64_t seed, std::uint64_t first_chunk) : n_(n), seed_(seed), chunk_(first_chunk) {
    if (n < 1) throw std::invalid_argument("HnSampler: n must be positive");
    start_chunk(first_chunk);
}

void HnSampler::start_chunk(std::uint64_t chunk) {
    chunk_ = chunk;
    position_in_chunk_ = 0;
    engine_.seed(splitmix64(seed_ + chunk));
}

void HnSampler::next_into(std::vector<int>& images, std::vector<int>& signs) {
    if (position_in_chunk_ == kSamplerChunk) start_chunk(chunk_ + 1);
    ++position_in_chunk_;
    images.resize(static_cast<std::size_t>(n_));
    signs.resize(static_cast<std::size_t>(n_));
    std::iota(images.begin(), images.end(), 1);
    for (int i = n_ - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(pick(engine_))]);
    }
    std::uint64_t bits = 0;
    for (int j = 0; j < n_; ++j) {
        if (j % 64 == 0) bits = engine_();
        signs[static_cast<std::size_t>(j)] = (bits >> (j % 64)) & 1u ? -1 : 1;
    }
}

SignedPermutation HnSampler::next() {
    std::vector<int> images;
    std::vector<int> signs;
    next_into(images, signs);
    return SignedPermutation(std::move(images), std::move(signs));
}

std::vector<SignedPermutation> sample_hn(int n, std::uint64_t seed, std::uint64_t count) {
    HnSampler sampler(n, seed);
    std::vector<SignedPermutation> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(sampler.next());
    return out;
}

namespace {

// Runs `visit(images, signs)` over the first `samples` stream elements,
// one chunk per task, merging per-chunk results under a lock.
template <typename Partial, typename Visit, typename Merge>
void for_each_chunk(int n, std::uint64_t seed, std::uint64_t samples, unsigned threads, Visit visit, Merge merge) {
    const std::uint64_t chunks = (samples + kSamplerChunk - 1) / kSamplerChunk;
    std::mutex merge_mutex;
    parallel_for(
        static_cast<std::size_t>(chunks),
        [&](std::size_t c) {
            HnSampler sampler(n, seed, c);
            const std::uint64_t begin = c * kSamplerChunk;
            const std::uint64_t end = std::min(samples, begin + kSamplerChunk);
            Partial partial;
            std::vector<int> images;
            std::vector<int> signs;
            for (std::uint64_t i = begin; i < end; ++i) {
                sampler.next_into(images, signs);
                visit(partial, images, signs);
            }
            std::lock_guard lock(merge_mutex);
            merge(partial);
        },
        threads);
}

}  // namespace

AtomicMeasure CharacterLawEstimate::empirical() const {
    AtomicMeasure m;
    for (const auto& [x, c] : counts) m.set_weight(x, static_cast<double>(c) / static_cast<double>(samples));
    return m;
}

CharacterLawEstimate sample_character_law(int n, int s, std::uint64_t seed, std::uint64_t samples, unsigned threads) {
    if (s < 0 || s > n) throw std::invalid_argument("sample_character_law: s must lie in {0..n}");
    if (samples == 0) throw std::invalid_argument("sample_character_law: need at least one sample");
    CharacterLawEstimate estimate{n, s, samples, seed, {}};
    using Counts = std::map<long, std::uint64_t>;
    for_each_chunk<Counts>(
        n, seed, samples, threads,
        [s](Counts& counts, const std::vector<int>& images, const std::vector<int>& signs) {
            long value = 0;
            for (int i = 0; i < s; ++i)
                if (images[static_cast<std::size_t>(i)] == i + 1) value += signs[static_cast<std::size_t>(i)];
            ++counts[value];
        },
        [&](const Counts& partial) {
            for (const auto& [x, c] : partial) estimate.counts[x] += c;
        });
    return estimate;
}

PoissonReport poisson_fixedpoint_check(int n, int s, std::uint64_t seed, std::uint64_t samples, unsigned threads) {
    if (s < 0 || s > n) throw std::invalid_argument("poisson_fixedpoint_check: s must lie in {0..n}");
    if (samples == 0) throw std::invalid_argument("poisson_fixedpoint_check: need at least one sample");
    using Counts = std::map<long, std::uint64_t>;
    Counts counts;
    for_each_chunk<Counts>(
        n, seed, samples, threads,
        [s](Counts& partial, const std::vector<int>& images, const std::vector<int>&) {
            long fixed = 0;
            for (int i = 0; i < s; ++i) fixed += images[static_cast<std::size_t>(i)] == i + 1;
            ++partial[fixed];
        },
        [&](const Counts& partial) {
            for (const auto& [x, c] : partial) counts[x] += c;
        });

    PoissonReport report;
    report.n = n;
    report.s = s;
    report.samples = samples;
    report.seed = seed;
    report.t = static_cast<double>(s) / static_cast<double>(n);
    for (const auto& [x, c] : counts) report.empirical[x] = static_cast<double>(c) / static_cast<double>(samples);
    report.p_zero = report.empirical.count(0) ? report.empirical.at(0) : 0.0;

    // Poisson reference over the empirical support plus a margin; the
    // remaining tail mass counts fully toward the distance.
    const long top = (counts.empty() ? 0 : counts.rbegin()->first) + 20;
    double reference_mass = 0.0;
    double term = std::exp(-report.t);
    double distance = 0.0;
    for (long j = 0; j <= top; ++j) {
        if (j > 0) term *= report.t / static_cast<double>(j);
        report.reference[j] = term;
        reference_mass += term;
        const double observed = report.empirical.count(j) ? report.empirical.at(j) : 0.0;
        distance += std::abs(observed - term);
    }
    distance += std::max(0.0, 1.0 - reference_mass);
    report.tv_distance = distance / 2.0;
    return report;
}

}  // namespace hplus
