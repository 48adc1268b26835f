#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string_view>
#include <vector>

#include "hplus/bessel.hpp"
#include "hplus/rational.hpp"

namespace hplus {

/// Element of the hyperoctahedral group H_n: segment j is sent to segment
/// image(j), returned when sign(j) = -1.
class SignedPermutation {
public:
    /// `images` is a bijection of {1..n}; `signs` entries are +1 or -1.
    /// Throws std::invalid_argument.
    SignedPermutation(std::vector<int> images, std::vector<int> signs);

    static SignedPermutation identity(int n);
    /// tau_i: returns segment i, fixes every other segment.
    static SignedPermutation reflection(int n, int i);

    int size() const { return static_cast<int>(images_.size()); }
    int image(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
    int sign(int j) const { return signs_.at(static_cast<std::size_t>(j - 1)); }
    const std::vector<int>& images() const { return images_; }
    const std::vector<int>& signs() const { return signs_; }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> images_;
    std::vector<int> signs_;
};

/// Matrix coordinate u_ij(g) = sign(j) when g sends segment j to segment i, else 0.
int coordinate(const SignedPermutation& g, int i, int j);

/// u_11(g) + ... + u_ss(g).
int truncated_character(const SignedPermutation& g, int s);

inline constexpr int kMaxEnumerationDimension = 6;

/// Distribution with exact rational weights.
struct ExactLaw {
    std::map<long, Rational> atoms;

    Rational weight(long location) const;
    Rational total_mass() const;
    Rational moment(int order) const;
    AtomicMeasure approximate() const;
};

/// Law of the truncated character under the uniform measure on H_n, by
/// enumerating all 2^n n! elements. Requires 1 <= n <= 6 and 0 <= s <= n.
ExactLaw exact_character_law(int n, int s);

inline constexpr std::string_view kSamplerAlgorithm =
    "mt19937_64, one stream per 65536-sample chunk seeded with splitmix64(seed + chunk); "
    "Fisher-Yates shuffle with std::uniform_int_distribution, signs from independent random bits";
inline constexpr std::uint64_t kSamplerChunk = 65536;

/// Deterministic stream of uniform elements of H_n. The stream is cut into
/// fixed-size chunks with independently seeded engines, so any chunk can be
/// produced on its own and parallel consumers reproduce the serial stream.
class HnSampler {
public:
    HnSampler(int n, std::uint64_t seed, std::uint64_t first_chunk = 0);

    SignedPermutation next();
    /// Writes the next element into caller-owned buffers.
    void next_into(std::vector<int>& images, std::vector<int>& signs);

    int dimension() const { return n_; }

private:
    void start_chunk(std::uint64_t chunk);

    int n_;
    std::uint64_t seed_;
    std::uint64_t chunk_;
    std::uint64_t position_in_chunk_ = 0;
    std::mt19937_64 engine_;
};

/// First N elements of the sampler stream.
std::vector<SignedPermutation> sample_hn(int n, std::uint64_t seed, std::uint64_t count);

struct CharacterLawEstimate {
    int n = 0;
    int s = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::map<long, std::uint64_t> counts;

    AtomicMeasure empirical() const;
};

/// Empirical law of the truncated character over `samples` draws.
/// Independent of the worker count.
CharacterLawEstimate sample_character_law(int n, int s, std::uint64_t seed, std::uint64_t samples,
                                          unsigned threads = 0);

struct PoissonReport {
    int n = 0;
    int s = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Poisson parameter s/n.
    double t = 0.0;
    std::map<long, double> empirical;
    std::map<long, double> reference;
    double p_zero = 0.0;
    double tv_distance = 0.0;
};

/// Fixed points among the first s positions of uniform permutations
/// (the S_n part of sampled H_n elements) against Poisson(s/n).
PoissonReport poisson_fixedpoint_check(int n, int s, std::uint64_t seed, std::uint64_t samples, unsigned threads = 0);

}  // namespace hplus
