#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hplus/matrix.hpp"
#include "hplus/partition.hpp"
#include "hplus/polynomial.hpp"
#include "hplus/rational.hpp"

namespace hplus {

/// Smallest dimension accepted without an explicit override.
inline constexpr long kMinDimension = 4;

struct GramOptions {
    /// Permit n < 4; invertibility is then checked rather than assumed.
    bool allow_small_n = false;
};

/// Partition basis at order k together with its Gram matrix n^{|p v q|}
/// and, once computed, the Weingarten matrix (its inverse).
struct GramPair {
    int k = 0;
    long n = 0;
    Flavor flavor = Flavor::H;
    std::vector<SetPartition> basis;
    /// |p v q| for every basis pair; independent of n.
    Matrix<int> join_blocks;
    RationalMatrix gram;
    std::optional<RationalMatrix> weingarten;
};

class SingularGramError : public std::runtime_error {
public:
    SingularGramError(int k, long n, Flavor flavor, std::size_t stage);
    int k() const { return k_; }
    long n() const { return n_; }
    Flavor flavor() const { return flavor_; }
    std::size_t stage() const { return stage_; }

private:
    int k_;
    long n_;
    Flavor flavor_;
    std::size_t stage_;
};

GramPair gram_matrix(int k, long n, Flavor flavor, GramOptions options = {});

/// Gram and Weingarten matrices, memoized per (k, n, flavor) for the process.
/// Safe to call from several threads.
std::shared_ptr<const GramPair> weingarten_matrix(int k, long n, Flavor flavor, GramOptions options = {});

/// Drops every memoized Weingarten matrix.
void clear_weingarten_cache();

/// The Gram matrix of the same basis with n replaced by s.
RationalMatrix gram_at(const GramPair& pair, long s);

/// Haar integral of u_{i_1 j_1} ... u_{i_k j_k} over the flavor's free quantum group.
Rational integrate_monomial(std::span<const int> i, std::span<const int> j, long n, Flavor flavor,
                            GramOptions options = {});

/// Moment of order k of u_11 + ... + u_ss, i.e. Tr(W_kn G_ks).
Rational character_moment(int k, long n, long s, Flavor flavor, GramOptions options = {});

/// floor(t n).
long truncation_size(long n, const Rational& t);

/// Sum over the flavor's non-crossing partitions of t^{blocks}.
RationalPolynomial asymptotic_moment_polynomial(int k, Flavor flavor);

struct AsymptoticMoment {
    RationalPolynomial polynomial;
    Rational value;
};

/// Large-n limit of character_moment(k, n, floor(tn)); t must lie in (0, 1].
AsymptoticMoment asymptotic_moment(int k, const Rational& t, Flavor flavor);

/// Inclusive 1-based range of diagonal indices.
struct IndexInterval {
    long first = 1;
    long last = 0;
    long size() const { return last - first + 1; }
};

/// Integral of u_{I_{c_1}} ... u_{I_{c_k}} where u_I is the diagonal sum over
/// interval I and c = pattern (zero-based interval labels).
Rational mixed_character_moment(std::span<const int> pattern, std::span<const IndexInterval> intervals, long n,
                                Flavor flavor, GramOptions options = {});

}  // namespace hplus
